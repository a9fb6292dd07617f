#include "distractor/lexres.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <fstream>
#include <sstream>

#include "distractor/error.h"
#include "distractor/text.h"
#include "json.hpp"

namespace distractor {
namespace {

double Dot(std::span<const float> a, std::span<const float> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += static_cast<double>(a[i]) * static_cast<double>(b[i]);
  }
  return sum;
}

double Norm(std::span<const float> a) { return std::sqrt(Dot(a, a)); }

double Clamp(double x) { return std::clamp(x, -1.0, 1.0); }

bool ParseFloat(std::string_view text, float *out) {
  // std::from_chars for floats is missing from older libstdc++ releases.
  std::string s(text);
  char *end = nullptr;
  errno = 0;
  *out = std::strtof(s.c_str(), &end);
  return end == s.c_str() + s.size() && errno == 0 && std::isfinite(*out);
}

bool ParseSize(std::string_view text, std::size_t *out) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), *out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

double Cosine(std::span<const float> a, std::span<const float> b) {
  if (a.size() != b.size()) {
    throw DimensionError("cosine of vectors with dimensions " +
                         std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
  }
  const double na = Norm(a);
  const double nb = Norm(b);
  if (na == 0.0 || nb == 0.0) throw DimensionError("cosine of a zero vector");
  return Clamp(Dot(a, b) / (na * nb));
}

// --- VectorTable ---------------------------------------------------------

void VectorTable::Add(std::string word, std::vector<float> vector) {
  if (word.empty()) throw ValidationError("empty word in vector table");
  if (vector.empty()) throw ValidationError("empty vector for '" + word + "'");
  if (dimension_ == 0) dimension_ = vector.size();
  if (vector.size() != dimension_) {
    throw ValidationError("vector for '" + word + "' has dimension " +
                          std::to_string(vector.size()) + ", expected " +
                          std::to_string(dimension_));
  }
  const double norm = Norm(vector);
  if (norm == 0.0) throw ValidationError("zero vector for '" + word + "'");
  if (index_.count(word)) throw ValidationError("duplicate word '" + word + "'");
  index_.emplace(word, words_.size());
  words_.push_back(std::move(word));
  data_.insert(data_.end(), vector.begin(), vector.end());
  norms_.push_back(norm);
}

VectorTable VectorTable::Load(std::istream &in) {
  VectorTable table;
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> declared_count;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto fields = SplitWhitespace(line);
    if (fields.empty()) continue;
    if (line_no == 1 && fields.size() == 2) {
      std::size_t count = 0, dim = 0;
      if (ParseSize(fields[0], &count) && ParseSize(fields[1], &dim)) {
        if (dim == 0) throw ParseError("header declares dimension 0", 1, "dimension");
        declared_count = count;
        table.dimension_ = dim;
        continue;
      }
    }
    if (fields.size() < 2) {
      throw ParseError("expected a word followed by values", line_no, "vector");
    }
    if (table.dimension_ != 0 && fields.size() - 1 != table.dimension_) {
      throw ParseError("expected " + std::to_string(table.dimension_) +
                           " values, found " + std::to_string(fields.size() - 1),
                       line_no, "vector");
    }
    std::vector<float> values(fields.size() - 1);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      if (!ParseFloat(fields[i], &values[i - 1])) {
        throw ParseError("bad number '" + fields[i] + "'", line_no, "vector");
      }
    }
    try {
      table.Add(fields[0], std::move(values));
    } catch (const ValidationError &e) {
      throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (declared_count && *declared_count != table.size()) {
    throw ParseError("header declares " + std::to_string(*declared_count) +
                         " words, found " + std::to_string(table.size()),
                     1, "count");
  }
  return table;
}

VectorTable VectorTable::LoadFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  return Load(in);
}

bool VectorTable::Contains(std::string_view word) const {
  return index_.find(word) != index_.end();
}

std::optional<std::span<const float>> VectorTable::Find(std::string_view word) const {
  auto it = index_.find(word);
  if (it == index_.end()) return std::nullopt;
  return Row(it->second);
}

std::vector<Neighbor> VectorTable::Neighborhood(std::string_view word, double lo,
                                                double hi) const {
  auto it = index_.find(word);
  if (it == index_.end()) {
    throw OutOfVocabularyError("'" + std::string(word) + "' is not in the vector table");
  }
  const std::size_t target = it->second;
  const auto v = Row(target);
  const double nv = norms_[target];
  std::vector<Neighbor> out;
  for (std::size_t row = 0; row < words_.size(); ++row) {
    if (row == target) continue;
    const double sim = Clamp(Dot(Row(row), v) / (norms_[row] * nv));
    if (sim >= lo && sim <= hi) out.push_back({words_[row], sim});
  }
  std::sort(out.begin(), out.end(), [](const Neighbor &a, const Neighbor &b) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return a.word < b.word;
  });
  return out;
}

// --- LexicalGraph --------------------------------------------------------

std::string NormalizeLemma(std::string_view lemma) {
  std::string s = ToLower(Trim(lemma));
  std::replace(s.begin(), s.end(), '_', ' ');
  return NormalizeKey(s);
}

LexicalGraph LexicalGraph::Load(std::istream &in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("lexical graph: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("synsets") || !doc["synsets"].is_array()) {
    throw ParseError("lexical graph: missing 'synsets' list", 0, "synsets");
  }

  LexicalGraph g;
  std::map<std::string, std::size_t> ids;
  std::vector<std::vector<std::string>> parent_ids;
  for (const auto &node : doc["synsets"]) {
    Synset s;
    try {
      s.id = node.at("id").get<std::string>();
      s.pos = node.value("pos", std::string());
      s.lemmas = node.at("lemmas").get<std::vector<std::string>>();
      parent_ids.push_back(
          node.value("hypernyms", std::vector<std::string>()));
    } catch (const nlohmann::json::exception &e) {
      throw ParseError(std::string("lexical graph synset: ") + e.what(), 0, "synsets");
    }
    if (s.id.empty()) throw ValidationError("lexical graph: empty synset id");
    if (s.lemmas.empty()) {
      throw ValidationError("lexical graph: synset '" + s.id + "' has no lemmas");
    }
    if (!ids.emplace(s.id, g.synsets_.size()).second) {
      throw ValidationError("lexical graph: duplicate synset id '" + s.id + "'");
    }
    g.synsets_.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < g.synsets_.size(); ++i) {
    for (const auto &pid : parent_ids[i]) {
      auto it = ids.find(pid);
      if (it == ids.end()) {
        throw ValidationError("lexical graph: synset '" + g.synsets_[i].id +
                              "' names unknown hypernym '" + pid + "'");
      }
      g.synsets_[i].hypernyms.push_back(it->second);
    }
  }
  if (doc.contains("antonyms")) {
    for (const auto &pair : doc["antonyms"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
          !pair[1].is_string()) {
        throw ParseError("lexical graph: antonyms must be lemma pairs", 0, "antonyms");
      }
      std::string a = NormalizeLemma(pair[0].get<std::string>());
      std::string b = NormalizeLemma(pair[1].get<std::string>());
      if (a == b) {
        throw ValidationError("lexical graph: '" + a + "' listed as its own antonym");
      }
      g.antonyms_.emplace(a, b);
      g.antonyms_.emplace(b, a);
    }
  }
  g.Finalize();
  return g;
}

LexicalGraph LexicalGraph::LoadFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  return Load(in);
}

void LexicalGraph::Finalize() {
  const std::size_t n = synsets_.size();
  // Cycle check by iterative DFS colouring.
  std::vector<int> colour(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (colour[start]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack = {{start, 0}};
    colour[start] = 1;
    while (!stack.empty()) {
      auto &[node, next] = stack.back();
      if (next < synsets_[node].hypernyms.size()) {
        std::size_t parent = synsets_[node].hypernyms[next++];
        if (colour[parent] == 1) {
          throw ValidationError("lexical graph: hypernym cycle through '" +
                                synsets_[parent].id + "'");
        }
        if (colour[parent] == 0) {
          colour[parent] = 1;
          stack.emplace_back(parent, 0);
        }
      } else {
        colour[node] = 2;
        stack.pop_back();
      }
    }
  }

  // Depth is the shortest path to any root, counted in nodes.
  std::vector<std::vector<std::size_t>> children(n);
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i) {
    synsets_[i].depth = 0;
    for (std::size_t p : synsets_[i].hypernyms) children[p].push_back(i);
    if (synsets_[i].hypernyms.empty()) {
      synsets_[i].depth = 1;
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    std::size_t node = queue.front();
    queue.pop_front();
    for (std::size_t child : children[node]) {
      if (synsets_[child].depth == 0) {
        synsets_[child].depth = synsets_[node].depth + 1;
        queue.push_back(child);
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (const auto &lemma : synsets_[i].lemmas) {
      auto &list = lemma_index_[NormalizeLemma(lemma)];
      if (list.empty() || list.back() != i) list.push_back(i);
    }
  }
}

std::vector<std::size_t> LexicalGraph::SynsetsOf(std::string_view lemma) const {
  auto it = lemma_index_.find(NormalizeLemma(lemma));
  if (it == lemma_index_.end()) return {};
  return it->second;
}

std::set<std::size_t> LexicalGraph::Ancestors(std::size_t synset) const {
  std::set<std::size_t> seen = {synset};
  std::vector<std::size_t> stack = {synset};
  while (!stack.empty()) {
    std::size_t node = stack.back();
    stack.pop_back();
    for (std::size_t p : synsets_[node].hypernyms) {
      if (seen.insert(p).second) stack.push_back(p);
    }
  }
  return seen;
}

std::optional<double> LexicalGraph::Wup(std::string_view a, std::string_view b) const {
  const auto sa = SynsetsOf(a);
  const auto sb = SynsetsOf(b);
  std::optional<double> best;
  for (std::size_t x : sa) {
    const auto ancestors = Ancestors(x);
    for (std::size_t y : sb) {
      // Deepest ancestor of y that is also an ancestor of x.
      int lcs_depth = 0;
      for (std::size_t z : Ancestors(y)) {
        if (ancestors.count(z)) lcs_depth = std::max(lcs_depth, synsets_[z].depth);
      }
      if (lcs_depth == 0) continue;
      double score = 2.0 * lcs_depth / (synsets_[x].depth + synsets_[y].depth);
      score = std::min(score, 1.0);
      if (!best || score > *best) best = score;
    }
  }
  return best;
}

bool LexicalGraph::IsAntonym(std::string_view a, std::string_view b) const {
  return antonyms_.count({NormalizeLemma(a), NormalizeLemma(b)}) > 0;
}

std::vector<std::string> LexicalGraph::HypernymCandidates(std::string_view word) const {
  const std::string self = NormalizeLemma(word);
  std::vector<std::string> out;
  std::set<std::string> seen = {self};
  for (std::size_t s : SynsetsOf(word)) {
    for (std::size_t p : synsets_[s].hypernyms) {
      for (const auto &lemma : synsets_[p].lemmas) {
        std::string key = NormalizeLemma(lemma);
        if (seen.insert(key).second) out.push_back(key);
      }
    }
  }
  return out;
}

}  // namespace distractor
