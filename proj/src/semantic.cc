#include "distractor/semantic.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "distractor/error.h"
#include "distractor/text.h"

namespace distractor {

std::size_t Levenshtein(std::string_view a, std::string_view b) {
  const std::u32string x = DecodeUtf8(a);
  const std::u32string y = DecodeUtf8(b);
  std::vector<std::size_t> row(y.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= x.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= y.size(); ++j) {
      const std::size_t above = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                         diagonal + (x[i - 1] == y[j - 1] ? 0 : 1)});
      diagonal = above;
    }
  }
  return row[y.size()];
}

double EditDistanceScore(std::size_t distance, bool inverted) {
  const double logistic = 1.0 / (1.0 + std::exp(static_cast<double>(distance)));
  return inverted ? logistic : 1.0 - logistic;
}

double RankPrime(double s_v, double s_n, double s_d, bool antonym) {
  const double v = std::max(s_v, 0.0);
  return antonym ? (2.0 * v + s_n + s_d) / 4.0 : (v + s_n + s_d) / 3.0;
}

double EntropyRank(double r_prime) {
  if (r_prime == 1.0) return 0.0;
  return -r_prime * std::log(r_prime);
}

namespace {

std::string Underscored(std::string_view s) {
  std::string out(s);
  std::replace(out.begin(), out.end(), ' ', '_');
  return out;
}

std::string Spaced(std::string_view s) {
  std::string out(s);
  std::replace(out.begin(), out.end(), '_', ' ');
  return out;
}

std::string LastWord(std::string_view s) {
  auto words = SplitWhitespace(Spaced(s));
  return words.empty() ? std::string() : words.back();
}

// Lookup keys for a target: surface, lowercase, underscore-joined, lemma.
std::vector<std::string> LookupKeys(const TargetWord &t) {
  std::vector<std::string> keys;
  for (std::string k : {t.surface, ToLower(t.surface), Underscored(t.surface),
                        Underscored(ToLower(t.surface)), t.lemma,
                        Underscored(t.lemma)}) {
    if (!k.empty() && std::find(keys.begin(), keys.end(), k) == keys.end()) {
      keys.push_back(std::move(k));
    }
  }
  return keys;
}

std::size_t CommonPrefix(std::string_view a, std::string_view b) {
  std::size_t n = 0;
  while (n < a.size() && n < b.size() && a[n] == b[n]) ++n;
  return n;
}

}  // namespace

std::vector<SourcedCandidate> GenerateCandidates(const TargetWord &target,
                                                 const LexicalResources &res,
                                                 double lo, double hi) {
  std::vector<SourcedCandidate> out;
  std::set<std::string> seen = {NormalizeKey(Spaced(target.surface))};
  auto add = [&](std::string text, double s_v, bool embedding) {
    text = Spaced(text);
    std::string key = NormalizeKey(text);
    if (key.empty()) return;
    if (!seen.insert(key).second) {
      for (auto &c : out) {
        if (NormalizeKey(c.text) == key) {
          (embedding ? c.from_embedding : c.from_hypernym) = true;
        }
      }
      return;
    }
    SourcedCandidate c;
    c.text = std::move(text);
    c.s_v = s_v;
    c.from_embedding = embedding;
    c.from_hypernym = !embedding;
    out.push_back(std::move(c));
  };

  if (res.vectors) {
    for (const auto &key : LookupKeys(target)) {
      if (!res.vectors->Contains(key)) continue;
      for (const auto &n : res.vectors->Neighborhood(key, lo, hi)) {
        add(n.word, n.similarity, true);
      }
      break;
    }
  }
  if (res.graph) {
    for (const auto &key : LookupKeys(target)) {
      if (!res.graph->Contains(key)) continue;
      for (auto &lemma : res.graph->HypernymCandidates(key)) add(lemma, lo, false);
      break;
    }
  }
  return out;
}

std::vector<SourcedCandidate> GenerateCandidates(const TargetWord &target,
                                                 const LexicalResources &res,
                                                 const Config &config) {
  return GenerateCandidates(target, res, config.sim_lo, config.sim_hi);
}

bool PassesFilters(std::string_view target, std::string_view candidate) {
  const std::string t = ToLower(Spaced(target));
  const std::string c = ToLower(Spaced(candidate));
  if (t.empty()) return true;
  for (const auto &word : SplitWhitespace(c)) {
    if (word == t) return false;
  }
  if (c.find(t) != std::string::npos) return false;
  if (CommonPrefix(t, c) >= 3 && Levenshtein(c, t) < 3) return false;
  return true;
}

std::vector<std::string> FilterCandidates(const TargetWord &target,
                                          const std::vector<std::string> &candidates) {
  std::vector<std::string> out;
  for (const auto &c : candidates) {
    if (PassesFilters(target.surface, c)) out.push_back(c);
  }
  return out;
}

Candidate ScoreCandidate(const TargetWord &target, std::string_view candidate,
                         double s_v, const LexicalResources &res,
                         const Config &config) {
  Candidate c;
  c.text = std::string(candidate);
  c.s_v = s_v;

  std::optional<double> wup;
  if (res.graph) {
    std::vector<std::string> target_keys = {target.surface, target.lemma};
    std::vector<std::string> candidate_keys = {c.text};
    if (std::string head = LastWord(c.text); head != c.text) {
      candidate_keys.push_back(head);
    }
    if (std::string head = LastWord(target.surface); head != target.surface) {
      target_keys.push_back(head);
    }
    for (const auto &ck : candidate_keys) {
      for (const auto &tk : target_keys) {
        if (!wup && !tk.empty()) wup = res.graph->Wup(ck, tk);
      }
    }
    c.antonym = res.graph->IsAntonym(c.text, target.surface) ||
                (!target.lemma.empty() && res.graph->IsAntonym(c.text, target.lemma));
  }
  c.s_n = wup.value_or(config.wup_fallback);
  c.s_d = EditDistanceScore(Levenshtein(ToLower(c.text), ToLower(target.surface)),
                            config.sd_inverted);
  c.r_prime = RankPrime(c.s_v, c.s_n, c.s_d, c.antonym);
  if (!(c.r_prime > 0.0 && c.r_prime <= 1.0)) {
    throw Error("ranking score r' = " + std::to_string(c.r_prime) +
                " outside (0, 1] for '" + c.text + "'");
  }
  c.r = EntropyRank(c.r_prime);
  return c;
}

std::vector<Candidate> RankAndSelect(std::vector<Candidate> candidates,
                                     std::size_t k) {
  if (k == 0) throw ValidationError("selection size must be >= 1");
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate &a, const Candidate &b) {
                     if (a.r != b.r) return a.r > b.r;
                     if (a.s_v != b.s_v) return a.s_v > b.s_v;
                     return a.text < b.text;
                   });
  if (candidates.size() > k) candidates.resize(k);
  return candidates;
}

std::vector<Candidate> RankedSemanticCandidates(const TargetWord &target,
                                                const LexicalResources &res,
                                                const Config &config, double lo,
                                                double hi) {
  std::vector<Candidate> scored;
  for (const auto &c : GenerateCandidates(target, res, lo, hi)) {
    if (!PassesFilters(target.surface, c.text)) continue;
    scored.push_back(ScoreCandidate(target, c.text, c.s_v, res, config));
  }
  if (scored.empty()) return scored;
  const std::size_t n = scored.size();
  return RankAndSelect(std::move(scored), n);
}

}  // namespace distractor
