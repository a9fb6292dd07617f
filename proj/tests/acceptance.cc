// Acceptance suite: one PASS/FAIL line per criterion, each checked against an
// independent oracle or a bundled fixture, with its tolerance and time budget.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "distractor/assembly.h"
#include "distractor/entity.h"
#include "distractor/eval.h"
#include "distractor/lexres.h"
#include "distractor/numeric.h"
#include "distractor/random.h"
#include "distractor/semantic.h"
#include "distractor/text.h"
#include "fixture_util.h"
#include "json.hpp"
#include "oracles.h"

using namespace distractor;

namespace {

// Collects failed expectations; only the first few are printed.
class Checker {
 public:
  void Expect(bool ok, const std::string &what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string> &failures() const { return failures_; }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

struct Criterion {
  std::string name;
  std::string tolerance;
  double budget_ms;
  std::function<void(Checker &)> body;
};

bool Run(const Criterion &c) {
  Checker check;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.body(check);
  } catch (const std::exception &e) {
    check.Expect(false, std::string("unexpected exception: ") + e.what());
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const bool in_budget = ms <= c.budget_ms;
  const bool pass = check.ok() && in_budget;
  std::printf("[%s] %-14s tolerance=%s budget=%.0fms elapsed=%.1fms checks=%zu\n",
              pass ? "PASS" : "FAIL", c.name.c_str(), c.tolerance.c_str(), c.budget_ms, ms,
              check.checks());
  for (std::size_t i = 0; i < check.failures().size() && i < 5; ++i) {
    std::printf("       %s\n", check.failures()[i].c_str());
  }
  if (!in_budget) std::printf("       over the time budget\n");
  return pass;
}

std::string Str(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// --- formula ---------------------------------------------------------------

void Formula(Checker &check) {
  check.Expect(EditDistanceScore(0) == 0.5, "s_d(0) = " + Str(EditDistanceScore(0)));
  check.Expect(std::abs(EditDistanceScore(1) - oracle::kSd1) <= 1e-9,
               "s_d(1) = " + Str(EditDistanceScore(1)));
  check.Expect(std::abs(EditDistanceScore(3) - oracle::kSd3) <= 1e-9,
               "s_d(3) = " + Str(EditDistanceScore(3)));
  check.Expect(EntropyRank(1.0) == 0.0, "r(1) = " + Str(EntropyRank(1.0)));

  int best = 0;
  double best_r = -1.0;
  for (int k = 1; k <= 1000; ++k) {
    double r = EntropyRank(k * 0.001);
    if (r > best_r) {
      best_r = r;
      best = k;
    }
  }
  // The grid point nearest 1/e is 0.368.
  const int expected = static_cast<int>(std::lround(std::exp(-1.0) / 0.001));
  check.Expect(best == expected, "grid argmax at " + std::to_string(best) + "e-3");
  check.Expect(std::abs(best_r - std::exp(-1.0)) <= 1e-6, "grid max r = " + Str(best_r));
}

// --- filter ----------------------------------------------------------------

std::string RandomWord(Rng &rng, std::size_t lo, std::size_t hi) {
  std::size_t n = lo + UniformBelow(rng, hi - lo + 1);
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(static_cast<char>('a' + UniformBelow(rng, 6)));
  return s;
}

std::string Mutate(std::string s, Rng &rng, int edits) {
  for (int e = 0; e < edits; ++e) {
    const std::size_t pos = UniformBelow(rng, s.size() + 1);
    const char c = static_cast<char>('a' + UniformBelow(rng, 6));
    switch (UniformBelow(rng, 3)) {
      case 0:
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(pos), c);
        break;
      case 1:
        if (pos < s.size()) s.erase(pos, 1);
        break;
      default:
        if (pos < s.size()) s[pos] = c;
    }
  }
  return s;
}

void Filter(Checker &check) {
  check.Expect(!PassesFilters("news", "breaking news"), "'breaking news' kept for 'news'");
  check.Expect(!PassesFilters("knowledge", "knowladge"), "'knowladge' kept for 'knowledge'");

  Rng rng = DeriveRng(2024, 0);
  int removed = 0, kept = 0;
  for (int i = 0; i < 200; ++i) {
    std::string target = RandomWord(rng, 3, 8);
    std::string candidate;
    switch (i % 4) {
      case 0:
        candidate = RandomWord(rng, 1, 10);
        break;
      case 1:
        candidate = RandomWord(rng, 0, 3) + target + RandomWord(rng, 0, 3);
        if (UniformBelow(rng, 2)) candidate = RandomWord(rng, 2, 5) + " " + target;
        break;
      case 2:
        candidate = target.substr(0, 3) + Mutate(target.substr(3), rng, 1 + int(UniformBelow(rng, 3)));
        break;
      default:
        candidate = Mutate(target, rng, 1 + int(UniformBelow(rng, 3)));
    }
    if (UniformBelow(rng, 4) == 0) candidate = ToUpper(candidate);
    const bool expected_removed = oracle::Removed(target, candidate);
    (expected_removed ? removed : kept)++;
    check.Expect(PassesFilters(target, candidate) == !expected_removed,
                 "target '" + target + "' candidate '" + candidate + "'");
  }
  // Both outcomes must be exercised for the property to mean anything.
  check.Expect(removed >= 40 && kept >= 40,
               "unbalanced cases: " + std::to_string(removed) + " removed, " +
                   std::to_string(kept) + " kept");
}

// --- wup -------------------------------------------------------------------

void WupSuite(Checker &check) {
  const std::vector<std::string> pool = {"ash", "birch", "cedar", "dogwood", "elm", "fir"};
  Rng rng = DeriveRng(99, 0);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + UniformBelow(rng, 10);
    oracle::Graph g;
    nlohmann::json doc = {{"synsets", nlohmann::json::array()}, {"antonyms", nlohmann::json::array()}};
    for (std::size_t s = 0; s < n; ++s) {
      std::set<std::size_t> parents;
      if (s > 0 && UniformBelow(rng, 5) != 0) {
        const std::size_t k = 1 + UniformBelow(rng, 2);
        for (std::size_t p = 0; p < k; ++p) parents.insert(UniformBelow(rng, s));
      }
      std::set<std::string> lemmas;
      const std::size_t k = 1 + UniformBelow(rng, 2);
      for (std::size_t l = 0; l < k; ++l) lemmas.insert(pool[UniformBelow(rng, pool.size())]);
      g.parents.emplace_back(parents.begin(), parents.end());
      g.lemmas.emplace_back(lemmas.begin(), lemmas.end());
      nlohmann::json hypernyms = nlohmann::json::array();
      for (std::size_t p : parents) hypernyms.push_back("s" + std::to_string(p));
      doc["synsets"].push_back({{"id", "s" + std::to_string(s)},
                                {"pos", "n"},
                                {"lemmas", g.lemmas.back()},
                                {"hypernyms", hypernyms}});
    }
    std::istringstream in(doc.dump());
    const LexicalGraph graph = LexicalGraph::Load(in);
    const std::string tag = "graph " + std::to_string(trial) + ": ";

    for (std::size_t s = 0; s < n; ++s) {
      check.Expect(graph.synsets()[s].depth == oracle::Depth(g, s),
                   tag + "depth of s" + std::to_string(s));
    }
    for (const auto &a : pool) {
      for (const auto &b : pool) {
        const auto got = graph.Wup(a, b);
        const auto want = oracle::Wup(g, a, b);
        const bool same = got.has_value() == want.has_value() &&
                          (!got || std::abs(*got - *want) <= 1e-12);
        check.Expect(same, tag + "wup(" + a + ", " + b + ") = " +
                               (got ? Str(*got) : "none") + ", oracle " +
                               (want ? Str(*want) : "none"));
        const auto back = graph.Wup(b, a);
        check.Expect(got.has_value() == back.has_value() && (!got || *got == *back),
                     tag + "asymmetric wup(" + a + ", " + b + ")");
        if (got) check.Expect(*got > 0.0 && *got <= 1.0, tag + "wup out of (0, 1]");
      }
      if (graph.Contains(a)) {
        const auto self = graph.Wup(a, a);
        check.Expect(self && *self == 1.0, tag + "wup(" + a + ", " + a + ") != 1");
      }
    }
  }
}

// --- neighborhood ----------------------------------------------------------

void NeighborhoodSuite(Checker &check) {
  struct Shape {
    std::size_t rows, dim;
  };
  const Shape shapes[] = {{10, 4}, {100, 8}, {1000, 16}, {10000, 24}};
  std::uint64_t stream = 0;
  for (const Shape &shape : shapes) {
    Rng rng = DeriveRng(31, stream++);
    std::vector<std::string> words;
    std::vector<std::vector<float>> rows;
    for (std::size_t i = 0; i < shape.rows; ++i) {
      std::vector<float> v(shape.dim);
      // A quarter of the rows copy or double an earlier row, forcing exact
      // similarity ties that must be ordered by word.
      if (i > 4 && UniformBelow(rng, 4) == 0) {
        v = rows[UniformBelow(rng, i)];
        if (UniformBelow(rng, 2)) {
          for (float &x : v) x *= 2.0f;
        }
      } else {
        bool nonzero = false;
        while (!nonzero) {
          for (float &x : v) {
            x = static_cast<float>(UniformInRange(rng, -1000, 1000)) / 1000.0f;
            nonzero = nonzero || x != 0.0f;
          }
        }
      }
      rows.push_back(std::move(v));
      words.push_back("w" + std::to_string(i));
    }
    // Insertion order differs from lexicographic order.
    std::vector<std::size_t> order(shape.rows);
    for (std::size_t i = 0; i < shape.rows; ++i) order[i] = i;
    Shuffle(order, rng);
    VectorTable table;
    for (std::size_t i : order) table.Add(words[i], rows[i]);

    const std::pair<double, double> intervals[] = {{0.6, 0.85}, {-1.0, 1.0}, {0.0, 0.3}, {0.9, 1.0}};
    for (int q = 0; q < 5; ++q) {
      const std::size_t target = UniformBelow(rng, shape.rows);
      for (const auto &[lo, hi] : intervals) {
        const auto got = table.Neighborhood(words[target], lo, hi);
        const auto want = oracle::Neighborhood(words, rows, target, lo, hi);
        bool same = got.size() == want.size();
        for (std::size_t k = 0; same && k < got.size(); ++k) {
          same = got[k].word == want[k].word && got[k].similarity == want[k].similarity;
        }
        check.Expect(same, std::to_string(shape.rows) + " rows, target " + words[target] +
                               ", [" + Str(lo) + ", " + Str(hi) + "]: " +
                               std::to_string(got.size()) + " vs " +
                               std::to_string(want.size()) + " neighbours");
      }
    }
  }
}

// --- numeric ---------------------------------------------------------------

void NumericSuite(Checker &check) {
  const char *const days[] = {"Monday", "Tuesday", "Wednesday", "Thursday",
                              "Friday", "Saturday", "Sunday"};
  Rng rng(0);
  const auto friday = RecognizeNumeric("Friday");
  check.Expect(friday && friday->value == 5, "Friday is not weekday 5");
  if (friday) {
    const auto thursday = Perturb(*friday, UnitShift{-1}, rng);
    check.Expect(thursday.value == 4 && Render(thursday) == "Thursday",
                 "Friday - 1 renders '" + Render(thursday) + "'");
  }
  int cases = 0;
  for (int d = 0; d < 7; ++d) {
    const auto day = RecognizeNumeric(days[d]);
    check.Expect(day && day->value == d + 1, std::string(days[d]) + " misrecognized");
    if (!day) continue;
    for (int delta : {-2, -1, 1, 2}) {
      const std::string got = Render(Perturb(*day, UnitShift{delta}, rng));
      const std::string want = days[((d + delta) % 7 + 7) % 7];
      check.Expect(got == want, std::string(days[d]) + " shifted by " +
                                    std::to_string(delta) + " gave " + got);
      ++cases;
    }
  }
  check.Expect(cases == 28, "weekday cases enumerated: " + std::to_string(cases));

  const fixture::Corpus corpus = fixture::Load();
  const QAPair *qap = nullptr;
  for (const auto &q : corpus.qaps) {
    if (q.answer_text == "by 2020.") qap = &q;
  }
  check.Expect(qap != nullptr, "fixture QAP 'by 2020.' missing");
  if (!qap) return;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng qrng = DeriveRng(seed, 0);
    const MCQ m = GenerateMcq(*qap, corpus.articles.at(qap->article_id), corpus.resources(),
                              Config{}, qrng);
    std::set<std::string> seen;
    for (const auto &d : m.distractors) {
      const bool shape = d.size() == 8 && d.rfind("by ", 0) == 0 && d.back() == '.' &&
                         std::all_of(d.begin() + 3, d.begin() + 7,
                                     [](char c) { return c >= '0' && c <= '9'; });
      check.Expect(shape && d != "by 2020.", "seed " + std::to_string(seed) + ": '" + d + "'");
      seen.insert(d);
    }
    check.Expect(m.distractors.size() == 3 && seen.size() == 3,
                 "seed " + std::to_string(seed) + ": distractors not 3 distinct years");
  }
}

// --- entity ----------------------------------------------------------------

AnnotatedArticle ArticleNaming(const std::vector<std::string> &names, EntityTag tag) {
  AnnotatedSentence s;
  for (const auto &name : names) {
    if (!s.text.empty()) {
      s.tokens.push_back({"and", "and", Pos::kOther, EntityTag::kNone,
                          {s.text.size() + 1, s.text.size() + 4}});
      s.text += " and ";
    }
    const std::size_t begin = s.text.size();
    s.text += name;
    s.tokens.push_back({name, name, Pos::kNoun, tag, {begin, s.text.size()}});
  }
  s.text += " met.";
  s.tokens.push_back({"met", "meet", Pos::kVerb, EntityTag::kNone, {s.text.size() - 4, s.text.size() - 1}});
  s.tokens.push_back({".", ".", Pos::kOther, EntityTag::kNone, {s.text.size() - 1, s.text.size()}});
  ValidateSentence(s);
  return {"generated", {s}};
}

void EntitySuite(Checker &check) {
  const KnowledgeBase kb = KnowledgeBase::LoadFile(DATA_DIR "/fixtures/kb.json");
  const auto peers = kb.Peers(EntityTag::kLocation, "New York");
  for (const char *city : {"Boston", "Philadelphia", "Chicago"}) {
    check.Expect(std::find(peers.begin(), peers.end(), city) != peers.end(),
                 std::string(city) + " is not a peer of New York");
  }
  check.Expect(std::find(peers.begin(), peers.end(), "New York") == peers.end(),
               "New York is its own peer");

  TargetWord target;
  target.surface = "New York";
  target.span = {0, target.surface.size()};
  target.type = TargetType::kT2Location;
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    Rng rng = DeriveRng(5, trial);
    std::vector<std::string> pool = peers;
    Shuffle(pool, rng);
    const std::size_t k = UniformBelow(rng, 6);
    std::vector<std::string> in_article(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<std::string> names = in_article;
    names.insert(names.begin() + static_cast<std::ptrdiff_t>(UniformBelow(rng, k + 1)), "New York");
    const AnnotatedArticle article = ArticleNaming(names, EntityTag::kLocation);

    const auto draws = DrawEntityDistractors(target, article, kb, 3, rng);
    const std::string tag = "trial " + std::to_string(trial) + " (" + std::to_string(k) +
                            " article cities): ";
    check.Expect(draws.size() == 3, tag + "got " + std::to_string(draws.size()) + " draws");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < draws.size(); ++i) {
      const bool listed = std::find(in_article.begin(), in_article.end(), draws[i].text) !=
                          in_article.end();
      // The first min(k, 3) draws come from the article, the rest from the KB.
      const bool want_article = i < std::min<std::size_t>(k, 3);
      check.Expect(draws[i].from_article == want_article && listed == want_article,
                   tag + "draw " + std::to_string(i) + " '" + draws[i].text + "'");
      check.Expect(std::find(peers.begin(), peers.end(), draws[i].text) != peers.end(),
                   tag + "'" + draws[i].text + "' is not a KB peer");
      check.Expect(seen.insert(draws[i].text).second, tag + "repeated '" + draws[i].text + "'");
    }
  }
}

// --- end to end ------------------------------------------------------------

std::string Serialize(const std::vector<McqOutcome> &outcomes) {
  std::string out;
  for (const auto &o : outcomes) {
    out += o.mcq ? McqToJson(*o.mcq).dump() : "error: " + o.error;
    out += '\n';
  }
  return out;
}

void EndToEnd(Checker &check) {
  const fixture::Corpus corpus = fixture::Load();
  const auto first = GenerateAll(corpus.qaps, corpus.articles, corpus.resources(), Config{}, 7, 1);
  const auto second = GenerateAll(corpus.qaps, corpus.articles, corpus.resources(), Config{}, 7, 1);
  check.Expect(corpus.qaps.size() == 10, "fixture has " + std::to_string(corpus.qaps.size()) + " QAPs");
  check.Expect(Serialize(first) == Serialize(second), "two runs with seed 7 differ");

  for (std::size_t i = 0; i < first.size(); ++i) {
    const std::string tag = "QAP " + std::to_string(i) + ": ";
    if (!first[i].mcq) {
      check.Expect(false, tag + first[i].error);
      continue;
    }
    const MCQ &m = *first[i].mcq;
    check.Expect(m.distractors.size() == 3,
                 tag + std::to_string(m.distractors.size()) + " distractors");
    const auto targets =
        ClassifyTargets(corpus.qaps[i], corpus.articles.at(m.article_id), &corpus.kb);
    for (std::size_t k = 0; k < m.distractors.size() && k < m.provenance.size(); ++k) {
      const auto t = std::find_if(targets.begin(), targets.end(), [&](const TargetWord &w) {
        return w.surface == m.provenance[k].target;
      });
      check.Expect(t != targets.end() && m.distractors[k] != m.answer &&
                       fixture::DiffConfined(m.answer, m.distractors[k], t->span.begin,
                                             t->span.end),
                   tag + "'" + m.distractors[k] + "' differs outside one target span");
    }
  }
}

// --- eval ------------------------------------------------------------------

void EvalSuite(Checker &check) {
  std::ifstream mcqs(DATA_DIR "/fixtures/eval_mcqs.jsonl");
  std::ifstream labels(DATA_DIR "/fixtures/eval_labels.jsonl");
  const EvalReport r = ComputeReport(ParseMcqs(mcqs), ParseLabels(labels));
  check.Expect(r.relevant == 296 && r.sufficient == 291 && r.distractors == 303,
               "distractor counts " + std::to_string(r.relevant) + "/" +
                   std::to_string(r.sufficient) + "/" + std::to_string(r.distractors));
  check.Expect(r.adequate_mcqs == 85 && r.mcqs == 101, "adequate MCQs " +
                                                           std::to_string(r.adequate_mcqs) + "/" +
                                                           std::to_string(r.mcqs));
  check.Expect(std::abs(r.pct_relevant - 97.7) <= 0.05, "relevant " + Str(r.pct_relevant));
  check.Expect(std::abs(r.pct_sufficient - 96.0) <= 0.05, "sufficient " + Str(r.pct_sufficient));
  check.Expect(std::abs(r.pct_adequate_mcq - 84.2) <= 0.05, "adequate " + Str(r.pct_adequate_mcq));
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"formula", "1e-9 vs 40-digit constants", 1000, Formula},
      {"filter", "exact predicate, 200 random cases", 1000, Filter},
      {"wup", "1e-12 vs brute force", 1000, WupSuite},
      {"neighborhood", "exact values and order", 10000, NeighborhoodSuite},
      {"numeric", "exact", 1000, NumericSuite},
      {"entity", "exact", 1000, EntitySuite},
      {"end_to_end", "byte-identical", 5000, EndToEnd},
      {"eval", "+/-0.05 points", 1000, EvalSuite},
  };
  int failed = 0;
  for (const auto &c : criteria) failed += Run(c) ? 0 : 1;
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
