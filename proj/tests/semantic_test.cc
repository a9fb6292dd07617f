#include "distractor/semantic.h"

#include <cmath>
#include <set>
#include <sstream>

#include "distractor/error.h"
#include "doctest.h"

using namespace distractor;

namespace {

TargetWord Noun(const std::string &surface, const std::string &lemma = "") {
  TargetWord t;
  t.surface = surface;
  t.lemma = lemma.empty() ? surface : lemma;
  t.span = {0, surface.size()};
  return t;
}

struct Fixture {
  VectorTable vectors = VectorTable::LoadFile(DATA_DIR "/fixtures/vectors.txt");
  LexicalGraph graph = LexicalGraph::LoadFile(DATA_DIR "/fixtures/lexgraph.json");
  LexicalResources res() const { return {&vectors, &graph}; }
};

std::vector<std::string> Texts(const std::vector<Candidate> &cs) {
  std::vector<std::string> out;
  for (const auto &c : cs) out.push_back(c.text);
  return out;
}

}  // namespace

TEST_CASE("levenshtein") {
  CHECK(Levenshtein("knowledge", "knowladge") == 1);
  CHECK(Levenshtein("profession", "profession") == 0);
  CHECK(Levenshtein("", "abc") == 3);
  CHECK(Levenshtein("abc", "") == 3);
  CHECK(Levenshtein("kitten", "sitting") == 3);
  CHECK(Levenshtein("café", "cafe") == 1);
}

TEST_CASE("edit distance score") {
  CHECK(EditDistanceScore(0) == 0.5);
  CHECK(EditDistanceScore(1) == doctest::Approx(0.7310585786300049).epsilon(1e-12));
  CHECK(EditDistanceScore(1, true) == doctest::Approx(1 - 0.7310585786300049).epsilon(1e-12));
  for (std::size_t e = 0; e < 30; ++e) {
    CHECK(EditDistanceScore(e + 1) > EditDistanceScore(e));
    CHECK(EditDistanceScore(e) < 1.0);
  }
}

TEST_CASE("rank formulas") {
  const double s_d = EditDistanceScore(1);
  const double rp = RankPrime(0.7, 0.5, s_d, false);
  CHECK(rp == doctest::Approx(0.6436861928766683).epsilon(1e-12));
  CHECK(EntropyRank(rp) == doctest::Approx(0.2835720578275650).epsilon(1e-12));
  CHECK(EntropyRank(1.0) == 0.0);
  CHECK(EntropyRank(0.5) > 0.0);
  CHECK(RankPrime(-0.4, 0.5, 0.5, false) == RankPrime(0.0, 0.5, 0.5, false));
  CHECK(RankPrime(0.8, 0.1, 0.9, true) == doctest::Approx((1.6 + 0.1 + 0.9) / 4));
  const double e_inv = std::exp(-1.0);
  CHECK(EntropyRank(e_inv) > EntropyRank(e_inv - 1e-3));
  CHECK(EntropyRank(e_inv) > EntropyRank(e_inv + 1e-3));
  // Antonym weighting wins when s_v exceeds the mean of the other two.
  CHECK(RankPrime(0.8, 0.2, 0.6, true) > RankPrime(0.8, 0.2, 0.6, false));
}

TEST_CASE("filters") {
  CHECK_FALSE(PassesFilters("news", "breaking news"));
  CHECK_FALSE(PassesFilters("knowledge", "knowladge"));
  CHECK(PassesFilters("profession", "association"));
  CHECK_FALSE(PassesFilters("News", "NEWSPAPER"));
  CHECK_FALSE(PassesFilters("cost", "costs"));
  CHECK(PassesFilters("life", "lives"));
  CHECK_FALSE(PassesFilters("experienced", "inexperienced"));
  CHECK(PassesFilters("door", "dour"));
  TargetWord t = Noun("insights");
  auto kept = FilterCandidates(t, {"perspectives", "insight", "findings", "insights!"});
  CHECK(kept == std::vector<std::string>{"perspectives", "findings"});
  CHECK(FilterCandidates(t, kept) == kept);
}

TEST_CASE("candidate generation") {
  Fixture f;
  Config config;
  auto names = [](const std::vector<SourcedCandidate> &cs) {
    std::vector<std::string> out;
    for (const auto &c : cs) out.push_back(c.text);
    return out;
  };
  CHECK(names(GenerateCandidates(Noun("decision"), f.res(), config)) ==
        std::vector<std::string>{"request", "proposition"});
  CHECK(GenerateCandidates(Noun("mistake"), f.res(), config).empty());
  CHECK(GenerateCandidates(Noun("mistake"), LexicalResources{}, config).empty());

  auto door = GenerateCandidates(Noun("door"), f.res(), config);
  REQUIRE(door.size() == 4);
  CHECK(door.back().text == "movable barrier");
  CHECK(door.back().from_hypernym);
  CHECK(door.back().s_v == config.sim_lo);

  // "gate" is both a wide neighbour and a sibling; hypernym of "gate" is the
  // same node as door's, so it shows once.
  auto gate = GenerateCandidates(Noun("gate"), f.res(), 0.0, 1.0);
  int barrier = 0;
  for (const auto &c : gate) barrier += c.text == "movable barrier";
  CHECK(barrier == 1);

  // Plural surface falls back to the lemma.
  auto plural = GenerateCandidates(Noun("Creaks", "creak"), f.res(), config);
  CHECK(names(plural) == std::vector<std::string>{"creaking", "knock"});
}

TEST_CASE("candidate scoring") {
  Fixture f;
  Config config;
  Candidate c = ScoreCandidate(Noun("door"), "gate", 0.88, f.res(), config);
  CHECK(c.s_n == doctest::Approx(2.0 * 4 / 10));
  CHECK(c.s_d == doctest::Approx(EditDistanceScore(4)));
  CHECK_FALSE(c.antonym);
  CHECK(c.r_prime == doctest::Approx((0.88 + 0.8 + c.s_d) / 3));
  CHECK(c.r == doctest::Approx(-c.r_prime * std::log(c.r_prime)));

  Candidate unknown = ScoreCandidate(Noun("cost"), "risk", 0.7, f.res(), config);
  CHECK(unknown.s_n == config.wup_fallback);

  TargetWord exp = Noun("experienced");
  Candidate ant = ScoreCandidate(exp, "inexperienced", 0.78, f.res(), config);
  CHECK(ant.antonym);
  CHECK(ant.r_prime == doctest::Approx((2 * 0.78 + 0.1 + EditDistanceScore(2)) / 4));

  config.sd_inverted = true;
  Candidate inv = ScoreCandidate(Noun("cost"), "risk", 0.7, f.res(), config);
  CHECK(inv.s_d == doctest::Approx(1.0 - unknown.s_d));

  Candidate cased = ScoreCandidate(Noun("Internet"), "internet", 0.7, LexicalResources{}, Config{});
  CHECK(cased.s_d == 0.5);
}

TEST_CASE("rank and select") {
  auto make = [](const char *text, double r, double s_v) {
    Candidate c;
    c.text = text;
    c.r = r;
    c.s_v = s_v;
    return c;
  };
  std::vector<Candidate> cs = {make("d", 0.10, 0.7), make("a", 0.30, 0.7),
                               make("c", 0.20, 0.7), make("b", 0.25, 0.7)};
  CHECK(Texts(RankAndSelect(cs, 3)) == std::vector<std::string>{"a", "b", "c"});
  CHECK(Texts(RankAndSelect({make("x", 0.3, 0.6), make("y", 0.3, 0.8)}, 3)) ==
        std::vector<std::string>{"y", "x"});
  CHECK(Texts(RankAndSelect({make("q", 0.3, 0.6), make("p", 0.3, 0.6)}, 1)) ==
        std::vector<std::string>{"p"});
  CHECK(RankAndSelect({}, 3).empty());
  CHECK_THROWS_AS(RankAndSelect(cs, 0), ValidationError);
}

TEST_CASE("ranked candidates reproduce the fixture examples") {
  Fixture f;
  Config config;
  auto ranked = [&](const char *surface, const char *lemma = "") {
    return Texts(RankedSemanticCandidates(Noun(surface, lemma), f.res(), config,
                                          config.sim_lo, config.sim_hi));
  };
  CHECK(ranked("choice") == std::vector<std::string>{"way"});
  auto insights = ranked("insights", "insight");
  REQUIRE(insights.size() == 4);
  CHECK(insights.back() == "observations");
  CHECK(std::set<std::string>(insights.begin(), insights.begin() + 3) ==
        std::set<std::string>{"perspectives", "findings", "valuables"});
  CHECK(ranked("cost") == std::vector<std::string>{"risk"});
  CHECK(ranked("experienced") == std::vector<std::string>{"seasoned"});
}
