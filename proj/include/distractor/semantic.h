#ifndef DISTRACTOR_SEMANTIC_H_
#define DISTRACTOR_SEMANTIC_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "distractor/annotation.h"
#include "distractor/config.h"
#include "distractor/lexres.h"

namespace distractor {

// Either pointer may be null; a missing resource contributes no candidates.
struct LexicalResources {
  const VectorTable *vectors = nullptr;
  const LexicalGraph *graph = nullptr;
};

// Edit distance over Unicode code points.
std::size_t Levenshtein(std::string_view a, std::string_view b);

// 1 - 1/(1 + e^E), or 1/(1 + e^E) when inverted.
double EditDistanceScore(std::size_t distance, bool inverted = false);

// (2 s_v + s_n + s_d)/4 for antonyms, (s_v + s_n + s_d)/3 otherwise. Negative
// s_v counts as zero.
double RankPrime(double s_v, double s_n, double s_d, bool antonym);

// -r' ln r', zero at r' = 1.
double EntropyRank(double r_prime);

struct Candidate {
  std::string text;
  double s_v = 0.0;
  double s_n = 0.0;
  double s_d = 0.0;
  bool antonym = false;
  double r_prime = 0.0;
  double r = 0.0;

  bool operator==(const Candidate &) const = default;
};

struct SourcedCandidate {
  std::string text;
  double s_v = 0.0;
  bool from_embedding = false;
  bool from_hypernym = false;
};

// Embedding neighbours of the target within [lo, hi] followed by lemmas of
// its direct hypernyms, deduplicated case-insensitively. Hypernym-only
// candidates get s_v = lo.
std::vector<SourcedCandidate> GenerateCandidates(const TargetWord &target,
                                                 const LexicalResources &res,
                                                 double lo, double hi);
std::vector<SourcedCandidate> GenerateCandidates(const TargetWord &target,
                                                 const LexicalResources &res,
                                                 const Config &config);

// False when the candidate contains the target, or shares a prefix of at
// least three characters with it while being fewer than three edits away.
bool PassesFilters(std::string_view target, std::string_view candidate);

std::vector<std::string> FilterCandidates(const TargetWord &target,
                                          const std::vector<std::string> &candidates);

Candidate ScoreCandidate(const TargetWord &target, std::string_view candidate,
                         double s_v, const LexicalResources &res,
                         const Config &config);

// Highest r first; ties by higher s_v, then text. Returns min(k, n) items.
std::vector<Candidate> RankAndSelect(std::vector<Candidate> candidates,
                                     std::size_t k);

// Generate, filter, score and fully rank the candidates for one target.
std::vector<Candidate> RankedSemanticCandidates(const TargetWord &target,
                                                const LexicalResources &res,
                                                const Config &config, double lo,
                                                double hi);

}  // namespace distractor

#endif  // DISTRACTOR_SEMANTIC_H_
