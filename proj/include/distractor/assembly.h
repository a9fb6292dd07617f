#ifndef DISTRACTOR_ASSEMBLY_H_
#define DISTRACTOR_ASSEMBLY_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "distractor/annotation.h"
#include "distractor/config.h"
#include "distractor/kb.h"
#include "distractor/random.h"
#include "distractor/semantic.h"
#include "json.hpp"

namespace distractor {

inline constexpr std::size_t kDistractorsPerQuestion = 3;

struct Resources {
  const VectorTable *vectors = nullptr;
  const LexicalGraph *graph = nullptr;
  const KnowledgeBase *kb = nullptr;

  LexicalResources lexical() const { return {vectors, graph}; }
};

// How one distractor was produced.
struct Provenance {
  std::string target;
  TargetType target_type = TargetType::kT3Noun;
  std::string replacement;
  // Numeric strategy, "article"/"knowledge_base" for entities, "semantic".
  std::string strategy;
  std::optional<Candidate> scores;
  int relax_round = 0;

  bool operator==(const Provenance &) const = default;
};

struct MCQ {
  std::string article_id;
  std::string question;
  std::string answer;
  std::vector<std::string> distractors;
  std::vector<Provenance> provenance;

  bool shortfall() const { return distractors.size() < kDistractorsPerQuestion; }
  bool operator==(const MCQ &) const = default;
};

// Replaces answer[span] with `replacement`, carrying over an initial capital
// (or all-caps) and re-agreeing an adjacent indefinite article.
std::string Substitute(std::string_view answer, CharSpan span,
                       std::string_view replacement);

// Walks the targets in preference order, then widens the similarity interval
// for type-3 targets. Fewer than three distractors is reported through
// MCQ::shortfall(). Throws NoTargetError when the answer has no targets.
MCQ GenerateMcq(const QAPair &qap, const AnnotatedArticle &article,
                const Resources &resources, const Config &config, Rng &rng);

struct McqOutcome {
  std::optional<MCQ> mcq;
  std::string error;  // set when generation threw
};

// Runs every QAP with DeriveRng(seed, index); `threads` > 1 processes QAPs
// concurrently with identical results. Every QAP's article must be present.
std::vector<McqOutcome> GenerateAll(
    const std::vector<QAPair> &qaps,
    const std::map<std::string, AnnotatedArticle> &articles,
    const Resources &resources, const Config &config, std::uint64_t seed,
    int threads);

nlohmann::ordered_json McqToJson(const MCQ &mcq);
MCQ McqFromJson(const nlohmann::json &obj);
std::vector<MCQ> ParseMcqs(std::istream &in);

}  // namespace distractor

#endif  // DISTRACTOR_ASSEMBLY_H_
