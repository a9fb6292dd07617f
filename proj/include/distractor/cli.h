#ifndef DISTRACTOR_CLI_H_
#define DISTRACTOR_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace distractor {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitShortfall = 2;

struct GenerateOptions {
  std::vector<std::string> article_paths;
  std::string qap_path;
  std::string vectors_path;
  std::string lexgraph_path;
  std::string kb_path;
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
};

// Seed precedence: explicit option, config file, DISTRACTOR_SEED, then 0.
std::uint64_t ResolveSeed(const std::optional<std::uint64_t> &flag,
                          const std::optional<std::uint64_t> &config_seed);

// Writes one MCQ line per QAP to `out` in input order and diagnostics to
// `err`. Returns 0, 1 (input error, nothing written) or 2 (shortfall).
int RunGenerate(const GenerateOptions &opts, std::ostream &out, std::ostream &err);

struct EvalOptions {
  std::string mcq_path;
  std::string labels_path;
};

// JSON report to `out`, table to `err`.
int RunEval(const EvalOptions &opts, std::ostream &out, std::ostream &err);

// Tags raw text with the fallback tagger and writes annotated-article JSONL.
int RunTag(const std::string &text_path, const std::string &article_id,
           const std::string &kb_path, std::ostream &out, std::ostream &err);

// Loads each given file through its parser and reports counts.
struct CheckOptions {
  std::vector<std::string> article_paths;
  std::string qap_path;
  std::string vectors_path;
  std::string lexgraph_path;
  std::string kb_path;
  std::string config_path;
  std::string mcq_path;
  std::string labels_path;
};
int RunCheck(const CheckOptions &opts, std::ostream &out, std::ostream &err);

}  // namespace distractor

#endif  // DISTRACTOR_CLI_H_
