#ifndef DISTRACTOR_CONFIG_H_
#define DISTRACTOR_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace distractor {

enum class StrategyKind { kUnitShift, kLocalRandom, kGlobalRandom };

struct NumericConfig {
  std::vector<StrategyKind> strategies = {StrategyKind::kUnitShift,
                                          StrategyKind::kLocalRandom,
                                          StrategyKind::kGlobalRandom};
  // LocalRandom radii, in natural units of each kind.
  int window_year = 10;
  int window_cardinal = 5;
  int window_time_hours = 2;
  int window_calendar = 2;
  // GlobalRandom domain for years; widened to contain the answer's year.
  std::int64_t global_year_min = 1900;
  std::int64_t global_year_max = 2100;
  // Draws allowed per requested distractor.
  int retry_bound = 32;
};

struct Config {
  double sim_lo = 0.6;
  double sim_hi = 0.85;
  double wup_fallback = 0.1;
  double relax_step = 0.05;
  int relax_max_rounds = 3;
  // Uses 1/(1+e^E) for the edit-distance score instead of 1 - 1/(1+e^E).
  bool sd_inverted = false;
  std::optional<std::uint64_t> seed;
  int threads = 1;
  NumericConfig numeric;
};

// Throws ConfigError naming the first offending field.
void ValidateConfig(const Config &config);

// Parses a JSON config document. Unknown keys are rejected.
Config ParseConfig(std::string_view json_text);

// Defaults when `path` is empty; otherwise reads and parses the file.
Config LoadConfig(const std::string &path);

}  // namespace distractor

#endif  // DISTRACTOR_CONFIG_H_
