#include "distractor/config.h"

#include <fstream>
#include <sstream>

#include "distractor/error.h"
#include "json.hpp"

namespace distractor {

using json = nlohmann::json;

void ValidateConfig(const Config &c) {
  if (!(c.sim_lo >= 0.0)) throw ConfigError("sim_lo", "must be >= 0");
  if (!(c.sim_hi <= 1.0)) throw ConfigError("sim_hi", "must be <= 1");
  if (!(c.sim_lo < c.sim_hi)) {
    throw ConfigError("sim_lo", "must be less than sim_hi");
  }
  if (!(c.wup_fallback > 0.0 && c.wup_fallback < 1.0)) {
    throw ConfigError("wup_fallback", "must lie in (0, 1)");
  }
  if (!(c.relax_step >= 0.0)) throw ConfigError("relax_step", "must be >= 0");
  if (c.relax_max_rounds < 0) {
    throw ConfigError("relax_max_rounds", "must be >= 0");
  }
  if (c.threads < 1) throw ConfigError("threads", "must be >= 1");
  const NumericConfig &n = c.numeric;
  if (n.strategies.empty()) {
    throw ConfigError("numeric_strategies", "at least one strategy required");
  }
  if (n.window_year < 1) throw ConfigError("window_year", "must be >= 1");
  if (n.window_cardinal < 1) {
    throw ConfigError("window_cardinal", "must be >= 1");
  }
  if (n.window_time_hours < 1) {
    throw ConfigError("window_time_hours", "must be >= 1");
  }
  if (n.window_calendar < 1) {
    throw ConfigError("window_calendar", "must be >= 1");
  }
  if (n.global_year_min < 1000 || n.global_year_max > 2999 ||
      n.global_year_min >= n.global_year_max) {
    throw ConfigError("global_year_min",
                      "year domain must satisfy 1000 <= min < max <= 2999");
  }
  if (n.retry_bound < 1) throw ConfigError("retry_bound", "must be >= 1");
}

namespace {

template <typename T>
T Get(const json &value, const std::string &key) {
  try {
    return value.get<T>();
  } catch (const json::exception &) {
    throw ConfigError(key, "wrong type");
  }
}

StrategyKind ParseStrategy(const std::string &name) {
  if (name == "unit_shift") return StrategyKind::kUnitShift;
  if (name == "local_random") return StrategyKind::kLocalRandom;
  if (name == "global_random") return StrategyKind::kGlobalRandom;
  throw ConfigError("numeric_strategies", "unknown strategy '" + name + "'");
}

}  // namespace

Config ParseConfig(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw ConfigError("<document>", e.what());
  }
  if (!doc.is_object()) throw ConfigError("<document>", "expected an object");

  Config c;
  for (const auto &[key, value] : doc.items()) {
    if (key == "sim_lo") {
      c.sim_lo = Get<double>(value, key);
    } else if (key == "sim_hi") {
      c.sim_hi = Get<double>(value, key);
    } else if (key == "wup_fallback") {
      c.wup_fallback = Get<double>(value, key);
    } else if (key == "relax_step") {
      c.relax_step = Get<double>(value, key);
    } else if (key == "relax_max_rounds") {
      c.relax_max_rounds = Get<int>(value, key);
    } else if (key == "sd_inverted") {
      c.sd_inverted = Get<bool>(value, key);
    } else if (key == "seed") {
      c.seed = Get<std::uint64_t>(value, key);
    } else if (key == "threads") {
      c.threads = Get<int>(value, key);
    } else if (key == "numeric_strategies") {
      c.numeric.strategies.clear();
      for (const auto &name : Get<std::vector<std::string>>(value, key)) {
        c.numeric.strategies.push_back(ParseStrategy(name));
      }
    } else if (key == "window_year") {
      c.numeric.window_year = Get<int>(value, key);
    } else if (key == "window_cardinal") {
      c.numeric.window_cardinal = Get<int>(value, key);
    } else if (key == "window_time_hours") {
      c.numeric.window_time_hours = Get<int>(value, key);
    } else if (key == "window_calendar") {
      c.numeric.window_calendar = Get<int>(value, key);
    } else if (key == "global_year_min") {
      c.numeric.global_year_min = Get<std::int64_t>(value, key);
    } else if (key == "global_year_max") {
      c.numeric.global_year_max = Get<std::int64_t>(value, key);
    } else if (key == "retry_bound") {
      c.numeric.retry_bound = Get<int>(value, key);
    } else {
      throw ConfigError(key, "unknown key");
    }
  }
  ValidateConfig(c);
  return c;
}

Config LoadConfig(const std::string &path) {
  if (path.empty()) return Config{};
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseConfig(buffer.str());
}

}  // namespace distractor
