#ifndef DISTRACTOR_NUMERIC_H_
#define DISTRACTOR_NUMERIC_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "distractor/random.h"
#include "distractor/text.h"

namespace distractor {

struct Config;
struct TargetWord;

enum class NumericKind {
  kCardinal,
  kOrdinal,
  kYear,
  kWeekday,
  kMonth,
  kTimeOfDay,
  kRange,
  kWordCardinal,
  kWordOrdinal,
};

const char *NumericKindName(NumericKind kind);

// True for the kinds that denote a point in time (or a range of them).
// Years count as numeric values.
bool IsTemporalKind(NumericKind kind);

enum class Meridiem { kNone, kLower, kUpper, kDottedLower, kDottedUpper };

// Everything needed to print a value back in the shape it was read in.
struct SurfaceFormat {
  LetterCase letter_case = LetterCase::kLower;
  bool thousands_separator = false;
  int decimals = 0;
  // Zero padding of the integer part (the hour for times).
  int min_digits = 1;
  std::string prefix;
  std::string suffix;
  Meridiem meridiem = Meridiem::kNone;
  bool meridiem_space = false;

  bool operator==(const SurfaceFormat &) const = default;
};

// A recognized number, ordinal, or point in time.
//
// `value` is a fixed-point mantissa: the numeric value times 10^decimals for
// cardinals, minutes since midnight for times of day, and the plain integer
// for everything else (weekday Monday = 1, month January = 1). Ranges keep
// their endpoints in `value` and `upper`, both in the element kind's scale.
struct NumericValue {
  NumericKind kind = NumericKind::kCardinal;
  NumericKind element_kind = NumericKind::kCardinal;
  std::int64_t value = 0;
  std::int64_t upper = 0;
  std::optional<std::string> unit;
  SurfaceFormat format;
  SurfaceFormat upper_format;
  std::string range_separator;

  bool operator==(const NumericValue &) const = default;
};

// Step of one natural unit in mantissa terms (one hour for times of day).
std::int64_t NaturalUnit(NumericKind kind, const SurfaceFormat &format);

std::optional<NumericValue> RecognizeNumeric(std::string_view surface);

// Throws RenderError when the value lies outside the renderable domain of its
// kind and format (weekday 9, a word cardinal above 99, ...).
std::string Render(const NumericValue &value);

struct UnitShift {
  int delta = 1;  // one of -2, -1, +1, +2
};

struct LocalRandom {
  int radius = 1;
};

// Bounds in natural units: years, hours, weekday numbers, whole counts.
struct GlobalRandom {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

using PerturbStrategy = std::variant<UnitShift, LocalRandom, GlobalRandom>;

std::string DescribeStrategy(const PerturbStrategy &strategy);

// Returns a value of the same kind and format whose value differs from the
// input. Weekday and month shifts wrap around. Throws PerturbError when the
// strategy is invalid or admits no value.
NumericValue Perturb(const NumericValue &value, const PerturbStrategy &strategy,
                     Rng &rng);

struct NumericDraw {
  std::string text;
  std::string strategy;
};

// Draws up to n distinct renderings different from `original`, picking a
// strategy uniformly from the configured set for every draw. With
// allow_shortfall false, fewer than n results throws
// InsufficientCandidatesError.
std::vector<NumericDraw> DrawNumericDistractors(const NumericValue &value,
                                                std::string_view original,
                                                std::size_t n,
                                                const Config &config, Rng &rng,
                                                bool allow_shortfall);

std::vector<std::string> GenerateNumericDistractors(const TargetWord &target,
                                                    std::size_t n,
                                                    const Config &config,
                                                    Rng &rng);

}  // namespace distractor

#endif  // DISTRACTOR_NUMERIC_H_
