#include "distractor/numeric.h"

#include <algorithm>
#include <array>
#include <limits>
#include <regex>
#include <set>
#include <sstream>

#include "distractor/annotation.h"
#include "distractor/config.h"
#include "distractor/error.h"

namespace distractor {
namespace {

constexpr std::int64_t kMaxNatural = 1'000'000'000'000LL;
constexpr int kMaxDecimals = 6;

constexpr std::array<const char *, 20> kCardinalWords = {
    "zero",    "one",     "two",       "three",    "four",
    "five",    "six",     "seven",     "eight",    "nine",
    "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
    "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};
constexpr std::array<const char *, 10> kTensWords = {
    "", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty",
    "ninety"};
constexpr std::array<const char *, 20> kOrdinalWords = {
    "",           "first",      "second",      "third",       "fourth",
    "fifth",      "sixth",      "seventh",     "eighth",      "ninth",
    "tenth",      "eleventh",   "twelfth",     "thirteenth",  "fourteenth",
    "fifteenth",  "sixteenth",  "seventeenth", "eighteenth",  "nineteenth"};
constexpr std::array<const char *, 10> kTensOrdinals = {
    "",          "",          "twentieth", "thirtieth", "fortieth",
    "fiftieth",  "sixtieth",  "seventieth", "eightieth", "ninetieth"};
constexpr std::array<const char *, 7> kWeekdays = {
    "monday", "tuesday", "wednesday", "thursday", "friday", "saturday",
    "sunday"};
constexpr std::array<const char *, 12> kMonths = {
    "january", "february", "march",     "april",   "may",      "june",
    "july",    "august",   "september", "october", "november", "december"};

template <std::size_t N>
std::optional<int> IndexOf(const std::array<const char *, N> &table,
                           std::string_view word) {
  for (std::size_t i = 0; i < N; ++i) {
    if (table[i][0] != '\0' && word == table[i]) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::optional<int> ParseWordNumber(std::string_view lower, bool ordinal) {
  const auto &units = ordinal ? kOrdinalWords : kCardinalWords;
  const auto &tens = ordinal ? kTensOrdinals : kTensWords;
  if (auto i = IndexOf(units, lower)) return *i;
  if (auto i = IndexOf(tens, lower)) return *i * 10;
  auto dash = lower.find('-');
  if (dash == std::string_view::npos) return std::nullopt;
  auto ten = IndexOf(kTensWords, lower.substr(0, dash));
  auto unit = IndexOf(units, lower.substr(dash + 1));
  if (!ten || !unit || *unit < 1 || *unit > 9) return std::nullopt;
  return *ten * 10 + *unit;
}

std::optional<std::string> WordNumber(std::int64_t value, bool ordinal) {
  const auto &units = ordinal ? kOrdinalWords : kCardinalWords;
  const auto &tens = ordinal ? kTensOrdinals : kTensWords;
  if (value < (ordinal ? 1 : 0) || value > 99) return std::nullopt;
  if (value < 20) return std::string(units[value]);
  if (value % 10 == 0) return std::string(tens[value / 10]);
  return std::string(kTensWords[value / 10]) + "-" + units[value % 10];
}

std::int64_t Pow10(int exponent) {
  std::int64_t p = 1;
  for (int i = 0; i < exponent; ++i) p *= 10;
  return p;
}

const char *OrdinalSuffix(std::int64_t n) {
  std::int64_t last_two = n % 100;
  if (last_two >= 11 && last_two <= 13) return "th";
  switch (n % 10) {
    case 1:
      return "st";
    case 2:
      return "nd";
    case 3:
      return "rd";
    default:
      return "th";
  }
}

struct NaturalDomain {
  std::int64_t lo;
  std::int64_t hi;
  bool modular;
};

NaturalDomain DomainOf(NumericKind kind) {
  switch (kind) {
    case NumericKind::kCardinal:
      return {0, kMaxNatural, false};
    case NumericKind::kOrdinal:
      return {1, kMaxNatural, false};
    case NumericKind::kYear:
      return {1000, 2999, false};
    case NumericKind::kWeekday:
      return {1, 7, true};
    case NumericKind::kMonth:
      return {1, 12, true};
    case NumericKind::kTimeOfDay:
      return {0, 23, false};
    case NumericKind::kWordCardinal:
      return {0, 99, false};
    case NumericKind::kWordOrdinal:
      return {1, 99, false};
    case NumericKind::kRange:
      break;
  }
  throw PerturbError("range has no scalar domain");
}

// --- recognition ---------------------------------------------------------

std::optional<NumericValue> RecognizeWord(std::string_view surface) {
  LetterCase letter_case = ClassifyCase(surface);
  if (letter_case == LetterCase::kMixed) return std::nullopt;
  for (char c : surface) {
    if (!IsAlphaAscii(c) && c != '-') return std::nullopt;
  }
  std::string lower = ToLower(surface);
  NumericValue v;
  v.format.letter_case = letter_case;
  if (auto i = IndexOf(kWeekdays, lower)) {
    v.kind = v.element_kind = NumericKind::kWeekday;
    v.value = *i + 1;
    return v;
  }
  if (auto i = IndexOf(kMonths, lower)) {
    // Lowercase "may" and "march" are far more often verbs.
    if (letter_case == LetterCase::kLower) return std::nullopt;
    v.kind = v.element_kind = NumericKind::kMonth;
    v.value = *i + 1;
    return v;
  }
  if (auto n = ParseWordNumber(lower, false)) {
    v.kind = v.element_kind = NumericKind::kWordCardinal;
    v.value = *n;
    return v;
  }
  if (auto n = ParseWordNumber(lower, true)) {
    v.kind = v.element_kind = NumericKind::kWordOrdinal;
    v.value = *n;
    return v;
  }
  return std::nullopt;
}

std::optional<NumericValue> RecognizeTime(const std::string &s) {
  static const std::regex kTime(
      R"(^(\d{1,2}):([0-5]\d)(?:( ?)(am|pm|AM|PM|a\.m\.|p\.m\.|A\.M\.|P\.M\.))?$)");
  std::smatch m;
  if (!std::regex_match(s, m, kTime)) return std::nullopt;
  int hour = std::stoi(m[1].str());
  int minute = std::stoi(m[2].str());
  NumericValue v;
  v.kind = v.element_kind = NumericKind::kTimeOfDay;
  v.format.min_digits = static_cast<int>(m[1].length());
  if (m[4].matched) {
    if (hour < 1 || hour > 12) return std::nullopt;
    std::string mer = m[4].str();
    bool pm = mer[0] == 'p' || mer[0] == 'P';
    bool dotted = mer.find('.') != std::string::npos;
    bool upper = IsUpperAscii(mer[0]);
    v.format.meridiem = dotted ? (upper ? Meridiem::kDottedUpper
                                        : Meridiem::kDottedLower)
                               : (upper ? Meridiem::kUpper : Meridiem::kLower);
    v.format.meridiem_space = m[3].length() == 1;
    hour = hour % 12 + (pm ? 12 : 0);
  } else if (hour > 23) {
    return std::nullopt;
  }
  v.value = hour * 60 + minute;
  return v;
}

std::optional<NumericValue> RecognizeDigitOrdinal(const std::string &s) {
  static const std::regex kOrdinal(R"(^([1-9]\d{0,11})(st|nd|rd|th|ST|ND|RD|TH)$)");
  std::smatch m;
  if (!std::regex_match(s, m, kOrdinal)) return std::nullopt;
  std::int64_t n = std::stoll(m[1].str());
  std::string suffix = m[2].str();
  if (ToLower(suffix) != OrdinalSuffix(n)) return std::nullopt;
  NumericValue v;
  v.kind = v.element_kind = NumericKind::kOrdinal;
  v.value = n;
  v.format.letter_case =
      IsUpperAscii(suffix[0]) ? LetterCase::kUpper : LetterCase::kLower;
  return v;
}

std::optional<NumericValue> RecognizeDigits(const std::string &s) {
  static const std::regex kNumber(
      R"(^(\$)?([1-9]\d{0,2}(?:,\d{3})+|\d{1,12})(?:\.(\d{1,6}))?(%| percent)?$)");
  std::smatch m;
  if (!std::regex_match(s, m, kNumber)) return std::nullopt;
  std::string int_part = m[2].str();
  bool commas = int_part.find(',') != std::string::npos;
  int_part.erase(std::remove(int_part.begin(), int_part.end(), ','),
                 int_part.end());
  if (int_part.size() > 12) return std::nullopt;
  std::string frac = m[3].matched ? m[3].str() : std::string();

  NumericValue v;
  v.format.thousands_separator = commas;
  v.format.decimals = static_cast<int>(frac.size());
  if (int_part.size() > 1 && int_part[0] == '0') {
    v.format.min_digits = static_cast<int>(int_part.size());
  }
  if (m[1].matched) {
    v.format.prefix = m[1].str();
    v.unit = "$";
  }
  if (m[4].matched) {
    v.format.suffix = m[4].str();
    v.unit = m[4].str() == "%" ? "%" : "percent";
  }
  std::int64_t whole = std::stoll(int_part);
  v.value = whole * Pow10(v.format.decimals) + (frac.empty() ? 0 : std::stoll(frac));

  bool plain = !commas && frac.empty() && !m[1].matched && !m[4].matched &&
               int_part.size() == 4 && int_part[0] != '0';
  if (plain && whole >= 1000 && whole <= 2999) {
    v.kind = v.element_kind = NumericKind::kYear;
  } else {
    v.kind = v.element_kind = NumericKind::kCardinal;
  }
  return v;
}

std::optional<NumericValue> RecognizeScalar(std::string_view surface) {
  if (surface.empty()) return std::nullopt;
  std::string s(surface);
  if (IsAlphaAscii(s[0])) return RecognizeWord(s);
  if (auto v = RecognizeTime(s)) return v;
  if (auto v = RecognizeDigitOrdinal(s)) return v;
  return RecognizeDigits(s);
}

std::optional<NumericValue> MakeRange(std::string_view left,
                                      std::string_view right,
                                      std::string_view separator) {
  auto lo = RecognizeScalar(left);
  auto hi = RecognizeScalar(right);
  if (!lo || !hi || lo->kind != hi->kind) return std::nullopt;
  if (lo->value > hi->value) return std::nullopt;
  if (lo->format.decimals != hi->format.decimals) return std::nullopt;
  NumericValue v;
  v.kind = NumericKind::kRange;
  v.element_kind = lo->kind;
  v.value = lo->value;
  v.upper = hi->value;
  v.unit = lo->unit ? lo->unit : hi->unit;
  v.format = lo->format;
  v.upper_format = hi->format;
  v.range_separator = std::string(separator);
  return v;
}

std::optional<NumericValue> RecognizeRange(std::string_view s) {
  static constexpr std::string_view kTo = " to ";
  if (auto pos = s.find(kTo); pos != std::string_view::npos) {
    return MakeRange(s.substr(0, pos), s.substr(pos + kTo.size()), kTo);
  }
  static constexpr std::string_view kEnDash = "\xE2\x80\x93";
  if (auto pos = s.find(kEnDash); pos != std::string_view::npos) {
    return MakeRange(s.substr(0, pos), s.substr(pos + kEnDash.size()), kEnDash);
  }
  for (std::size_t pos = s.find('-'); pos != std::string_view::npos;
       pos = s.find('-', pos + 1)) {
    if (auto v = MakeRange(s.substr(0, pos), s.substr(pos + 1), "-")) return v;
  }
  return std::nullopt;
}

// --- rendering -----------------------------------------------------------

std::string RenderDigits(std::int64_t mantissa, const SurfaceFormat &f) {
  std::int64_t scale = Pow10(f.decimals);
  std::int64_t whole = mantissa / scale;
  std::int64_t frac = mantissa % scale;
  std::string digits = std::to_string(whole);
  if (static_cast<int>(digits.size()) < f.min_digits) {
    digits.insert(0, f.min_digits - digits.size(), '0');
  }
  if (f.thousands_separator) {
    for (int i = static_cast<int>(digits.size()) - 3; i > 0; i -= 3) {
      digits.insert(static_cast<std::size_t>(i), ",");
    }
  }
  std::string out = f.prefix + digits;
  if (f.decimals > 0) {
    std::string fs = std::to_string(frac);
    fs.insert(0, f.decimals - fs.size(), '0');
    out += "." + fs;
  }
  return out + f.suffix;
}

std::string RenderTime(std::int64_t minutes, const SurfaceFormat &f) {
  std::int64_t hour = minutes / 60;
  std::int64_t minute = minutes % 60;
  std::string meridiem;
  if (f.meridiem != Meridiem::kNone) {
    bool pm = hour >= 12;
    hour = hour % 12 == 0 ? 12 : hour % 12;
    switch (f.meridiem) {
      case Meridiem::kLower:
        meridiem = pm ? "pm" : "am";
        break;
      case Meridiem::kUpper:
        meridiem = pm ? "PM" : "AM";
        break;
      case Meridiem::kDottedLower:
        meridiem = pm ? "p.m." : "a.m.";
        break;
      case Meridiem::kDottedUpper:
        meridiem = pm ? "P.M." : "A.M.";
        break;
      case Meridiem::kNone:
        break;
    }
    if (f.meridiem_space) meridiem.insert(0, " ");
  }
  std::string h = std::to_string(hour);
  if (static_cast<int>(h.size()) < f.min_digits) {
    h.insert(0, f.min_digits - h.size(), '0');
  }
  std::string m = std::to_string(minute);
  if (m.size() < 2) m.insert(0, "0");
  return h + ":" + m + meridiem;
}

std::string RenderScalar(NumericKind kind, std::int64_t value,
                         const SurfaceFormat &f) {
  auto out_of_domain = [&]() {
    return RenderError(std::string(NumericKindName(kind)) + " value " +
                       std::to_string(value) + " is not renderable");
  };
  switch (kind) {
    case NumericKind::kCardinal:
      if (value < 0) throw out_of_domain();
      return RenderDigits(value, f);
    case NumericKind::kOrdinal: {
      if (value < 1) throw out_of_domain();
      std::string suffix = OrdinalSuffix(value);
      return std::to_string(value) +
             (f.letter_case == LetterCase::kUpper ? ToUpper(suffix) : suffix);
    }
    case NumericKind::kYear:
      if (value < 1000 || value > 2999) throw out_of_domain();
      return std::to_string(value);
    case NumericKind::kWeekday:
      if (value < 1 || value > 7) throw out_of_domain();
      return ApplyCase(kWeekdays[value - 1], f.letter_case);
    case NumericKind::kMonth:
      if (value < 1 || value > 12) throw out_of_domain();
      return ApplyCase(kMonths[value - 1], f.letter_case);
    case NumericKind::kTimeOfDay:
      if (value < 0 || value >= 24 * 60) throw out_of_domain();
      return RenderTime(value, f);
    case NumericKind::kWordCardinal:
    case NumericKind::kWordOrdinal: {
      auto word = WordNumber(value, kind == NumericKind::kWordOrdinal);
      if (!word) throw out_of_domain();
      return ApplyCase(*word, f.letter_case);
    }
    case NumericKind::kRange:
      break;
  }
  throw RenderError("nested range");
}

// --- perturbation --------------------------------------------------------

std::int64_t FloorDiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t CeilDiv(std::int64_t a, std::int64_t b) {
  return -FloorDiv(-a, b);
}

// Uniform nonzero integer in [klo, khi].
std::int64_t PickNonZero(std::int64_t klo, std::int64_t khi, Rng &rng) {
  if (klo > khi) throw PerturbError("empty feasible set");
  std::int64_t count = khi - klo + 1 - ((klo <= 0 && khi >= 0) ? 1 : 0);
  if (count <= 0) throw PerturbError("empty feasible set");
  std::int64_t k = klo + static_cast<std::int64_t>(
                             UniformBelow(rng, static_cast<std::uint64_t>(count)));
  if (klo <= 0 && k >= 0) ++k;
  return k;
}

std::int64_t PerturbScalar(NumericKind kind, const SurfaceFormat &format,
                           std::int64_t value, const PerturbStrategy &strategy,
                           Rng &rng, std::int64_t bound_lo,
                           std::int64_t bound_hi) {
  const std::int64_t unit = NaturalUnit(kind, format);
  const NaturalDomain domain = DomainOf(kind);
  const std::int64_t n = FloorDiv(value, unit);
  // Step bounds implied by the mantissa bounds.
  const std::int64_t bk_lo = CeilDiv(bound_lo - value, unit);
  const std::int64_t bk_hi = FloorDiv(bound_hi - value, unit);

  if (const auto *shift = std::get_if<UnitShift>(&strategy)) {
    int d = shift->delta;
    if (d != -2 && d != -1 && d != 1 && d != 2) {
      throw PerturbError("unit shift delta must be one of -2, -1, 1, 2");
    }
    std::int64_t k = d;
    if (domain.modular) {
      std::int64_t size = domain.hi - domain.lo + 1;
      std::int64_t shifted = ((n - domain.lo + d) % size + size) % size + domain.lo;
      k = shifted - n;
    } else if (n + k < domain.lo || n + k > domain.hi) {
      throw PerturbError("unit shift leaves the domain");
    }
    if (k == 0 || k < bk_lo || k > bk_hi) {
      throw PerturbError("unit shift violates bounds");
    }
    return value + k * unit;
  }
  if (const auto *local = std::get_if<LocalRandom>(&strategy)) {
    if (local->radius < 1) throw PerturbError("window radius must be >= 1");
    std::int64_t klo = std::max<std::int64_t>({-local->radius, domain.lo - n, bk_lo});
    std::int64_t khi = std::min<std::int64_t>({local->radius, domain.hi - n, bk_hi});
    return value + PickNonZero(klo, khi, rng) * unit;
  }
  const auto &global = std::get<GlobalRandom>(strategy);
  if (global.lo > global.hi) throw PerturbError("invalid global domain");
  std::int64_t lo = std::max(global.lo, domain.lo);
  std::int64_t hi = std::min(global.hi, domain.hi);
  if (lo > hi) throw PerturbError("global domain outside the kind's domain");
  std::int64_t klo = std::max(lo - n, bk_lo);
  std::int64_t khi = std::min(hi - n, bk_hi);
  return value + PickNonZero(klo, khi, rng) * unit;
}

int WindowFor(NumericKind kind, const NumericConfig &config) {
  switch (kind) {
    case NumericKind::kYear:
      return config.window_year;
    case NumericKind::kTimeOfDay:
      return config.window_time_hours;
    case NumericKind::kWeekday:
    case NumericKind::kMonth:
      return config.window_calendar;
    default:
      return config.window_cardinal;
  }
}

GlobalRandom GlobalDomainFor(const NumericValue &v, const NumericConfig &config) {
  NumericKind kind = v.element_kind;
  std::int64_t unit = NaturalUnit(kind, v.format);
  std::int64_t top = FloorDiv(std::max(v.value, v.upper), unit);
  switch (kind) {
    case NumericKind::kYear: {
      std::int64_t n = FloorDiv(v.value, unit);
      return {std::min(config.global_year_min, n),
              std::max(config.global_year_max, std::max(n, top))};
    }
    case NumericKind::kWeekday:
      return {1, 7};
    case NumericKind::kMonth:
      return {1, 12};
    case NumericKind::kTimeOfDay:
      return {0, 23};
    case NumericKind::kWordCardinal:
      return {0, std::min<std::int64_t>(99, std::max<std::int64_t>(20, 2 * top))};
    case NumericKind::kWordOrdinal:
      return {1, std::min<std::int64_t>(99, std::max<std::int64_t>(20, 2 * top))};
    case NumericKind::kOrdinal:
      return {1, std::max<std::int64_t>(20, 2 * top)};
    default:
      return {0, std::max<std::int64_t>(20, 2 * top)};
  }
}

}  // namespace

const char *NumericKindName(NumericKind kind) {
  switch (kind) {
    case NumericKind::kCardinal:
      return "cardinal";
    case NumericKind::kOrdinal:
      return "ordinal";
    case NumericKind::kYear:
      return "year";
    case NumericKind::kWeekday:
      return "weekday";
    case NumericKind::kMonth:
      return "month";
    case NumericKind::kTimeOfDay:
      return "time-of-day";
    case NumericKind::kRange:
      return "range";
    case NumericKind::kWordCardinal:
      return "word-cardinal";
    case NumericKind::kWordOrdinal:
      return "word-ordinal";
  }
  return "unknown";
}

bool IsTemporalKind(NumericKind kind) {
  return kind == NumericKind::kWeekday || kind == NumericKind::kMonth ||
         kind == NumericKind::kTimeOfDay;
}

std::int64_t NaturalUnit(NumericKind kind, const SurfaceFormat &format) {
  if (kind == NumericKind::kCardinal) return Pow10(format.decimals);
  if (kind == NumericKind::kTimeOfDay) return 60;
  return 1;
}

std::optional<NumericValue> RecognizeNumeric(std::string_view surface) {
  if (surface.empty()) return std::nullopt;
  if (auto v = RecognizeScalar(surface)) return v;
  return RecognizeRange(surface);
}

std::string Render(const NumericValue &v) {
  if (v.kind != NumericKind::kRange) {
    return RenderScalar(v.kind, v.value, v.format);
  }
  if (v.value > v.upper) throw RenderError("range lower bound exceeds upper");
  return RenderScalar(v.element_kind, v.value, v.format) + v.range_separator +
         RenderScalar(v.element_kind, v.upper, v.upper_format);
}

std::string DescribeStrategy(const PerturbStrategy &strategy) {
  if (const auto *s = std::get_if<UnitShift>(&strategy)) {
    return std::string("unit_shift(") + (s->delta > 0 ? "+" : "") +
           std::to_string(s->delta) + ")";
  }
  if (const auto *l = std::get_if<LocalRandom>(&strategy)) {
    return "local_random(" + std::to_string(l->radius) + ")";
  }
  const auto &g = std::get<GlobalRandom>(strategy);
  return "global_random(" + std::to_string(g.lo) + "," + std::to_string(g.hi) +
         ")";
}

NumericValue Perturb(const NumericValue &v, const PerturbStrategy &strategy,
                     Rng &rng) {
  constexpr std::int64_t kLow = std::numeric_limits<std::int64_t>::min() / 4;
  constexpr std::int64_t kHigh = std::numeric_limits<std::int64_t>::max() / 4;
  NumericValue out = v;
  if (v.kind != NumericKind::kRange) {
    out.value = PerturbScalar(v.kind, v.format, v.value, strategy, rng, kLow, kHigh);
    return out;
  }
  const bool first_upper = UniformBelow(rng, 2) == 1;
  for (int attempt = 0; attempt < 2; ++attempt) {
    const bool upper = (attempt == 0) == first_upper;
    try {
      if (upper) {
        out.upper = PerturbScalar(v.element_kind, v.upper_format, v.upper,
                                  strategy, rng, v.value, kHigh);
      } else {
        out.value = PerturbScalar(v.element_kind, v.format, v.value, strategy,
                                  rng, kLow, v.upper);
      }
      return out;
    } catch (const PerturbError &) {
      if (attempt == 1) throw;
    }
  }
  throw PerturbError("unreachable");
}

std::vector<NumericDraw> DrawNumericDistractors(const NumericValue &value,
                                                std::string_view original,
                                                std::size_t n,
                                                const Config &config, Rng &rng,
                                                bool allow_shortfall) {
  const NumericConfig &nc = config.numeric;
  if (nc.strategies.empty()) {
    throw InsufficientCandidatesError("no numeric strategies enabled", 0);
  }
  static constexpr std::array<int, 4> kDeltas = {-2, -1, 1, 2};

  std::vector<NumericDraw> out;
  std::set<std::string> seen = {NormalizeKey(original)};
  const std::size_t budget = static_cast<std::size_t>(nc.retry_bound) * n;
  for (std::size_t attempt = 0; attempt < budget && out.size() < n; ++attempt) {
    PerturbStrategy strategy;
    switch (nc.strategies[UniformBelow(rng, nc.strategies.size())]) {
      case StrategyKind::kUnitShift:
        strategy = UnitShift{kDeltas[UniformBelow(rng, kDeltas.size())]};
        break;
      case StrategyKind::kLocalRandom:
        strategy = LocalRandom{WindowFor(value.element_kind, nc)};
        break;
      case StrategyKind::kGlobalRandom:
        strategy = GlobalDomainFor(value, nc);
        break;
    }
    std::string text;
    try {
      text = Render(Perturb(value, strategy, rng));
    } catch (const PerturbError &) {
      continue;
    } catch (const RenderError &) {
      continue;
    }
    if (!seen.insert(NormalizeKey(text)).second) continue;
    out.push_back({std::move(text), DescribeStrategy(strategy)});
  }
  if (out.size() < n && !allow_shortfall) {
    throw InsufficientCandidatesError(
        "only " + std::to_string(out.size()) + " distinct values for '" +
            std::string(original) + "', " + std::to_string(n) + " requested",
        out.size());
  }
  return out;
}

std::vector<std::string> GenerateNumericDistractors(const TargetWord &target,
                                                    std::size_t n,
                                                    const Config &config,
                                                    Rng &rng) {
  if (n == 0) throw ValidationError("requested distractor count must be >= 1");
  auto value = RecognizeNumeric(target.surface);
  if (!value) {
    throw ValidationError("'" + target.surface + "' is not a numeric target");
  }
  std::vector<std::string> texts;
  for (auto &draw : DrawNumericDistractors(*value, target.surface, n, config,
                                           rng, /*allow_shortfall=*/false)) {
    texts.push_back(std::move(draw.text));
  }
  return texts;
}

}  // namespace distractor
