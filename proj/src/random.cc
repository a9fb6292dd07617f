#include "distractor/random.h"

#include <limits>

namespace distractor {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng DeriveRng(std::uint64_t seed, std::uint64_t index) {
  return Rng(SplitMix64(SplitMix64(seed) ^ SplitMix64(index + 1)));
}

std::uint64_t UniformBelow(Rng &rng, std::uint64_t n) {
  // Rejection sampling over the largest multiple of n.
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % n + 1) % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return x % n;
}

std::int64_t UniformInRange(Rng &rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::int64_t>(rng());
  }
  return lo + static_cast<std::int64_t>(UniformBelow(rng, span + 1));
}

}  // namespace distractor
