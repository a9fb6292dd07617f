#ifndef DISTRACTOR_RANDOM_H_
#define DISTRACTOR_RANDOM_H_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace distractor {

// The engine is fully specified by the standard, so seeded streams are
// reproducible across platforms. Distributions are not, hence the helpers.
using Rng = std::mt19937_64;

// Independent stream for item `index` of a run seeded with `seed`. Serial and
// parallel runs that derive per-item engines this way produce identical draws.
Rng DeriveRng(std::uint64_t seed, std::uint64_t index);

// Uniform integer in [0, n). n must be positive.
std::uint64_t UniformBelow(Rng &rng, std::uint64_t n);

// Uniform integer in [lo, hi]. Requires lo <= hi.
std::int64_t UniformInRange(Rng &rng, std::int64_t lo, std::int64_t hi);

template <typename T>
void Shuffle(std::vector<T> &items, Rng &rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = UniformBelow(rng, i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace distractor

#endif  // DISTRACTOR_RANDOM_H_
