#pragma once

#include <cstdint>
#include <random>

namespace genmat {

// All randomness in the library flows from mt19937_64 streams derived from a
// single user seed. Substreams are keyed by a counter so that independent
// pieces of work (rank trials, experiment instances) never share a stream and
// results stay reproducible across platforms. std::mt19937_64 output is fully
// specified by the standard; the distributions below avoid
// std::uniform_int_distribution, whose mapping is implementation-defined.

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace detail

inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t counter) {
  return std::mt19937_64(detail::splitmix64(detail::splitmix64(seed) ^ counter));
}

// Uniform draw from {0, ..., bound-1}, unbiased via rejection.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {  // inclusive range
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Bernoulli trial with success probability p.
inline bool bernoulli(std::mt19937_64& rng, double p) {
  double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u < p;
}

}  // namespace genmat
