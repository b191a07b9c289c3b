#pragma once

// Deterministic, platform-independent RNG.  splitmix64 streams with
// per-task seeds derived as mix(seed, task index), so sweep results are
// identical for any thread count.

#include <complex>
#include <cstdint>

namespace latwave {

struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0,1)
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in [lo,hi)
  double next_in(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  std::uint64_t next_below(std::uint64_t n) { return n ? next_u64() % n : 0; }

  std::complex<double> next_unimodular() {
    const double th = 6.283185307179586476925286766559 * next_double();
    return {std::cos(th), std::sin(th)};
  }
};

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t task) {
  // one splitmix step over a mixed word; cheap and collision-safe enough
  std::uint64_t z = seed ^ (0x9e3779b97f4a7c15ull * (task + 0x632be59bd9b4e019ull));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace latwave
