// Deterministic 64-bit linear congruential generator for reproducible
// parameter sweeps.  The recurrence is Knuth's MMIX step
//
//   x_{k+1} = 6364136223846793005 * x_k + 1442695040888963407  (mod 2^64)
//
// and uniform doubles are formed from the top 53 bits, u = (x >> 11) * 2^-53,
// giving values in [0, 1).  The same seed always reproduces the same stream,
// independent of platform and thread count (callers must draw serially).
#pragma once

#include <cstdint>

namespace gl3 {

class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {
    // Mix once so that small seeds do not start in a low-entropy state.
    next();
  }

  std::uint64_t next() {
    state_ = 6364136223846793005ull * state_ + 1442695040888963407ull;
    return state_;
  }

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in {0, 1, ..., n-1} (n >= 1; modulo bias is irrelevant
  // for the small n used in sweeps).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace gl3
