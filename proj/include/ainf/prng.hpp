#pragma once

#include <cstdint>

#include "ainf/rational.hpp"

namespace ainf {

// Fixed-algorithm seeded generator (splitmix64) so "random" sampling is
// reproducible across platforms and worker counts.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). n must be positive.
  std::uint64_t bounded(std::uint64_t n) { return next() % n; }

  // Uniform in [lo, hi], inclusive.
  int range(int lo, int hi) {
    return lo + static_cast<int>(bounded(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next() & 1) != 0; }

  // Small nonzero rational with numerator in [-m, m]\{0} and denominator in [1, d].
  Rat small_rat(int m, int d) {
    int num = range(1, m) * (coin() ? 1 : -1);
    int den = range(1, d);
    Rat r(num, den);
    r.canonicalize();
    return r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace ainf
