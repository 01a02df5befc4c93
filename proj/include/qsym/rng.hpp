#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qsym {

/// Seeded, splittable pseudo-random generator. Streams derived via split()
/// are statistically independent and fully determined by (seed, stream id),
/// which is what makes parallel trial fan-out reproducible: worker k always
/// sees the same draws regardless of scheduling.
///
/// Draws avoid std::*_distribution (implementation-defined sequences); the
/// bounded and gaussian draws below are pinned algorithms on top of
/// mt19937_64, so identical seeds give identical results everywhere.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : base_seed_(seed), eng_(mix(seed)) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform integer in [0, n), n >= 1. Rejection sampling, no modulo bias.
  std::uint64_t bounded(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % n;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (cached pair).
  double gaussian() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

  /// Independent child stream; deterministic in (seed, stream).
  SplitRng split(std::uint64_t stream) const {
    return SplitRng(mix(base_seed_ ^ mix(stream + 0x9e3779b97f4a7c15ull)));
  }

  std::uint64_t seed() const { return base_seed_; }

 private:
  // splitmix64 finalizer, used for seed scrambling only.
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t base_seed_;
  std::mt19937_64 eng_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace qsym
