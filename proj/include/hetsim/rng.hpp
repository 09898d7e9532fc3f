#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace hetsim {

// Deterministic random stream. Distributions are implemented by hand on top
// of mt19937_64 so that the same seed produces the same samples on every
// platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n).
  std::uint64_t uniform_int(std::uint64_t n) {
    // Rejection keeps the result unbiased.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  double uniform_range(double lo, double hi) {
    return lo + (hi - lo) * uniform();
  }

  // Standard normal via Box-Muller; always consumes exactly two uniforms.
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();  // log(0) guard
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  // Standard normal truncated to [-limit, +limit] sigmas.
  double truncated_normal(double limit) {
    double z = normal();
    while (std::fabs(z) > limit) z = normal();
    return z;
  }

 private:
  std::mt19937_64 engine_;
};

// Per-worker stream derivation: worker k draws from master_seed ^ k.
inline std::uint64_t worker_seed(std::uint64_t master_seed, int worker_id) {
  return master_seed ^ static_cast<std::uint64_t>(worker_id);
}

}  // namespace hetsim
