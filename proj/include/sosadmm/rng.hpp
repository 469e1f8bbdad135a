#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace sosadmm {

// Deterministic sampling helper. std::mt19937_64 output is pinned by the
// standard, and the mappings below avoid std::uniform_real_distribution /
// std::normal_distribution, whose results vary across library
// implementations. Same seed, same stream, everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Standard normal via Box-Muller; values are produced in pairs.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double a;
    do {
      a = uniform01();
    } while (a <= 0.0);
    const double b = uniform01();
    const double r = std::sqrt(-2.0 * std::log(a));
    const double theta = 2.0 * M_PI * b;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  // Uniform integer in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % bound;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace sosadmm
