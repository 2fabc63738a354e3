#pragma once

#include <cstdint>
#include <random>

#include "snail/params.hpp"

namespace snail::testing {

inline constexpr std::uint64_t kSeed = 0x5A11;

class Gen {
 public:
  explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }

  // -lim < alpha <= beta < lim
  SnailParams interior(double lim = 0.9) {
    const double a = uniform(-lim, lim);
    const double b = uniform(-lim, lim);
    return validate_params(std::min(a, b), std::max(a, b), uniform(0.0, 0.95));
  }

  // interior triples plus the special families and the unbounded endpoints
  SnailParams admissible() {
    const double a = uniform(0.05, 0.9);
    const double g = uniform(0.0, 0.95);
    switch (integer(0, 7)) {
      case 0: return validate_params(a, a, g);
      case 1: return validate_params(-a, a, g);
      case 2: return validate_params(0.0, a, g);
      case 3: return validate_params(-a, 0.0, g);
      case 4: return validate_params(uniform(-0.9, 0.9), 1.0, g);
      case 5: return validate_params(-1.0, uniform(-0.9, 0.9), g);
      default: return interior();
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace snail::testing
