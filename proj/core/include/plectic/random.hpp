#pragma once

#include <cstdint>
#include <random>

#include "plectic/rational.hpp"

namespace plectic {

// PLECTIC_SEED when set, otherwise the fallback.
std::uint64_t seed_from_env(std::uint64_t fallback = 0x706c6563);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin() { return uniform(0, 1) == 1; }
  // p/q with |p| <= max_num, 1 <= q <= max_den.
  Rational rational(int max_num = 5, int max_den = 3) {
    return make_rational(uniform(-max_num, max_num), uniform(1, max_den));
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace plectic
