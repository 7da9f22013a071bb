#pragma once

#include "lra/rational.hpp"

#include <cstdint>
#include <random>

namespace lra {

/// Deterministic sample source shared by every checker. Same seed, same
/// stream, on a given standard library.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }

  /// Small nonzero rational: mostly integers in [-3, 3], occasionally halves.
  Rational nonzero_rational() {
    int n = uniform(1, 3) * (coin() ? 1 : -1);
    return coin(0.2) ? make_rational(n, 2) : make_rational(n);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lra
