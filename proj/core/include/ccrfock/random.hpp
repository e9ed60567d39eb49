#pragma once

#include <cstdint>
#include <random>

#include "ccrfock/types.hpp"

namespace ccrfock {

// Deterministic random source. std::normal_distribution is
// implementation-defined, so normals come from an explicit Box-Muller
// transform; a given seed yields the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double normal();

  // Standard complex normal, E|z|^2 = 1.
  Complex complex_normal() {
    const double re = normal();
    const double im = normal();
    return Complex(re, im) / std::sqrt(2.0);
  }

  Matrix complex_gaussian(Eigen::Index rows, Eigen::Index cols);

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Random complex-symmetric matrix rescaled to the requested operator norm.
Matrix random_symmetric_contraction(int dim, double norm, Rng& rng);

// Random isometry (cols <= rows) with orthonormal columns, via QR.
Matrix random_isometry(int rows, int cols, Rng& rng);

}  // namespace ccrfock
