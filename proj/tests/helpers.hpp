#pragma once

#include <doctest.h>

#include <ccrfock/bogoliubov.hpp>
#include <ccrfock/doubled_space.hpp>
#include <ccrfock/types.hpp>

namespace testutil {

using ccrfock::Complex;
using ccrfock::Matrix;
using ccrfock::Vector;

inline Matrix identity(int n) { return Matrix::Identity(n, n); }

// Frobenius distance; the workhorse residual for matrix identities.
inline double dist(const Matrix& a, const Matrix& b) { return (a - b).norm(); }

// The rational one-mode squeeze: V11 = 5/4, V12 = 3/4. Every derived
// quantity of this fixture is a small rational or a fourth root of one,
// which makes it the reference chain for exact expectations.
inline ccrfock::BogoliubovOperator squeeze_fixture() {
  Matrix v(2, 2);
  v << 1.25, 0.75, 0.75, 1.25;
  return ccrfock::BogoliubovOperator::validate(v, 1, 1);
}

// Mode-doubling isometry m = 1 -> M = 2: the source mode lands on target
// mode 1 and target mode 2 spans ker V+. Index -2, yet every derived
// quantity stays exact (H = 0, the Gaussian is the identity).
inline ccrfock::BogoliubovOperator embed12_fixture() {
  Matrix v = Matrix::Zero(4, 2);
  v(0, 0) = 1.0;
  v(2, 1) = 1.0;
  return ccrfock::BogoliubovOperator::validate(v, 1, 2);
}

}  // namespace testutil
