#pragma once

#include "ccrfock/types.hpp"

namespace ccrfock {

// Apply a real function to a hermitian matrix through its eigendecomposition.
// The input is hermitized first; callers guarantee it is hermitian up to
// roundoff.
template <typename F>
Matrix hermitian_function(const Matrix& a, F&& f) {
  const Matrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success)
    throw NumericallySingular("hermitian_function: eigensolver failed");
  Vector fe(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < fe.size(); ++i) fe(i) = f(es.eigenvalues()(i));
  return es.eigenvectors() * fe.asDiagonal() * es.eigenvectors().adjoint();
}

// Principal square root of a positive semidefinite matrix.
Matrix hermitian_sqrt(const Matrix& a);

// Inverse square root; throws NumericallySingular when an eigenvalue is not
// safely positive.
Matrix hermitian_inv_sqrt(const Matrix& a);

// Smallest eigenvalue of the hermitized matrix.
double min_eigenvalue(const Matrix& a);

// Orthonormal basis of the column space, rank decided at kRankRelTol
// relative to the largest singular value.
Matrix range_basis(const Matrix& a);

}  // namespace ccrfock
