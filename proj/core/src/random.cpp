#include "ccrfock/random.hpp"

#include <cmath>

namespace ccrfock {

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

Matrix Rng::complex_gaussian(Eigen::Index rows, Eigen::Index cols) {
  Matrix out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) out(i, j) = complex_normal();
  return out;
}

Matrix random_symmetric_contraction(int dim, double norm, Rng& rng) {
  if (dim <= 0) throw ShapeError("random_symmetric_contraction: dim must be positive");
  if (norm == 0.0) return Matrix::Zero(dim, dim);
  const Matrix g = rng.complex_gaussian(dim, dim);
  Matrix z = 0.5 * (g + g.transpose());
  const double top = operator_norm(z);
  if (top > 0.0) z *= norm / top;
  return z;
}

Matrix random_isometry(int rows, int cols, Rng& rng) {
  if (cols > rows || cols <= 0)
    throw ShapeError("random_isometry: need 0 < cols <= rows");
  const Matrix g = rng.complex_gaussian(rows, cols);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
  // Fix the phase so the factorization is unique given the input.
  Matrix r = q.adjoint() * g;
  for (int j = 0; j < cols; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

}  // namespace ccrfock
