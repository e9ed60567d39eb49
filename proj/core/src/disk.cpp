#include "ccrfock/disk.hpp"

#include "ccrfock/linalg.hpp"

namespace ccrfock {

DiskPoint::DiskPoint(Matrix z, double tol) : z_(std::move(z)) {
  if (z_.rows() != z_.cols() || z_.rows() == 0)
    throw ShapeError("DiskPoint: matrix must be square and nonempty");
  const double sym_res = (z_ - z_.transpose()).norm();
  if (sym_res > tol) throw NotSymmetric("DiskPoint: Z^T != Z", sym_res);
  norm_ = operator_norm(z_);
  if (norm_ > 1.0 - kDiskNormMargin)
    throw NormExceeded("DiskPoint: ||Z|| not strictly below 1", norm_);
}

BasisProjectionMatrix::BasisProjectionMatrix(Matrix p, double tol)
    : p_(std::move(p)) {
  if (p_.rows() != p_.cols() || p_.rows() == 0 || p_.rows() % 2 != 0)
    throw ShapeError("BasisProjectionMatrix: matrix must be square of even size");
  const DoubledSpace space(static_cast<int>(p_.rows()) / 2);
  const Matrix id = Matrix::Identity(p_.rows(), p_.cols());
  const double idem = (p_ * p_ - p_).norm();
  if (idem > tol) throw NotProjection("BasisProjectionMatrix: P^2 != P", idem);
  const KOperator op(space, space, p_);
  const Matrix pplus = gamma_adjoint(op).matrix;
  const double selfadj = (pplus - p_).norm();
  if (selfadj > tol)
    throw NotProjection("BasisProjectionMatrix: P+ != P", selfadj);
  const double basis_res = (p_ + bar_operator(op).matrix - id).norm();
  if (basis_res > tol)
    throw NotProjection("BasisProjectionMatrix: P + bar(P) != 1", basis_res);
  // C P is hermitian here; positivity on ran P makes gamma a genuine inner
  // product there.
  const Matrix range = range_basis(p_);
  if (range.cols() > 0) {
    const double lo = min_eigenvalue(range.adjoint() * space.charge() * p_ * range);
    if (lo <= kRankRelTol)
      throw NotProjection("BasisProjectionMatrix: C P not positive on ran P", lo);
  }
}

Matrix BasisProjectionMatrix::block(int row, int col) const {
  const DoubledSpace space(M());
  return component(KOperator(space, space, p_), row, col);
}

DiskPoint z_from_projection(const BasisProjectionMatrix& p) {
  const Matrix p11 = p.block(1, 1);
  // P11 = (1 - Z^dag Z)^{-1} >= 1 for a valid projection.
  const double lo = min_eigenvalue(p11);
  if (lo < kDiskNormMargin)
    throw P11NotInvertible("z_from_projection: P11 not safely invertible");
  const Matrix z = p.block(2, 1) * p11.inverse();
  return DiskPoint(z, kTolComposite);
}

BasisProjectionMatrix projection_from_z(const DiskPoint& z) {
  const int M = z.M();
  const Matrix id = Matrix::Identity(M, M);
  const Matrix y = (id - z.matrix().adjoint() * z.matrix()).inverse();
  Matrix p(2 * M, 2 * M);
  p.block(0, 0, M, M) = y;
  p.block(0, M, M, M) = -y * z.matrix().adjoint();
  p.block(M, 0, M, M) = z.matrix() * y;
  p.block(M, M, M, M) = -z.matrix() * y * z.matrix().adjoint();
  return BasisProjectionMatrix(std::move(p), kTolComposite);
}

DiskPoint mobius_action(const BogoliubovOperator& u, const DiskPoint& z) {
  if (!u.is_automorphism())
    throw NotAutomorphism("mobius_action: operator must be square");
  if (u.M() != z.M())
    throw ShapeError("mobius_action: dimension mismatch");
  const Matrix denom = u.block(1, 1) + u.block(1, 2) * z.matrix();
  Eigen::JacobiSVD<Matrix> svd(denom);
  const auto& sigma = svd.singularValues();
  if (sigma(sigma.size() - 1) <= kRankRelTol * sigma(0))
    throw NumericallySingular("mobius_action: U11 + U12 Z is singular");
  const Matrix zp =
      (u.block(2, 1) + u.block(2, 2) * z.matrix()) * denom.inverse();
  return DiskPoint(zp, kTolComposite);
}

BogoliubovOperator u_from_z(const DiskPoint& z) {
  const int M = z.M();
  const Matrix id = Matrix::Identity(M, M);
  const Matrix zm = z.matrix();
  const Matrix left = hermitian_inv_sqrt(id - zm.adjoint() * zm);
  const Matrix right = hermitian_inv_sqrt(id - zm * zm.adjoint());
  const DoubledSpace space(M);
  const KOperator u = from_blocks(space, space, left, zm.adjoint() * right,
                                  zm * left, right);
  return BogoliubovOperator::validate(u.matrix, M, M, kTolComposite);
}

}  // namespace ccrfock
