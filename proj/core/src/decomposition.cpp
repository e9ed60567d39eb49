#include "ccrfock/decomposition.hpp"

#include <cmath>

#include "ccrfock/linalg.hpp"

namespace ccrfock {

Matrix basis_projection_of_kernel(const BogoliubovOperator& v) {
  const int dim = v.target().dim();
  const int n = v.M() - v.m();
  if (n == 0) return Matrix::Zero(dim, dim);
  const KernelBasis kernel = kernel_of_adjoint(v);
  const Matrix e = kernel.basis * kernel.basis.adjoint();
  const Matrix a = e * v.target().charge() * e;
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (a + a.adjoint()));
  const auto& lambda = es.eigenvalues();
  const double scale = lambda.cwiseAbs().maxCoeff();
  const double cutoff = kRankRelTol * std::max(scale, 1.0);
  // The pairing is nondegenerate on the kernel: exactly n positive and n
  // negative eigenvalues, the rest numerically zero.
  int positive = 0, negative = 0;
  Matrix a_plus_inv = Matrix::Zero(dim, dim);
  for (int i = 0; i < lambda.size(); ++i) {
    if (lambda(i) > cutoff) {
      ++positive;
      a_plus_inv += (1.0 / lambda(i)) * es.eigenvectors().col(i) *
                    es.eigenvectors().col(i).adjoint();
    } else if (lambda(i) < -cutoff) {
      ++negative;
    }
  }
  if (positive != n || negative != n)
    throw DegenerateGamma(
        "basis_projection_of_kernel: pairing degenerate on ker V+");
  return a_plus_inv * v.target().charge();
}

Decomposition canonical_decomposition(const BogoliubovOperator& v) {
  Matrix p_kernel = basis_projection_of_kernel(v);
  Matrix p_total = v.matrix() * v.source().p1() * v.adjoint_matrix() + p_kernel;
  BasisProjectionMatrix p_v(std::move(p_total), kTolComposite);
  DiskPoint z_v = z_from_projection(p_v);
  BogoliubovOperator u_v = u_from_z(z_v);
  const Matrix w = u_v.adjoint_matrix() * v.matrix();
  BogoliubovOperator w_v =
      BogoliubovOperator::validate(w, v.m(), v.M(), kTolComposite);
  return Decomposition{std::move(p_kernel), std::move(p_v), std::move(z_v),
                       std::move(u_v), std::move(w_v)};
}

WExplicitResiduals w_explicit_check(const BogoliubovOperator& v,
                                    const Decomposition& d) {
  const Matrix z = d.z_v.matrix();
  const Matrix id = Matrix::Identity(v.M(), v.M());
  const Matrix left = hermitian_sqrt(id - z.adjoint() * z);
  const Matrix right = hermitian_sqrt(id - z * z.adjoint());
  WExplicitResiduals r;
  r.w11 = (d.w_v.block(1, 1) - left * v.block(1, 1)).norm();
  r.w22 = (d.w_v.block(2, 2) - right * v.block(2, 2)).norm();
  r.off_diagonal = std::hypot(d.w_v.block(1, 2).norm(), d.w_v.block(2, 1).norm());
  return r;
}

SpecialForm automorphism_special_form(const BogoliubovOperator& v) {
  if (!v.is_automorphism())
    throw NotAutomorphism("automorphism_special_form: V must be square");
  const int M = v.M();
  const Matrix v11 = v.block(1, 1), v12 = v.block(1, 2);
  const Matrix v21 = v.block(2, 1), v22 = v.block(2, 2);
  // V11 is invertible for an automorphism; |V11| inherits that.
  const double lo = std::sqrt(std::max(min_eigenvalue(v11.adjoint() * v11), 0.0));
  if (lo <= kRankRelTol)
    throw P11NotInvertible("automorphism_special_form: V11 singular");
  const Matrix abs_v11 = hermitian_sqrt(v11.adjoint() * v11);
  const Matrix phase11 = v11 * abs_v11.inverse();  // unitary polar factor
  const Matrix phase22 = phase11.conjugate();
  const Matrix abs_v11_star = hermitian_sqrt(v11 * v11.adjoint());
  const Matrix abs_v22_star = hermitian_sqrt(v22 * v22.adjoint());
  SpecialForm out;
  out.u.resize(2 * M, 2 * M);
  out.u.block(0, 0, M, M) = abs_v11_star;
  out.u.block(0, M, M, M) = v12 * phase22.adjoint();
  out.u.block(M, 0, M, M) = v21 * phase11.adjoint();
  out.u.block(M, M, M, M) = abs_v22_star;
  out.w = Matrix::Zero(2 * M, 2 * M);
  out.w.block(0, 0, M, M) = phase11;
  out.w.block(M, M, M, M) = phase22;
  return out;
}

DiskPoint general_z(const BogoliubovOperator& v, const Matrix& z_prime) {
  const int M = v.M();
  if (z_prime.rows() != M || z_prime.cols() != M)
    throw ShapeError("general_z: Z' must be M x M");
  const Matrix q1 = cokernel_projector(v.block(1, 1));
  const Matrix q2 = cokernel_projector(v.block(2, 2));
  const double sym_res = (z_prime - z_prime.transpose()).norm();
  if (sym_res > kTolComposite)
    throw NotSymmetric("general_z: Z' not symmetric", sym_res);
  const double support_res = (z_prime - q2 * z_prime * q1).norm();
  if (support_res > kTolComposite)
    throw ZNotCompatible("general_z: Z' not supported ker V11^dag -> ker V22^dag",
                         support_res);
  const Matrix v11_inv = pseudo_inverse_block(v.block(1, 1));
  const Matrix v22_inv = pseudo_inverse_block(v.block(2, 2));
  const Matrix z = v.block(2, 1) * v11_inv +
                   v22_inv.adjoint() * v.block(1, 2).adjoint() * q1 + z_prime;
  const double sym_total = (z - z.transpose()).norm();
  if (sym_total > kTolComposite)
    throw NotSymmetric("general_z: assembled Z not symmetric", sym_total);
  const double top = operator_norm(z);
  if (top > 1.0 - kDiskNormMargin)
    throw NormExceeded("general_z: assembled Z is not a strict contraction", top);
  return DiskPoint(z, kTolComposite);
}

Matrix z_prime_of(const BogoliubovOperator& v, const DiskPoint& z) {
  if (z.M() != v.M()) throw ShapeError("z_prime_of: dimension mismatch");
  const Matrix q1 = cokernel_projector(v.block(1, 1));
  const Matrix q2 = cokernel_projector(v.block(2, 2));
  return q2 * z.matrix() * q1;
}

Matrix gamma_orthonormalize(const Matrix& columns, const DoubledSpace& space) {
  if (columns.rows() != space.dim())
    throw ShapeError("gamma_orthonormalize: column length mismatch");
  const Matrix c = space.charge();
  Matrix out(columns.rows(), columns.cols());
  for (int j = 0; j < columns.cols(); ++j) {
    Vector w = columns.col(j);
    for (int pass = 0; pass < 2; ++pass)
      for (int i = 0; i < j; ++i)
        w -= out.col(i) * (out.col(i).dot(c * w));
    const double norm2 = std::real(w.dot(c * w));
    if (norm2 <= kRankRelTol)
      throw DegenerateGamma("gamma_orthonormalize: pairing not positive on span");
    out.col(j) = w / std::sqrt(norm2);
  }
  return out;
}

}  // namespace ccrfock
