#include "ccrfock/bogoliubov.hpp"

#include <algorithm>

#include "ccrfock/disk.hpp"
#include "ccrfock/linalg.hpp"
#include "ccrfock/random.hpp"

namespace ccrfock {

BogoliubovOperator BogoliubovOperator::validate(const Matrix& v, int m, int M,
                                                double tol) {
  if (m <= 0 || M < m) throw ShapeError("validate: need 0 < m <= M");
  if (v.rows() != 2 * M || v.cols() != 2 * m)
    throw ShapeError("validate: matrix must be 2M x 2m");
  DoubledSpace source(m), target(M);
  KOperator op(source, target, v);
  const double conj_res = conjugation_residual(op);
  if (conj_res > tol)
    throw NotConjugationInvariant("validate: bar(V) != V", conj_res);
  const Matrix vplus = source.charge() * v.adjoint() * target.charge();
  const double iso_res = (vplus * v - Matrix::Identity(2 * m, 2 * m)).norm();
  if (iso_res > tol) throw NotGammaIsometry("validate: V+ V != 1", iso_res);
  return BogoliubovOperator(source, target, v);
}

BogoliubovOperator BogoliubovOperator::validate(const Matrix& v, double tol) {
  if (v.rows() % 2 != 0 || v.cols() % 2 != 0)
    throw ShapeError("validate: dimensions must be even");
  return validate(v, static_cast<int>(v.cols() / 2),
                  static_cast<int>(v.rows() / 2), tol);
}

Matrix BogoliubovOperator::block(int row, int col) const {
  return component(as_koperator(), row, col);
}

Matrix BogoliubovOperator::adjoint_matrix() const {
  return source_.charge() * matrix_.adjoint() * target_.charge();
}

KernelBasis kernel_of_adjoint(const BogoliubovOperator& v) {
  const Matrix vplus = v.adjoint_matrix();  // 2m x 2M, full row rank
  Eigen::JacobiSVD<Matrix> svd(vplus, Eigen::ComputeFullV);
  const int n = 2 * (v.M() - v.m());
  KernelBasis out;
  out.basis = svd.matrixV().rightCols(n);
  out.gamma_gram = out.basis.adjoint() * v.target().charge() * out.basis;
  if (n == 0) {
    out.gram_min_singular_value = 0.0;
    return out;
  }
  Eigen::JacobiSVD<Matrix> gram_svd(out.gamma_gram);
  out.gram_min_singular_value =
      gram_svd.singularValues()(gram_svd.singularValues().size() - 1);
  return out;
}

double RelationResiduals::max() const {
  return std::max({isometry_diag, isometry_off, conj_21, conj_22});
}

RelationResiduals check_relations(const BogoliubovOperator& v) {
  const Matrix v11 = v.block(1, 1), v12 = v.block(1, 2);
  const Matrix v21 = v.block(2, 1), v22 = v.block(2, 2);
  const Matrix id = Matrix::Identity(v.m(), v.m());
  RelationResiduals r;
  r.isometry_diag = (v11.adjoint() * v11 - v21.adjoint() * v21 - id).norm();
  r.isometry_off = (v11.adjoint() * v12 - v21.adjoint() * v22).norm();
  r.conj_21 = (v21 - v12.conjugate()).norm();
  r.conj_22 = (v22 - v11.conjugate()).norm();
  return r;
}

Matrix pseudo_inverse_block(const Matrix& b) {
  if (b.size() == 0) return b.transpose();
  Eigen::JacobiSVD<Matrix> svd(b, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sigma = svd.singularValues();
  const double cutoff = kRankRelTol * sigma(0);
  const int k = static_cast<int>(std::min(b.rows(), b.cols()));
  if (sigma(k - 1) <= cutoff)
    throw NotInjective("pseudo_inverse_block: block has nontrivial kernel");
  Vector inv(k);
  for (int i = 0; i < k; ++i) inv(i) = 1.0 / sigma(i);
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

Matrix cokernel_projector(const Matrix& b) {
  Eigen::JacobiSVD<Matrix> svd(b, Eigen::ComputeFullU);
  const auto& sigma = svd.singularValues();
  const double cutoff =
      sigma.size() > 0 ? kRankRelTol * sigma(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < sigma.size(); ++i)
    if (sigma(i) > cutoff) ++rank;
  const Matrix null_basis = svd.matrixU().rightCols(b.rows() - rank);
  return null_basis * null_basis.adjoint();
}

StateOperators state_operators(const BogoliubovOperator& v) {
  const Matrix p1 = v.target().p1();
  StateOperators out;
  out.s = v.adjoint_matrix() * p1 * v.matrix();
  // S-tilde = V^dag P1 V = C S.
  out.s_tilde = v.matrix().adjoint() * p1 * v.matrix();
  return out;
}

PurityDefects purity_equivalence(const BogoliubovOperator& v) {
  const StateOperators st = state_operators(v);
  const Matrix p1 = v.target().p1();
  const Matrix range_proj = v.matrix() * v.adjoint_matrix();
  PurityDefects out;
  out.s_idempotency = (st.s * st.s - st.s).norm();
  out.range_commutator = (p1 * range_proj - range_proj * p1).norm();
  return out;
}

ShaleDiagnostics shale_diagnostics(const BogoliubovOperator& v) {
  ShaleDiagnostics out;
  out.off_diagonal_hs = v.block(1, 2).norm();
  const Matrix abs_v = hermitian_sqrt(v.matrix().adjoint() * v.matrix());
  out.polar_defect =
      (abs_v - Matrix::Identity(abs_v.rows(), abs_v.cols())).norm();
  return out;
}

double block_distance(const BogoliubovOperator& a, const BogoliubovOperator& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target()))
    throw ShapeError("block_distance: operators act between different spaces");
  return operator_norm(a.matrix() - b.matrix()) +
         (a.block(1, 2) - b.block(1, 2)).norm();
}

BogoliubovOperator random_bogoliubov(int m, int M, double z_norm_bound,
                                     std::uint64_t seed) {
  if (m <= 0 || M < m) throw ShapeError("random_bogoliubov: need 0 < m <= M");
  if (z_norm_bound < 0.0 || z_norm_bound >= 1.0)
    throw NormExceeded("random_bogoliubov: z_norm_bound must lie in [0, 1)",
                       z_norm_bound);
  Rng rng(seed);
  Matrix z = Matrix::Zero(M, M);
  if (z_norm_bound > 0.0) {
    const double norm = z_norm_bound * (0.25 + 0.75 * rng.uniform());
    z = random_symmetric_contraction(M, norm, rng);
  }
  const BogoliubovOperator u = u_from_z(DiskPoint(z));
  const Matrix w = random_isometry(M, m, rng);
  const Matrix zero = Matrix::Zero(M, m);
  const KOperator wop = from_blocks(DoubledSpace(m), DoubledSpace(M), w, zero,
                                    zero, w.conjugate());
  return BogoliubovOperator::validate(u.matrix() * wop.matrix, m, M);
}

}  // namespace ccrfock
