#include "ccrfock/implementer.hpp"

#include <cmath>

#include "ccrfock/linalg.hpp"

namespace ccrfock {

namespace {

// sum_{jk} B_{jk} a*_j a*_k for symmetric B.
Matrix pair_creation(const FockSpace& space, const Matrix& b) {
  const int modes = space.modes();
  Matrix out = Matrix::Zero(space.dim(), space.dim());
  for (int r = 0; r < space.dim(); ++r) {
    if (space.total_number(r) > space.cutoff() - 2) continue;
    const std::vector<int>& occ = space.occupation(r);
    for (int j = 0; j < modes; ++j) {
      for (int k = 0; k < modes; ++k) {
        if (b(j, k) == Complex(0.0)) continue;
        std::vector<int> up = occ;
        up[k] += 1;
        const double f1 = std::sqrt(static_cast<double>(up[k]));
        up[j] += 1;
        const double f2 = std::sqrt(static_cast<double>(up[j]));
        out(space.rank_of(up), r) += b(j, k) * f1 * f2;
      }
    }
  }
  return out;
}

// sum_{jk} B_{jk} a_j a_k for symmetric B.
Matrix pair_annihilation(const FockSpace& space, const Matrix& b) {
  return pair_creation(space, b.conjugate()).adjoint();
}

// exp of a nilpotent (pure pair creation / annihilation) operator.
Matrix exp_nilpotent(const Matrix& d, int cutoff) {
  Matrix result = Matrix::Identity(d.rows(), d.cols());
  Matrix term = result;
  for (int j = 1; j <= cutoff + 2; ++j) {
    term = (d * term) / static_cast<double>(j);
    if (term.norm() == 0.0) break;
    result += term;
  }
  return result;
}

// Cached ingredients of the Wick powers of b(H).
struct WickStage {
  std::vector<Matrix> cre_pow;  // (H12 a* a*)^i
  std::vector<Matrix> ann_pow;  // (H21 a a)^i
  std::vector<Matrix> mid;      // :(a* H11 a)^i:

  WickStage(const FockSpace& space, const QuadraticHamiltonian& h, int max_l) {
    const Matrix cre = pair_creation(space, h.h12());
    const Matrix ann = pair_annihilation(space, h.h21());
    const Matrix id = Matrix::Identity(space.dim(), space.dim());
    cre_pow.push_back(id);
    ann_pow.push_back(id);
    mid.push_back(id);
    std::vector<Matrix> cre_modes(space.modes()), ann_modes(space.modes());
    for (int j = 0; j < space.modes(); ++j) {
      cre_modes[j] = space.creation_matrix(j);
      ann_modes[j] = space.creation_matrix(j).adjoint();
    }
    for (int i = 1; i <= max_l; ++i) {
      cre_pow.push_back(cre * cre_pow[i - 1]);
      ann_pow.push_back(ann * ann_pow[i - 1]);
      // Sandwiching keeps normal order: the recursion enumerates all index
      // tuples of the normally ordered power.
      Matrix next = Matrix::Zero(space.dim(), space.dim());
      for (int j = 0; j < space.modes(); ++j)
        for (int k = 0; k < space.modes(); ++k)
          if (h.h11()(j, k) != Complex(0.0))
            next += h.h11()(j, k) * (cre_modes[j] * (mid[i - 1] * ann_modes[k]));
      mid.push_back(std::move(next));
    }
  }

  Matrix power(int l) const {
    double l_factorial = 1.0;
    for (int i = 2; i <= l; ++i) l_factorial *= i;
    Matrix out = Matrix::Zero(cre_pow[0].rows(), cre_pow[0].cols());
    for (int l1 = 0; l1 <= l; ++l1) {
      for (int l2 = 0; l2 <= l - l1; ++l2) {
        const int l3 = l - l1 - l2;
        double denom = 1.0;
        for (int i = 2; i <= l1; ++i) denom *= i;
        for (int i = 2; i <= l2; ++i) denom *= i;
        for (int i = 2; i <= l3; ++i) denom *= i;
        const double coeff = l_factorial * std::pow(2.0, l2) / denom;
        out += coeff * (cre_pow[l1] * (mid[l2] * ann_pow[l3]));
      }
    }
    return out;
  }
};

double quarter_root_det_one_minus(const Matrix& a) {
  // det(1 - A)^{1/4} for hermitian A with spectrum in [0, 1).
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (a + a.adjoint()),
                                           Eigen::EigenvaluesOnly);
  double log_det = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double one_minus = 1.0 - es.eigenvalues()(i);
    if (one_minus <= 0.0)
      throw NumericallySingular("quarter_root_det: eigenvalue at or above 1");
    log_det += std::log(one_minus);
  }
  return std::exp(0.25 * log_det);
}

Matrix annihilator_of(const FockSpace& space, const Vector& coeffs) {
  // sum_k c_k a_k.
  return creation(space, coeffs.conjugate()).adjoint();
}

void require_window(int sector, int margin, int cutoff, const char* where) {
  if (sector < 0 || sector + margin > cutoff)
    throw ShapeError(std::string(where) +
                     ": sector too close to the cutoff for a clean window");
}

}  // namespace

QuadraticHamiltonian::QuadraticHamiltonian(Matrix h11, Matrix h12, Matrix h21,
                                           double tol)
    : h11_(std::move(h11)), h12_(std::move(h12)), h21_(std::move(h21)) {
  const Eigen::Index M = h11_.rows();
  if (h11_.cols() != M || h12_.rows() != M || h12_.cols() != M ||
      h21_.rows() != M || h21_.cols() != M)
    throw ShapeError("QuadraticHamiltonian: blocks must be square of equal size");
  const double sym12 = (h12_ - h12_.transpose()).norm();
  if (sym12 > tol)
    throw NotSymmetric("QuadraticHamiltonian: H12 not symmetric", sym12);
  const double sym21 = (h21_ - h21_.transpose()).norm();
  if (sym21 > tol)
    throw NotSymmetric("QuadraticHamiltonian: H21 not symmetric", sym21);
  const double top = operator_norm(h12_);
  if (top > 1.0 - kDiskNormMargin)
    throw NormExceeded("QuadraticHamiltonian: ||H12|| not strictly below 1", top);
}

QuadraticHamiltonian h_from_vz(const BogoliubovOperator& v, const DiskPoint& z) {
  if (z.M() != v.M()) throw ShapeError("h_from_vz: disk point dimension mismatch");
  const Matrix v11 = v.block(1, 1), v12 = v.block(1, 2);
  const Matrix v21 = v.block(2, 1), v22 = v.block(2, 2);
  const Matrix zm = z.matrix();
  const double compat = (zm * v11 - v21).norm();
  if (compat > kTolComposite)
    throw ZNotCompatible("h_from_vz: Z V11 != V21", compat);
  const int m = v.m(), M = v.M();
  Matrix eps = Matrix::Zero(M, m);
  eps.topRows(m).setIdentity();
  const Matrix h11 =
      (v11 - zm.adjoint() * v21) * eps.transpose() - eps * eps.transpose();
  const Matrix h12 = -zm.adjoint();
  const Matrix h21 =
      eps * ((v22.adjoint() - v12.adjoint() * zm.adjoint()) * v21) *
      eps.transpose();
  return QuadraticHamiltonian(h11, h12, h21, kTolComposite);
}

QuadraticHamiltonian h_expanded(const BogoliubovOperator& v,
                                const Matrix& z_prime) {
  // Validates admissibility of Z' and the contraction property of the
  // assembled Z; errors propagate from here.
  const DiskPoint z = general_z(v, z_prime);
  const int m = v.m(), M = v.M();
  const Matrix v11 = v.block(1, 1), v12 = v.block(1, 2);
  const Matrix v21 = v.block(2, 1), v22 = v.block(2, 2);
  const Matrix q1 = cokernel_projector(v11);
  const Matrix q2 = cokernel_projector(v22);
  const Matrix v11_inv = pseudo_inverse_block(v11);
  const Matrix v22_inv = pseudo_inverse_block(v22);
  const Matrix zp_plus = -z_prime.adjoint();
  Matrix eps = Matrix::Zero(M, m);
  eps.topRows(m).setIdentity();
  const Matrix h11 =
      (v11_inv.adjoint() - q1 * v12 * v22_inv * v21 + zp_plus * v21) *
          eps.transpose() -
      eps * eps.transpose();
  const Matrix h12 =
      -v12 * v22_inv - v11_inv.adjoint() * v21.adjoint() * q2 + zp_plus;
  const Matrix h21 =
      eps *
      ((v22_inv - v12.adjoint() * v11_inv.adjoint() * v21.adjoint() * q2) * v21 +
       v12.adjoint() * zp_plus * v21) *
      eps.transpose();
  (void)z;
  return QuadraticHamiltonian(h11, h12, h21, kTolComposite);
}

Matrix wick_power(const FockSpace& space, const QuadraticHamiltonian& h, int l) {
  if (h.M() != space.modes()) throw ShapeError("wick_power: mode count mismatch");
  if (l < 0) throw ShapeError("wick_power: negative power");
  WickStage stage(space, h, l);
  return stage.power(l);
}

Matrix wick_exp_series(const FockSpace& space, const QuadraticHamiltonian& h) {
  if (h.M() != space.modes())
    throw ShapeError("wick_exp_series: mode count mismatch");
  // Terms with l1 > cutoff/2, l2 > cutoff or l3 > cutoff/2 vanish, so the
  // series terminates by l = 2 cutoff + 1.
  const int max_l = 2 * space.cutoff() + 1;
  WickStage stage(space, h, max_l);
  Matrix sum = Matrix::Zero(space.dim(), space.dim());
  double scale = 1.0;  // 1 / (l! 2^l)
  for (int l = 0; l <= max_l; ++l) {
    if (l > 0) scale /= 2.0 * l;
    const Matrix term = stage.power(l);
    if (l > 0 && term.norm() == 0.0) break;
    sum += scale * term;
  }
  return sum;
}

Matrix wick_exp_factored(const FockSpace& space, const QuadraticHamiltonian& h) {
  if (h.M() != space.modes())
    throw ShapeError("wick_exp_factored: mode count mismatch");
  const Matrix left =
      exp_nilpotent(0.5 * pair_creation(space, h.h12()), space.cutoff());
  const Matrix right =
      exp_nilpotent(0.5 * pair_annihilation(space, h.h21()), space.cutoff());
  const Matrix id = Matrix::Identity(space.modes(), space.modes());
  const Matrix middle = sym_power(space, space, id + h.h11());
  return left * middle * right;
}

GaussianNormCheck gaussian_vacuum_norm_check(const FockSpace& space,
                                             const QuadraticHamiltonian& h) {
  // Only the pair-creation factor moves the vacuum.
  const Matrix left =
      exp_nilpotent(0.5 * pair_creation(space, h.h12()), space.cutoff());
  GaussianNormCheck out;
  out.fock_norm = (left * vacuum(space)).norm();
  out.determinant_law = 1.0 / quarter_root_det_one_minus(h.h12() * h.h12().adjoint());
  out.residual = std::abs(out.fock_norm - out.determinant_law);
  return out;
}

ImplementerFamily build_family(const BogoliubovOperator& v, int cutoff,
                               const std::optional<Matrix>& f_basis_override) {
  Decomposition dec = canonical_decomposition(v);
  QuadraticHamiltonian h = h_from_vz(v, dec.z_v);
  const int n = v.M() - v.m();
  Matrix f_basis;
  if (f_basis_override.has_value()) {
    f_basis = *f_basis_override;
    if (f_basis.rows() != v.target().dim() || f_basis.cols() != n)
      throw ShapeError("build_family: override basis must be 2M x (M - m)");
    const Matrix gram =
        f_basis.adjoint() * v.target().charge() * f_basis;
    const double gram_res = (gram - Matrix::Identity(n, n)).norm();
    if (gram_res > kTolComposite)
      throw DegenerateGamma("build_family: override basis not gamma-orthonormal");
    const double kernel_res = (v.adjoint_matrix() * f_basis).norm();
    if (kernel_res > kTolComposite)
      throw DegenerateGamma("build_family: override basis not in ker V+");
  } else if (n > 0) {
    const KernelBasis kernel = kernel_of_adjoint(v);
    const Matrix image = dec.p_v.matrix() * kernel.basis;
    const Matrix span = range_basis(image);
    if (span.cols() != n)
      throw DegenerateGamma("build_family: P_V(ker V+) has unexpected rank");
    f_basis = gamma_orthonormalize(span, v.target());
  } else {
    f_basis = Matrix::Zero(v.target().dim(), 0);
  }
  FockSpace source(v.m(), cutoff);
  FockSpace target(v.M(), cutoff);
  std::vector<Matrix> psi;
  psi.reserve(n);
  for (int j = 0; j < n; ++j) {
    const KVector fj(v.target(), f_basis.col(j));
    psi.push_back(isometric_part(field(target, fj).matrix));
  }
  const double normalization =
      quarter_root_det_one_minus(dec.z_v.matrix().adjoint() * dec.z_v.matrix());
  Matrix gaussian = wick_exp_factored(target, h);
  Matrix embed = fock_embedding(target, source);
  Matrix psi0 = normalization * gaussian * embed;
  return ImplementerFamily{v,
                           std::move(dec),
                           std::move(h),
                           std::move(f_basis),
                           std::move(source),
                           std::move(target),
                           std::move(psi),
                           normalization,
                           std::move(gaussian),
                           std::move(embed),
                           std::move(psi0)};
}

Matrix psi_alpha(const ImplementerFamily& family, const MultiIndex& alpha) {
  Matrix out = family.psi0;
  for (int i = alpha.length() - 1; i >= 0; --i) {
    const int g = alpha.entries[i];
    if (g < 1 || g > family.generators())
      throw ShapeError("psi_alpha: generator index out of range");
    out = family.psi[g - 1] * out;
  }
  return out;
}

CommutatorResiduals verify_commutators(const FockSpace& space,
                                       const QuadraticHamiltonian& h,
                                       const Vector& u, int sector) {
  require_window(sector, 3, space.cutoff(), "verify_commutators");
  if (u.size() != space.modes())
    throw ShapeError("verify_commutators: vector length != modes");
  const Matrix g = wick_exp_factored(space, h);
  const Matrix p = number_cutoff_projector(space, sector);
  const Matrix cre_u = creation(space, u);
  const Matrix lhs1 = g * cre_u - cre_u * g;
  const Matrix rhs1 = creation(space, h.h11() * u) * g +
                      g * annihilator_of(space, h.h21() * u);
  const Matrix ann_u = creation(space, u).adjoint();
  const Matrix lhs2 = ann_u * g - g * ann_u;
  const Matrix rhs2 = creation(space, h.h12() * u.conjugate()) * g +
                      g * creation(space, h.h11().adjoint() * u).adjoint();
  CommutatorResiduals out;
  out.creation_side = (p * (lhs1 - rhs1) * p).norm();
  out.annihilation_side = (p * (lhs2 - rhs2) * p).norm();
  return out;
}

double verify_intertwiner(const ImplementerFamily& family, const KVector& f,
                          int sector, int max_alpha_len) {
  require_window(sector, 3, family.source.cutoff(), "verify_intertwiner");
  if (!(f.space == family.v.source()))
    throw ShapeError("verify_intertwiner: f must live in the source space");
  const Matrix pi_s = field(family.source, f).matrix;
  const KVector vf(family.v.target(), family.v.matrix() * f.coords);
  const Matrix pi_t = field(family.target, vf).matrix;
  const Matrix pk_s = number_cutoff_projector(family.source, sector);
  const Matrix pk_t = number_cutoff_projector(family.target, sector);
  double worst = 0.0;
  for (const MultiIndex& alpha :
       enumerate_multi_indices(family.generators(), max_alpha_len)) {
    const Matrix psi = psi_alpha(family, alpha);
    worst = std::max(worst, (pk_t * (psi * pi_s - pi_t * psi) * pk_s).norm());
  }
  return worst;
}

double verify_intertwiner_weyl(const ImplementerFamily& family,
                               const KVector& f, int sector) {
  require_window(sector, 3, family.source.cutoff(), "verify_intertwiner_weyl");
  const Matrix w_s = weyl(family.source, f).matrix;
  const KVector vf(family.v.target(), family.v.matrix() * f.coords);
  const Matrix w_t = weyl(family.target, vf).matrix;
  const Matrix pk_s = number_cutoff_projector(family.source, sector);
  const Matrix pk_t = number_cutoff_projector(family.target, sector);
  double worst = 0.0;
  for (const MultiIndex& alpha :
       enumerate_multi_indices(family.generators(), 2)) {
    const Matrix psi = psi_alpha(family, alpha);
    worst = std::max(worst, (pk_t * (psi * w_s - w_t * psi) * pk_s).norm());
  }
  return worst;
}

double AnnihilationReport::max() const {
  double worst = 0.0;
  for (double r : conjugate_direction) worst = std::max(worst, r);
  for (double r : compressed_direction) worst = std::max(worst, r);
  for (double r : operator_residual) worst = std::max(worst, r);
  return worst;
}

AnnihilationReport verify_annihilation(const ImplementerFamily& family,
                                       int sector) {
  require_window(sector, 3, family.target.cutoff(), "verify_annihilation");
  const Matrix pk_s = number_cutoff_projector(family.source, sector);
  const Matrix pk_t = number_cutoff_projector(family.target, sector);
  const Matrix v11 = family.v.block(1, 1);
  const Matrix v21 = family.v.block(2, 1);
  AnnihilationReport out;
  for (int j = 0; j < family.generators(); ++j) {
    const KVector fj(family.v.target(), family.f_basis.col(j));
    const Vector u = upper(fj);
    const Vector w = lower(fj);
    out.conjugate_direction.push_back(
        (w.conjugate() + family.h.h12() * u.conjugate()).norm());
    out.compressed_direction.push_back(
        ((v11 + family.h.h12() * v21).adjoint() * u).norm());
    out.operator_residual.push_back(
        (pk_t * (family.psi[j].adjoint() * family.psi0) * pk_s).norm());
  }
  return out;
}

CuntzReport verify_cuntz(const ImplementerFamily& family,
                         const std::vector<MultiIndex>& alphas, int sector,
                         const std::vector<Vector>& probes,
                         const std::optional<KVector>& weyl_probe) {
  if (2 * sector > family.source.cutoff())
    throw ShapeError("verify_cuntz: sector must stay below cutoff / 2");
  std::vector<Matrix> psis;
  psis.reserve(alphas.size());
  for (const MultiIndex& alpha : alphas) psis.push_back(psi_alpha(family, alpha));
  const Matrix pk_s = number_cutoff_projector(family.source, sector);
  const Matrix id = Matrix::Identity(family.source.dim(), family.source.dim());
  CuntzReport out;
  out.orthogonality_max = 0.0;
  for (std::size_t a = 0; a < psis.size(); ++a) {
    for (std::size_t b = a; b < psis.size(); ++b) {
      const Matrix prod = psis[a].adjoint() * psis[b];
      const Matrix defect = (a == b) ? Matrix(prod - id) : prod;
      out.orthogonality_max =
          std::max(out.orthogonality_max, (pk_s * defect * pk_s).norm());
    }
  }
  for (const Vector& probe : probes) {
    if (probe.size() != family.target.dim())
      throw ShapeError("verify_cuntz: probe must live in the target space");
    std::vector<double> sums;
    double acc = 0.0;
    for (const Matrix& psi : psis) {
      acc += (psi.adjoint() * probe).squaredNorm();
      sums.push_back(acc);
    }
    out.parseval.push_back(std::move(sums));
  }
  if (weyl_probe.has_value()) {
    const Matrix w_s = weyl(family.source, *weyl_probe).matrix;
    const KVector vf(family.v.target(),
                     family.v.matrix() * weyl_probe->coords);
    const Matrix w_t = weyl(family.target, vf).matrix;
    const Matrix pk_t = number_cutoff_projector(family.target, sector);
    Matrix acc = Matrix::Zero(family.target.dim(), family.target.dim());
    for (const Matrix& psi : psis) {
      acc += psi * w_s * psi.adjoint();
      out.representation.push_back((pk_t * (w_t - acc) * pk_t).norm());
    }
  }
  return out;
}

CompositionReport verify_composition(const BogoliubovOperator& v, int cutoff,
                                     int sector, int max_alpha_len) {
  const ImplementerFamily fam_v = build_family(v, cutoff);
  const ImplementerFamily fam_u =
      build_family(fam_v.decomposition.u_v, cutoff);
  // Transport the kernel basis so the two diagonal families line up
  // generator by generator.
  const Matrix e_basis =
      fam_v.decomposition.u_v.adjoint_matrix() * fam_v.f_basis;
  const ImplementerFamily fam_w =
      build_family(fam_v.decomposition.w_v, cutoff,
                   e_basis.cols() > 0 ? std::optional<Matrix>(e_basis)
                                      : std::nullopt);
  require_window(sector, 4, cutoff, "verify_composition");
  const Matrix pk_s = number_cutoff_projector(fam_v.source, sector);
  const Matrix pk_t = number_cutoff_projector(fam_v.target, sector);
  CompositionReport out;
  out.factor_residual_max = 0.0;
  for (const MultiIndex& alpha :
       enumerate_multi_indices(fam_v.generators(), max_alpha_len)) {
    const Matrix lhs = psi_alpha(fam_v, alpha);
    const Matrix rhs = fam_u.psi0 * psi_alpha(fam_w, alpha);
    out.factor_residual_max =
        std::max(out.factor_residual_max, (pk_t * (lhs - rhs) * pk_s).norm());
  }
  out.vacuum_residual =
      (fam_v.psi0 * vacuum(fam_v.source) - fam_u.psi0 * vacuum(fam_u.target))
          .norm();
  return out;
}

Matrix k1_kernel_basis(const BogoliubovOperator& v) {
  // u in K_1 lies in ker V+ iff V11^dag u = 0 and V12^dag u = 0.
  Matrix stacked(2 * v.m(), v.M());
  stacked.topRows(v.m()) = v.block(1, 1).adjoint();
  stacked.bottomRows(v.m()) = v.block(1, 2).adjoint();
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double cutoff = sigma.size() > 0 ? kRankRelTol * sigma(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < sigma.size(); ++i)
    if (sigma(i) > cutoff) ++rank;
  return svd.matrixV().rightCols(v.M() - rank);
}

GnsReport verify_gns(const BogoliubovOperator& v, int cutoff, const KVector& f,
                     int max_alpha_len) {
  if (!(f.space == v.source()))
    throw ShapeError("verify_gns: f must live in the source space");
  const Matrix e_basis = k1_kernel_basis(v);
  FockSpace target(v.M(), cutoff);
  const KVector vf(v.target(), v.matrix() * f.coords);
  const Matrix w = weyl(target, vf).matrix;
  const Vector omega = vacuum(target);
  const Complex base = omega.dot(w * omega);
  std::vector<Vector> phis;
  for (const MultiIndex& alpha : enumerate_multi_indices(
           static_cast<int>(e_basis.cols()), max_alpha_len))
    phis.push_back(phi_alpha(target, e_basis, alpha));
  GnsReport out;
  out.diagonal_max = 0.0;
  out.cross_max = 0.0;
  out.n_vectors = static_cast<int>(phis.size());
  for (std::size_t a = 0; a < phis.size(); ++a) {
    for (std::size_t b = a; b < phis.size(); ++b) {
      const Complex value = phis[a].dot(w * phis[b]);
      if (a == b)
        out.diagonal_max = std::max(out.diagonal_max, std::abs(value - base));
      else
        out.cross_max = std::max(out.cross_max, std::abs(value));
    }
  }
  return out;
}

}  // namespace ccrfock
