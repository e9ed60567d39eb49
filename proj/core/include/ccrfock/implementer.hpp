#pragma once

#include <optional>
#include <vector>

#include "ccrfock/decomposition.hpp"
#include "ccrfock/fock.hpp"

namespace ccrfock {

// Kernel of a Wick-ordered quadratic expression
//   b(H) = H12 a* a* + 2 H11 a* a + H21 a a   (index sums implied)
// with H12, H21 symmetric, ||H12|| < 1, and the fourth block determined by
// H22 = H11^T. All blocks are M x M for a target space of M modes.
class QuadraticHamiltonian {
 public:
  QuadraticHamiltonian(Matrix h11, Matrix h12, Matrix h21,
                       double tol = kTolStructural);

  int M() const { return static_cast<int>(h11_.rows()); }
  const Matrix& h11() const { return h11_; }
  const Matrix& h12() const { return h12_; }
  const Matrix& h21() const { return h21_; }
  Matrix h22() const { return h11_.transpose(); }

 private:
  Matrix h11_, h12_, h21_;
};

// Quadratic kernel attached to a Bogoliubov operator V and a compatible disk
// point Z (Z V11 = V21):
//   H11 = (V11 - Z^dag V21) eps^dag - eps eps^dag,   H12 = -Z^dag,
//   H21 = eps (V22^dag - V12^dag Z^dag) V21 eps^dag, H22 = H11^T,
// where eps embeds the m source modes into the M target modes. For square V
// this reduces to H11 = V11 - 1 + Z+ V21 etc.; for the canonical Z of the
// embedding fixture H vanishes identically.
QuadraticHamiltonian h_from_vz(const BogoliubovOperator& v, const DiskPoint& z);

// Same kernel assembled from the expanded block formulas in terms of
// pseudo-inverses and cokernel projections of V11, V22 and the free
// parameter Z'. Agrees with h_from_vz(v, general_z(v, z_prime)).
QuadraticHamiltonian h_expanded(const BogoliubovOperator& v,
                                const Matrix& z_prime);

// Wick-ordered power :b(H)^l: as a dense operator. Slow reference
// implementation used as the series oracle:
//   :b(H)^l: = l! sum_{l1+l2+l3=l} 2^{l2}/(l1! l2! l3!) C^{l1} M_{l2} A^{l3}
// with C = H12 a* a*, A = H21 a a and M_l the normally ordered l-th power of
// a* H11 a.
Matrix wick_power(const FockSpace& space, const QuadraticHamiltonian& h, int l);

// :exp(b(H)/2): summed term by term through wick_power; terminates exactly
// once l exceeds the cutoff budget.
Matrix wick_exp_series(const FockSpace& space, const QuadraticHamiltonian& h);

// Factored form exp(H12 a* a* / 2) Gamma(1 + H11) exp(H21 a a / 2); equals
// the series on the nose.
Matrix wick_exp_factored(const FockSpace& space, const QuadraticHamiltonian& h);

// Fock norm of :exp(b(H)/2): Omega against the closed form
// det(1 - H12 H12^dag)^{-1/4}.
struct GaussianNormCheck {
  double fock_norm;
  double determinant_law;
  double residual;  // |fock_norm - determinant_law|
};

GaussianNormCheck gaussian_vacuum_norm_check(const FockSpace& space,
                                             const QuadraticHamiltonian& h);

// The implementer family of V at a given cutoff. Implementers are maps from
// the source Fock space (m modes) to the target one (M modes):
//   Psi_alpha = normalization * psi_alpha_1 ... psi_alpha_l * gaussian * embed
// with psi_j the isometric part of the field of the j-th gamma-orthonormal
// basis vector of P_V(ker V+), gaussian = :exp(b(H_V)/2):, and embed the
// vacuum-preserving inclusion of the source space. For automorphisms the
// family is the single unitary Psi_0.
struct ImplementerFamily {
  BogoliubovOperator v;
  Decomposition decomposition;
  QuadraticHamiltonian h;
  Matrix f_basis;  // 2M x n, n = M - m
  FockSpace source;
  FockSpace target;
  std::vector<Matrix> psi;
  double normalization;  // det(1 - Z^dag Z)^{1/4}
  Matrix gaussian;
  Matrix embed;
  Matrix psi0;  // normalization * gaussian * embed

  int generators() const { return static_cast<int>(psi.size()); }
};

ImplementerFamily build_family(
    const BogoliubovOperator& v, int cutoff,
    const std::optional<Matrix>& f_basis_override = std::nullopt);

// Psi_alpha as a target-dim x source-dim matrix.
Matrix psi_alpha(const ImplementerFamily& family, const MultiIndex& alpha);

// Exponential-level commutation of the Gaussian G = :exp(b(H)/2): with a
// single mode, compressed to total number <= sector on both sides:
//   [G, a*(u)] = a*(H11 u) G + G a((H21 u)*)
//   [a(u), G] = a*(H12 conj(u)) G + G a(H11^dag u)
struct CommutatorResiduals {
  double creation_side;
  double annihilation_side;
  double max() const { return std::max(creation_side, annihilation_side); }
};

CommutatorResiduals verify_commutators(const FockSpace& space,
                                       const QuadraticHamiltonian& h,
                                       const Vector& u, int sector);

// Residual of Psi_alpha pi_source(f) = pi_target(Vf) Psi_alpha compressed to
// total number <= sector, maximized over alpha with |alpha| <= max_alpha_len.
double verify_intertwiner(const ImplementerFamily& family, const KVector& f,
                          int sector, int max_alpha_len = 2);

// Weyl version at small field norm; truncation-limited.
double verify_intertwiner_weyl(const ImplementerFamily& family,
                               const KVector& f, int sector);

// Annihilation structure of the vacuum implementer.
struct AnnihilationReport {
  // ||(P1 + H12) f_j^*|| per generator: the conjugate of f_j is annihilated
  // by the creation-corrected part.
  std::vector<double> conjugate_direction;
  // ||(V11 + H12 V21)^dag (P1 f_j)|| per generator: source-compressed form
  // of the complementary condition.
  std::vector<double> compressed_direction;
  // ||P_k psi_j^dag Psi_0 P_k|| per generator.
  std::vector<double> operator_residual;
  double max() const;
};

AnnihilationReport verify_annihilation(const ImplementerFamily& family,
                                       int sector);

// Relations of an isometric Cuntz family.
struct CuntzReport {
  // max over pairs of ||P_k (Psi_a^dag Psi_b - delta_ab 1) P_k||.
  double orthogonality_max;
  // Parseval partial sums sum_alpha ||Psi_alpha^dag phi||^2 per probe,
  // accumulated along the alpha list.
  std::vector<std::vector<double>> parseval;
  // ||P_k (w(Vf) - sum_alpha Psi_alpha w(f) Psi_alpha^dag) P_k|| along the
  // alpha list for the probe field f.
  std::vector<double> representation;
};

CuntzReport verify_cuntz(const ImplementerFamily& family,
                         const std::vector<MultiIndex>& alphas, int sector,
                         const std::vector<Vector>& probes,
                         const std::optional<KVector>& weyl_probe = std::nullopt);

// Factorization of implementers along V = U_V W_V, with the diagonal-factor
// family built on the transported basis e_j = U_V+ f_j:
//   Psi_alpha(V) = Psi(U_V) Psi_alpha(W_V).
struct CompositionReport {
  double factor_residual_max;  // over |alpha| <= max_alpha_len, compressed
  double vacuum_residual;      // ||Psi_0(V) Omega_src - Psi(U_V) Omega_tgt||
};

CompositionReport verify_composition(const BogoliubovOperator& v, int cutoff,
                                     int sector, int max_alpha_len = 2);

// State transport: matrix elements of a Weyl element w(Vf) in the vectors
// phi_alpha built over an orthonormal basis of K_1 intersect ker V+
// reproduce the vacuum functional diagonally and vanish off the diagonal.
struct GnsReport {
  double diagonal_max;
  double cross_max;
  int n_vectors;
};

GnsReport verify_gns(const BogoliubovOperator& v, int cutoff, const KVector& f,
                     int max_alpha_len = 2);

// Orthonormal basis (columns) of K_1 intersect ker V+, dimension M - m for
// diagonal V, possibly 0 otherwise.
Matrix k1_kernel_basis(const BogoliubovOperator& v);

}  // namespace ccrfock
