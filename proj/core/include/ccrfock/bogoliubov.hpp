#pragma once

#include <cstdint>

#include "ccrfock/doubled_space.hpp"

namespace ccrfock {

// Conjugation-invariant gamma-isometry V: K -> K' between doubled spaces,
// i.e. bar(V) = V and V+ V = 1. These are exactly the maps implementing a
// symmetry-preserving linear transformation of the field modes; V is square
// (m = M) for automorphisms and strictly rectangular for proper
// endomorphisms.
class BogoliubovOperator {
 public:
  // Validates shape (2M x 2m, M >= m), bar(V) = V and V+ V = 1 within tol.
  // Throws ShapeError / NotConjugationInvariant / NotGammaIsometry.
  static BogoliubovOperator validate(const Matrix& v, int m, int M,
                                     double tol = kTolStructural);
  // Shape deduced from the matrix dimensions.
  static BogoliubovOperator validate(const Matrix& v,
                                     double tol = kTolStructural);

  const DoubledSpace& source() const { return source_; }
  const DoubledSpace& target() const { return target_; }
  int m() const { return source_.half_dim(); }
  int M() const { return target_.half_dim(); }
  const Matrix& matrix() const { return matrix_; }

  // Block V_{rc} as a bare M x m matrix.
  Matrix block(int row, int col) const;

  KOperator as_koperator() const { return KOperator(source_, target_, matrix_); }

  // V+ = C V^dag C' as a bare 2m x 2M matrix.
  Matrix adjoint_matrix() const;

  // Fredholm-type index -2(M - m); 0 exactly for automorphisms.
  int index() const { return -2 * (M() - m()); }

  bool is_automorphism() const { return m() == M(); }

 private:
  BogoliubovOperator(const DoubledSpace& s, const DoubledSpace& t, Matrix v)
      : source_(s), target_(t), matrix_(std::move(v)) {}

  DoubledSpace source_;
  DoubledSpace target_;
  Matrix matrix_;
};

// Orthonormal basis (columns) of ker V+ together with the smallest singular
// value of the gamma Gram matrix on it. The kernel has dimension 2(M - m)
// and the pairing stays nondegenerate on it.
struct KernelBasis {
  Matrix basis;                    // 2M x 2(M-m), <,>-orthonormal columns
  Matrix gamma_gram;               // basis^dag C basis
  double gram_min_singular_value;  // 0 would mean a degenerate pairing
};

KernelBasis kernel_of_adjoint(const BogoliubovOperator& v);

// Residuals of the four block identities equivalent to bar(V) = V, V+ V = 1:
//   (1) V11^dag V11 - V21^dag V21 = 1      (2) V11^dag V12 = V21^dag V22
//   (3) V21 = conj(V12)                    (4) V22 = conj(V11)
struct RelationResiduals {
  double isometry_diag;
  double isometry_off;
  double conj_21;
  double conj_22;
  double max() const;
};

RelationResiduals check_relations(const BogoliubovOperator& v);

// Pseudo-inverse of an injective block: inverse on the range, zero on the
// orthogonal complement. Throws NotInjective when the smallest singular value
// falls below kRankRelTol * sigma_max.
Matrix pseudo_inverse_block(const Matrix& b);

// Orthogonal projection onto the cokernel ker(B^dag) of a block.
Matrix cokernel_projector(const Matrix& b);

// S = V+ P1 V and S-tilde = V* P1 V acting on the source space. S determines
// the transformed quasi-free state: <Omega, pi(Vf)* pi(Vg) Omega> = gamma(f, S g).
struct StateOperators {
  Matrix s;        // V+ P1 V
  Matrix s_tilde;  // V* P1 V = C S
};

StateOperators state_operators(const BogoliubovOperator& v);

// The transformed state is pure (Fock) iff S is idempotent iff P1 commutes
// with V V+. Returns both defect norms; they vanish together.
struct PurityDefects {
  double s_idempotency;      // ||S^2 - S||
  double range_commutator;   // ||[P1, V V+]||
};

PurityDefects purity_equivalence(const BogoliubovOperator& v);

// Hilbert-Schmidt size of the off-diagonal part and distance of |V| from 1;
// finite-dimensional stand-ins for the implementability diagnostics.
struct ShaleDiagnostics {
  double off_diagonal_hs;  // ||V12||_HS
  double polar_defect;     // || |V| - 1 ||_HS
};

ShaleDiagnostics shale_diagnostics(const BogoliubovOperator& v);

// Operator-norm distance plus HS distance of the off-diagonal blocks.
// Diagnostic metric only; no continuity claims attach to it.
double block_distance(const BogoliubovOperator& a, const BogoliubovOperator& b);

// Seeded random Bogoliubov operator V = U_Z W with ||Z|| <= z_norm_bound and
// W a diagonal isometry. Same seed, same result, on any platform.
BogoliubovOperator random_bogoliubov(int m, int M, double z_norm_bound,
                                     std::uint64_t seed);

}  // namespace ccrfock
