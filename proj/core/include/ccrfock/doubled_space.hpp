#pragma once

#include "ccrfock/types.hpp"

namespace ccrfock {

// Doubled one-particle space K = K_1 (+) K_2 of total dimension 2m, carrying
// the antiunitary conjugation f* = J conj(f) (J swaps the two halves) and the
// hermitian pairing gamma(f, g) = <f, C g> with C = diag(+1_m, -1_m).
//
// Basis convention throughout: coordinates 1..m span K_1, m+1..2m span K_2,
// and the conjugation maps the j-th K_1 basis vector to the j-th K_2 one.
class DoubledSpace {
 public:
  explicit DoubledSpace(int half_dim) : m_(half_dim) {
    if (half_dim <= 0) throw ShapeError("DoubledSpace: half_dim must be positive");
  }

  int half_dim() const { return m_; }
  int dim() const { return 2 * m_; }

  // J: swaps the K_1 and K_2 blocks.
  Matrix swap() const;
  // C = diag(+1_m, -1_m); gamma(f, g) = <f, C g>.
  Matrix charge() const;
  // Orthogonal projections onto K_1 and K_2.
  Matrix p1() const;
  Matrix p2() const;

  friend bool operator==(const DoubledSpace&, const DoubledSpace&) = default;

 private:
  int m_;
};

// Element of a doubled space, tagged with the space it lives in.
struct KVector {
  DoubledSpace space;
  Vector coords;

  KVector(const DoubledSpace& s, Vector c) : space(s), coords(std::move(c)) {
    if (coords.size() != space.dim())
      throw ShapeError("KVector: coordinate length does not match space");
  }
};

// Linear map between doubled spaces, stored as a dense 2M x 2m matrix.
struct KOperator {
  DoubledSpace domain;
  DoubledSpace codomain;
  Matrix matrix;

  KOperator(const DoubledSpace& dom, const DoubledSpace& cod, Matrix a)
      : domain(dom), codomain(cod), matrix(std::move(a)) {
    if (matrix.rows() != codomain.dim() || matrix.cols() != domain.dim())
      throw ShapeError("KOperator: matrix shape does not match spaces");
  }
};

// j-th K_1 basis vector (j in 0..m-1) and its conjugate partner in K_2.
KVector basis_vector(const DoubledSpace& space, int j);
KVector conjugate_basis_vector(const DoubledSpace& space, int j);

// f* = J conj(f). Antilinear involution.
KVector conjugate_vector(const KVector& f);

// gamma(f, g) = <f, C g>, antilinear in f. Hermitian; gamma(f*, g*) = -conj(gamma(f, g)).
Complex gamma_form(const KVector& f, const KVector& g);

Complex inner_product(const KVector& f, const KVector& g);

// Component halves of a vector: P_1 f and P_2 f as bare m-vectors.
Vector upper(const KVector& f);
Vector lower(const KVector& f);

// gamma-adjoint A+ = C_dom A^dag C_cod, the adjoint w.r.t. the pairing:
// gamma(A+ f, g) = gamma(f, A g).
KOperator gamma_adjoint(const KOperator& a);

// bar(A) = J_cod conj(A) J_dom, i.e. bar(A) f = (A f*)*. A commutes with the
// conjugations exactly when bar(A) = A.
KOperator bar_operator(const KOperator& a);

// Block A_{rc} = P_r A P_c as a bare M x m matrix; r, c in {1, 2}.
Matrix component(const KOperator& a, int row, int col);

// Reassemble an operator from its four blocks.
KOperator from_blocks(const DoubledSpace& dom, const DoubledSpace& cod,
                      const Matrix& a11, const Matrix& a12, const Matrix& a21,
                      const Matrix& a22);

// Residual of conjugation invariance, ||bar(A) - A||_F.
double conjugation_residual(const KOperator& a);

}  // namespace ccrfock
