#pragma once

#include "ccrfock/disk.hpp"

namespace ccrfock {

// gamma-orthogonal projection onto the positive part of ker V+: with E the
// orthogonal projection onto the kernel and A = E C E split spectrally as
// A = A_+ - A_-, this is P_+ = A_+^{-1} C (pseudo-inverse on ran A_+, zero
// extension elsewhere). Satisfies P_+^2 = P_+, P_+^+ = P_+ and
// P_+ + bar(P_+) = A^{-1} C (the identity on the kernel).
Matrix basis_projection_of_kernel(const BogoliubovOperator& v);

struct Decomposition {
  Matrix p_kernel;              // P_+ on ker V+, zero off it
  BasisProjectionMatrix p_v;    // V P1 V+ + P_+
  DiskPoint z_v;                // disk coordinate of P_V
  BogoliubovOperator u_v;       // square factor U_{Z_V}
  BogoliubovOperator w_v;       // diagonal factor U_V+ V
};

// Canonical factorization V = U_V W_V with U_V square positive-definite and
// W_V diagonal (W12 = W21 = 0). Index is carried entirely by W_V.
Decomposition canonical_decomposition(const BogoliubovOperator& v);

// Residual of the closed-form diagonal blocks
//   W11 = (1 - Z^dag Z)^{1/2} V11,  W22 = (1 - Z Z^dag)^{1/2} V22,
// plus the size of the off-diagonal blocks of W_V.
struct WExplicitResiduals {
  double w11;
  double w22;
  double off_diagonal;
  double max() const { return std::max({w11, w22, off_diagonal}); }
};

WExplicitResiduals w_explicit_check(const BogoliubovOperator& v,
                                    const Decomposition& d);

// For square V the factors take the closed form
//   U_V = [[ |V11^*|, V12 v22^* ], [ V21 v11^*, |V22^*| ]],  W_V = diag(v11, v22)
// with v11 = V11 |V11|^{-1} the unitary polar phase and v22 = conj(v11).
struct SpecialForm {
  Matrix u;  // 2M x 2M
  Matrix w;  // 2M x 2M
};

SpecialForm automorphism_special_form(const BogoliubovOperator& v);

// General solution of Z V11 = V21 with Z symmetric:
//   Z = V21 V11^{-1} + (V22^{-1})^dag V12^dag Q1 + Z'
// where Q1 projects onto ker V11^dag and Z' is any symmetric block supported
// from ker V11^dag to ker V22^dag. The result need not be a contraction;
// NormExceeded reports ||Z|| >= 1. The canonical factorization corresponds
// to one particular admissible Z'.
DiskPoint general_z(const BogoliubovOperator& v, const Matrix& z_prime);

// The Z' recovering a given compatible disk point: its corner compression
// P_{ker V22^dag} Z P_{ker V11^dag}.
Matrix z_prime_of(const BogoliubovOperator& v, const DiskPoint& z);

// gamma-orthonormalize the columns (Gram-Schmidt against the pairing, one
// re-orthogonalization pass). Requires gamma positive definite on the span.
Matrix gamma_orthonormalize(const Matrix& columns, const DoubledSpace& space);

}  // namespace ccrfock
