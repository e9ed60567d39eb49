#pragma once

#include "ccrfock/bogoliubov.hpp"

namespace ccrfock {

// Margin kept below 1 when accepting ||Z||; the parametrization degenerates
// on the boundary of the disk.
inline constexpr double kDiskNormMargin = 1e-8;

// Point of the matrix disk: complex-symmetric Z (Z^T = Z) with ||Z|| < 1.
// Z parametrizes the basis projections of a doubled space of half dimension
// M; its gamma-adjoint as a K_1 -> K_2 block is Z+ = -Z^dag.
class DiskPoint {
 public:
  explicit DiskPoint(Matrix z, double tol = kTolStructural);

  int M() const { return static_cast<int>(z_.rows()); }
  const Matrix& matrix() const { return z_; }
  double norm() const { return norm_; }

 private:
  Matrix z_;
  double norm_;
};

// Basis projection on a doubled space: P^2 = P, P+ = P, P + bar(P) = 1 and
// C P positive definite on ran P. Ranges of such P are exactly the graphs
// {(u, Zu)} of disk points.
class BasisProjectionMatrix {
 public:
  explicit BasisProjectionMatrix(Matrix p, double tol = kTolStructural);

  int M() const { return static_cast<int>(p_.rows()) / 2; }
  const Matrix& matrix() const { return p_; }
  Matrix block(int row, int col) const;

 private:
  Matrix p_;
};

// Z = P21 P11^{-1}. P11 >= 1 on K_1, so the inverse is safe for a valid
// projection; throws P11NotInvertible otherwise.
DiskPoint z_from_projection(const BasisProjectionMatrix& p);

// Blocks [[Y, -Y Z^dag], [Z Y, -Z Y Z^dag]] with Y = (1 - Z^dag Z)^{-1}.
BasisProjectionMatrix projection_from_z(const DiskPoint& z);

// Fractional action of a square Bogoliubov operator on the disk:
// Z' = (U21 + U22 Z)(U11 + U12 Z)^{-1}. Compatible with conjugating the
// corresponding projections: P_{Z'} = U P_Z U+.
DiskPoint mobius_action(const BogoliubovOperator& u, const DiskPoint& z);

// Positive-definite square automorphism with U_Z P1 U_Z+ = P_Z:
// U_Z = [[(1-Z^dag Z)^{-1/2}, Z^dag (1-Z Z^dag)^{-1/2}],
//        [Z (1-Z^dag Z)^{-1/2}, (1-Z Z^dag)^{-1/2}]].
BogoliubovOperator u_from_z(const DiskPoint& z);

}  // namespace ccrfock
