#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace ccrfock {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Default tolerance tiers. Structural identities (pure linear algebra) sit at
// kTolStructural; multi-stage pipelines at kTolComposite; anything limited by
// Fock-space truncation of an exponential series at kTolTruncation.
inline constexpr double kTolStructural = 1e-10;
inline constexpr double kTolComposite = 1e-8;
inline constexpr double kTolTruncation = 1e-6;

// Relative cutoff below which singular values / eigenvalues count as zero.
inline constexpr double kRankRelTol = 1e-12;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dimension or block-shape mismatch between operands.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Base for value-level validation failures; carries the offending residual.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_ = 0.0;
};

class NotConjugationInvariant : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotGammaIsometry : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotSymmetric : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Strict-contraction bound ||Z|| < 1 (or a derived norm condition) violated.
class NormExceeded : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotProjection : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotInjective : public Error {
 public:
  using Error::Error;
};

class P11NotInvertible : public Error {
 public:
  using Error::Error;
};

class NumericallySingular : public Error {
 public:
  using Error::Error;
};

// The pairing form restricted to a kernel subspace lost full rank.
class DegenerateGamma : public Error {
 public:
  using Error::Error;
};

class NotAutomorphism : public Error {
 public:
  using Error::Error;
};

class ZNotCompatible : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A vector expected to satisfy f = f* (real for the doubled conjugation).
class NotReal : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

inline double operator_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(a).singularValues()(0);
}

inline double frobenius(const Matrix& a) { return a.norm(); }

}  // namespace ccrfock
