#include "ccrfock/linalg.hpp"

#include <cmath>

namespace ccrfock {

Matrix hermitian_sqrt(const Matrix& a) {
  return hermitian_function(a, [](double x) { return std::sqrt(std::max(x, 0.0)); });
}

Matrix hermitian_inv_sqrt(const Matrix& a) {
  const double lo = min_eigenvalue(a);
  if (lo <= kRankRelTol)
    throw NumericallySingular("hermitian_inv_sqrt: matrix not safely positive");
  return hermitian_function(a, [](double x) { return 1.0 / std::sqrt(x); });
}

double min_eigenvalue(const Matrix& a) {
  const Matrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

Matrix range_basis(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU);
  const auto& sigma = svd.singularValues();
  const double cutoff = sigma.size() > 0 ? kRankRelTol * sigma(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < sigma.size(); ++i)
    if (sigma(i) > cutoff) ++rank;
  return svd.matrixU().leftCols(rank);
}

}  // namespace ccrfock
