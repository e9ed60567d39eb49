#include "ccrfock/fock.hpp"

#include <cmath>

namespace ccrfock {

namespace {

std::uint64_t pack_occupation(const std::vector<int>& occ) {
  // 8 bits per mode keeps packing exact for cutoff <= 255, modes <= 8.
  std::uint64_t key = 0;
  for (int n : occ) key = (key << 8) | static_cast<std::uint64_t>(n & 0xff);
  return key;
}

void enumerate_rec(int mode, int remaining, std::vector<int>& occ,
                   std::vector<std::vector<int>>& out) {
  if (mode == static_cast<int>(occ.size()) - 1) {
    occ[mode] = remaining;
    out.push_back(occ);
    return;
  }
  for (int n = 0; n <= remaining; ++n) {
    occ[mode] = n;
    enumerate_rec(mode + 1, remaining - n, occ, out);
  }
}

}  // namespace

FockSpace::FockSpace(int modes, int cutoff) {
  if (modes <= 0 || modes > 8) throw ShapeError("FockSpace: modes must lie in 1..8");
  if (cutoff < 2 || cutoff > 255)
    throw ShapeError("FockSpace: cutoff must lie in 2..255");
  auto data = std::make_shared<Data>();
  data->modes = modes;
  data->cutoff = cutoff;
  std::vector<int> occ(modes, 0);
  for (int n = 0; n <= cutoff; ++n) enumerate_rec(0, n, occ, data->basis);
  data->totals.reserve(data->basis.size());
  for (std::size_t r = 0; r < data->basis.size(); ++r) {
    int total = 0;
    for (int n : data->basis[r]) total += n;
    data->totals.push_back(total);
    data->rank[pack_occupation(data->basis[r])] = static_cast<int>(r);
  }
  const int dim = static_cast<int>(data->basis.size());
  data->creation.resize(modes);
  for (int j = 0; j < modes; ++j) {
    Matrix a = Matrix::Zero(dim, dim);
    for (int r = 0; r < dim; ++r) {
      if (data->totals[r] >= cutoff) continue;
      std::vector<int> up = data->basis[r];
      up[j] += 1;
      const int target = data->rank.at(pack_occupation(up));
      a(target, r) = std::sqrt(static_cast<double>(up[j]));
    }
    data->creation[j] = std::move(a);
  }
  data_ = std::move(data);
}

int FockSpace::rank_of(const std::vector<int>& occupation) const {
  if (static_cast<int>(occupation.size()) != modes())
    throw ShapeError("rank_of: wrong number of modes");
  int total = 0;
  for (int n : occupation) {
    if (n < 0) throw ShapeError("rank_of: negative occupation");
    total += n;
  }
  if (total > cutoff()) return -1;
  return data_->rank.at(pack_occupation(occupation));
}

const Matrix& FockSpace::creation_matrix(int j) const {
  if (j < 0 || j >= modes()) throw ShapeError("creation_matrix: mode out of range");
  return data_->creation[j];
}

Vector vacuum(const FockSpace& space) {
  Vector v = Vector::Zero(space.dim());
  v(0) = 1.0;
  return v;
}

Matrix sector_projector(const FockSpace& space, int k) {
  if (k < 0 || k > space.cutoff())
    throw ShapeError("sector_projector: sector beyond cutoff");
  Matrix p = Matrix::Zero(space.dim(), space.dim());
  for (int r = 0; r < space.dim(); ++r)
    if (space.total_number(r) == k) p(r, r) = 1.0;
  return p;
}

Matrix number_cutoff_projector(const FockSpace& space, int k) {
  if (k < 0 || k > space.cutoff())
    throw ShapeError("number_cutoff_projector: sector beyond cutoff");
  Matrix p = Matrix::Zero(space.dim(), space.dim());
  for (int r = 0; r < space.dim(); ++r)
    if (space.total_number(r) <= k) p(r, r) = 1.0;
  return p;
}

Matrix creation(const FockSpace& space, const Vector& u) {
  if (u.size() != space.modes()) throw ShapeError("creation: vector length != modes");
  Matrix a = Matrix::Zero(space.dim(), space.dim());
  for (int j = 0; j < space.modes(); ++j)
    if (u(j) != Complex(0.0)) a += u(j) * space.creation_matrix(j);
  return a;
}

FockOperator field(const FockSpace& space, const KVector& f) {
  if (f.space.half_dim() != space.modes())
    throw ShapeError("field: doubled space does not match mode count");
  const int m = space.modes();
  Matrix op = Matrix::Zero(space.dim(), space.dim());
  for (int j = 0; j < m; ++j) {
    if (f.coords(j) != Complex(0.0)) op += f.coords(j) * space.creation_matrix(j);
    if (f.coords(m + j) != Complex(0.0))
      op += f.coords(m + j) * space.creation_matrix(j).adjoint();
  }
  return FockOperator(space, std::move(op));
}

FockOperator weyl(const FockSpace& space, const KVector& f) {
  const double real_res = (conjugate_vector(f).coords - f.coords).norm();
  if (real_res > kTolStructural)
    throw NotReal("weyl: argument must satisfy f = f*", real_res);
  const FockOperator pi = field(space, f);
  Eigen::SelfAdjointEigenSolver<Matrix> es(pi.matrix);
  if (es.info() != Eigen::Success)
    throw NumericallySingular("weyl: eigendecomposition failed");
  Vector phases(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < phases.size(); ++i)
    phases(i) = std::exp(Complex(0.0, es.eigenvalues()(i)));
  Matrix w = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  return FockOperator(space, std::move(w));
}

Matrix sym_power(const FockSpace& target, const FockSpace& source,
                 const Matrix& t) {
  if (t.rows() != target.modes() || t.cols() != source.modes())
    throw ShapeError("sym_power: matrix shape must be target modes x source modes");
  if (target.cutoff() != source.cutoff())
    throw ShapeError("sym_power: cutoffs must agree");
  Matrix out = Matrix::Zero(target.dim(), source.dim());
  out(0, 0) = 1.0;  // vacuum to vacuum
  // Column recursion: the column of nu with nu_j > 0 equals
  // a*(t e_j) (column of nu - delta_j) / sqrt(nu_j). Sector structure makes
  // every column reachable from the vacuum column.
  std::vector<Matrix> lifted(source.modes());
  for (int j = 0; j < source.modes(); ++j) lifted[j] = creation(target, t.col(j));
  for (int r = 1; r < source.dim(); ++r) {
    const std::vector<int>& occ = source.occupation(r);
    int j = 0;
    while (occ[j] == 0) ++j;
    std::vector<int> prev = occ;
    prev[j] -= 1;
    const int pr = source.rank_of(prev);
    out.col(r) = lifted[j] * out.col(pr) / std::sqrt(static_cast<double>(occ[j]));
  }
  return out;
}

FockOperator gamma_functor(const FockSpace& space, const Matrix& t) {
  return FockOperator(space, sym_power(space, space, t));
}

Matrix fock_embedding(const FockSpace& target, const FockSpace& source) {
  if (source.modes() > target.modes())
    throw ShapeError("fock_embedding: source has more modes than target");
  Matrix iota = Matrix::Zero(target.modes(), source.modes());
  iota.topRows(source.modes()).setIdentity();
  return sym_power(target, source, iota);
}

FockOperator isometric_part(const FockOperator& a) {
  return FockOperator(a.space, isometric_part(a.matrix));
}

namespace {

template <typename Svd>
Matrix gated_polar(const Svd& svd) {
  const auto& sigma = svd.singularValues();
  const double cutoff = sigma.size() > 0 ? kRankRelTol * sigma(0) : 0.0;
  Vector gate(sigma.size());
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    gate(i) = sigma(i) > cutoff ? 1.0 : 0.0;
  return svd.matrixU() * gate.asDiagonal() * svd.matrixV().adjoint();
}

}  // namespace

Matrix isometric_part(const Matrix& a) {
  // Field operators have highly degenerate singular spectra, which the
  // divide-and-conquer SVD can deflate incorrectly (orthogonal factors that
  // do not reproduce the input). Validate the factorization and fall back to
  // the slower one-sided Jacobi when it is off.
  Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double scale = svd.singularValues().size() > 0
                           ? std::max(svd.singularValues()(0), 1.0)
                           : 1.0;
  const Vector sigma = svd.singularValues().cast<Complex>();
  const Matrix rebuilt =
      svd.matrixU() * sigma.asDiagonal() * svd.matrixV().adjoint();
  if ((rebuilt - a).norm() <=
      1e-10 * scale * std::sqrt(static_cast<double>(a.size()))) {
    return gated_polar(svd);
  }
  Eigen::JacobiSVD<Matrix> jac(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return gated_polar(jac);
}

MultiIndex::MultiIndex(std::vector<int> e) : entries(std::move(e)) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 1) throw ShapeError("MultiIndex: entries are 1-based");
    if (i > 0 && entries[i] < entries[i - 1])
      throw ShapeError("MultiIndex: entries must be nondecreasing");
  }
}

std::vector<MultiIndex> enumerate_multi_indices(int n_generators,
                                                int max_length) {
  if (n_generators < 0 || max_length < 0)
    throw ShapeError("enumerate_multi_indices: negative arguments");
  std::vector<MultiIndex> out;
  out.emplace_back();
  if (n_generators == 0) return out;
  std::vector<std::vector<int>> level;
  level.push_back({});
  for (int len = 1; len <= max_length; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : level) {
      const int lo = prefix.empty() ? 1 : prefix.back();
      for (int g = lo; g <= n_generators; ++g) {
        std::vector<int> entry = prefix;
        entry.push_back(g);
        next.push_back(std::move(entry));
      }
    }
    for (const auto& e : next) out.push_back(MultiIndex(e));
    level = std::move(next);
  }
  return out;
}

Vector phi_alpha(const FockSpace& space, const Matrix& e_basis,
                 const MultiIndex& alpha) {
  if (e_basis.rows() != space.modes())
    throw ShapeError("phi_alpha: basis vectors must live in C^modes");
  if (alpha.length() > space.cutoff())
    throw ShapeError("phi_alpha: particle number beyond cutoff");
  Vector v = vacuum(space);
  std::vector<int> multiplicity(e_basis.cols(), 0);
  for (int g : alpha.entries) {
    if (g > e_basis.cols()) throw ShapeError("phi_alpha: generator out of range");
    multiplicity[g - 1] += 1;
    v = creation(space, e_basis.col(g - 1)) * v;
  }
  double norm_factor = 1.0;
  for (int l : multiplicity)
    for (int i = 2; i <= l; ++i) norm_factor *= i;
  return v / std::sqrt(norm_factor);
}

}  // namespace ccrfock
