#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "ccrfock/doubled_space.hpp"

namespace ccrfock {

// Bosonic Fock space over C^modes truncated at total particle number cutoff.
// Basis states are occupation tuples (n_1, ..., n_modes) with sum <= cutoff,
// ranked by total number and then lexicographically; dimension is
// binomial(modes + cutoff, modes). Copies share the immutable tables.
class FockSpace {
 public:
  FockSpace(int modes, int cutoff);

  int modes() const { return data_->modes; }
  int cutoff() const { return data_->cutoff; }
  int dim() const { return static_cast<int>(data_->basis.size()); }

  const std::vector<int>& occupation(int rank) const { return data_->basis[rank]; }
  int total_number(int rank) const { return data_->totals[rank]; }
  // -1 when the tuple exceeds the cutoff.
  int rank_of(const std::vector<int>& occupation) const;

  // Dense matrix of the mode creation operator a*_j; the adjoint annihilates.
  const Matrix& creation_matrix(int j) const;

  friend bool operator==(const FockSpace& a, const FockSpace& b) {
    return a.modes() == b.modes() && a.cutoff() == b.cutoff();
  }

 private:
  struct Data {
    int modes;
    int cutoff;
    std::vector<std::vector<int>> basis;
    std::vector<int> totals;
    std::unordered_map<std::uint64_t, int> rank;
    std::vector<Matrix> creation;
  };
  std::shared_ptr<const Data> data_;
};

// Operator on (or between) truncated Fock spaces.
struct FockOperator {
  FockSpace space;
  Matrix matrix;

  FockOperator(const FockSpace& s, Matrix m) : space(s), matrix(std::move(m)) {
    if (matrix.rows() != space.dim() || matrix.cols() != space.dim())
      throw ShapeError("FockOperator: matrix does not match space dimension");
  }
};

// Vacuum unit vector.
Vector vacuum(const FockSpace& space);

// Orthogonal projection onto total particle number exactly k (k <= cutoff).
Matrix sector_projector(const FockSpace& space, int k);

// Orthogonal projection onto total particle number <= k.
Matrix number_cutoff_projector(const FockSpace& space, int k);

// a*(u) = sum_j u_j a*_j for u in C^modes.
Matrix creation(const FockSpace& space, const Vector& u);

// Field of a doubled-space vector (half dimension = modes):
// pi(f) = sum_j f_j a*_j + sum_j f_{modes+j} a_j. Then pi(f)^dag = pi(f*)
// and [pi(f*), pi(g)] = gamma(f, g) on states clear of the cutoff.
FockOperator field(const FockSpace& space, const KVector& f);

// Weyl element w(f) = exp(i pi(f)) for f = f* (hermitian field), through the
// spectral decomposition. Throws NotReal when f fails f = f*. Truncation
// error decays like ||f||^{cutoff+1}/sqrt((cutoff+1)!).
FockOperator weyl(const FockSpace& space, const KVector& f);

// Second quantization of t: C^modes_src -> C^modes_tgt, acting on the n-th
// sector as the n-th symmetric tensor power. Multiplicative: sym_power(s)
// sym_power(t) = sym_power(s t) exactly on the truncated spaces.
Matrix sym_power(const FockSpace& target, const FockSpace& source,
                 const Matrix& t);

// Square case of sym_power on a single space.
FockOperator gamma_functor(const FockSpace& space, const Matrix& t);

// Vacuum-preserving isometric embedding of the space over the first
// source.modes() modes of target; sym_power of the coordinate inclusion.
Matrix fock_embedding(const FockSpace& target, const FockSpace& source);

// Isometric factor of the polar decomposition via SVD; singular directions
// below kRankRelTol * sigma_max map to zero.
FockOperator isometric_part(const FockOperator& a);
Matrix isometric_part(const Matrix& a);

// Multi-index over generators 1..n_generators: nondecreasing entries, empty
// allowed.
struct MultiIndex {
  std::vector<int> entries;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> e);
  int length() const { return static_cast<int>(entries.size()); }
};

// All multi-indices over n generators with length <= max_length, ordered by
// length and then lexicographically.
std::vector<MultiIndex> enumerate_multi_indices(int n_generators,
                                                int max_length);

// Normalized creation monomial on orthonormal one-particle vectors
// (columns of e_basis): phi_alpha = (prod_i l_i!)^{-1/2} a*(e_{alpha_1})
// ... a*(e_{alpha_len}) Omega, where l_i are the multiplicities of alpha.
Vector phi_alpha(const FockSpace& space, const Matrix& e_basis,
                 const MultiIndex& alpha);

}  // namespace ccrfock
