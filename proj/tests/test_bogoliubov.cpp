#include <ccrfock/bogoliubov.hpp>
#include <ccrfock/random.hpp>

#include <cmath>

#include "helpers.hpp"

using namespace ccrfock;
using testutil::dist;

TEST_CASE("validate accepts the reference fixtures and deduces shapes") {
  const BogoliubovOperator sq = testutil::squeeze_fixture();
  CHECK(sq.m() == 1);
  CHECK(sq.M() == 1);
  CHECK(sq.index() == 0);
  CHECK(sq.is_automorphism());
  CHECK(sq.block(1, 1)(0, 0) == Complex(1.25, 0.0));
  CHECK(sq.block(2, 1)(0, 0) == Complex(0.75, 0.0));

  const BogoliubovOperator em = testutil::embed12_fixture();
  CHECK(em.m() == 1);
  CHECK(em.M() == 2);
  CHECK(em.index() == -2);
  CHECK_FALSE(em.is_automorphism());

  // Shape-deducing overload cannot tell a 4 x 2 map apart from anything
  // else with even dimensions, so it must agree with the explicit one.
  const BogoliubovOperator em2 = BogoliubovOperator::validate(em.matrix());
  CHECK(em2.m() == 1);
  CHECK(em2.M() == 2);
}

TEST_CASE("validate rejects malformed candidates") {
  // Odd dimensions.
  CHECK_THROWS_AS(BogoliubovOperator::validate(Matrix::Identity(3, 3)),
                  ShapeError);
  // M < m.
  CHECK_THROWS_AS(
      BogoliubovOperator::validate(Matrix::Identity(2, 4), 2, 1), ShapeError);

  // Isometry but not conjugation invariant: phase on one half only.
  Matrix phase = Matrix::Identity(2, 2);
  phase(0, 0) = Complex(0.0, 1.0);
  CHECK_THROWS_AS(BogoliubovOperator::validate(phase, 1, 1),
                  NotConjugationInvariant);

  // Conjugation invariant but not a gamma-isometry: scaled identity.
  CHECK_THROWS_AS(BogoliubovOperator::validate(2.0 * Matrix::Identity(2, 2)),
                  NotGammaIsometry);

  // The residual travels with the exception.
  try {
    BogoliubovOperator::validate(2.0 * Matrix::Identity(2, 2));
    CHECK(false);
  } catch (const NotGammaIsometry& e) {
    CHECK(e.residual() > 1.0);
  }
}

TEST_CASE("defining relations hold blockwise") {
  const BogoliubovOperator sq = testutil::squeeze_fixture();
  CHECK(check_relations(sq).max() < 1e-15);

  // gamma-isometry in matrix form: V+ V = 1.
  CHECK(dist(sq.adjoint_matrix() * sq.matrix(), testutil::identity(2)) <
        1e-15);

  const BogoliubovOperator em = testutil::embed12_fixture();
  CHECK(check_relations(em).max() == 0.0);
  CHECK(dist(em.adjoint_matrix() * em.matrix(), testutil::identity(2)) == 0.0);

  // A perturbed matrix fails validation but the residual report still
  // quantifies which relation broke.
  Matrix bad = sq.matrix();
  bad(0, 1) += 0.01;
  CHECK_THROWS_AS(BogoliubovOperator::validate(bad, 1, 1), ValidationError);
}

TEST_CASE("kernel of the adjoint carries a nondegenerate pairing") {
  const BogoliubovOperator em = testutil::embed12_fixture();
  const KernelBasis kb = kernel_of_adjoint(em);
  CHECK(kb.basis.rows() == 4);
  CHECK(kb.basis.cols() == 2);
  CHECK(dist(kb.basis.adjoint() * kb.basis, testutil::identity(2)) < 1e-14);
  CHECK(dist(em.adjoint_matrix() * kb.basis, Matrix::Zero(2, 2)) < 1e-14);

  // The Gram matrix of the pairing on the kernel has eigenvalues +1, -1:
  // one positive and one negative direction per lost mode.
  Eigen::SelfAdjointEigenSolver<Matrix> es(kb.gamma_gram);
  CHECK(std::abs(es.eigenvalues()(0) + 1.0) < 1e-14);
  CHECK(std::abs(es.eigenvalues()(1) - 1.0) < 1e-14);
  CHECK(kb.gram_min_singular_value == doctest::Approx(1.0).epsilon(1e-12));

  // Automorphisms have no kernel.
  const KernelBasis kb0 = kernel_of_adjoint(testutil::squeeze_fixture());
  CHECK(kb0.basis.cols() == 0);
}

TEST_CASE("index counts lost mode pairs") {
  Rng rng(21);
  const BogoliubovOperator v13 = random_bogoliubov(1, 3, 0.4, 31);
  CHECK(v13.index() == -4);
  const KernelBasis kb = kernel_of_adjoint(v13);
  CHECK(kb.basis.cols() == 4);
  // Two positive and two negative pairing directions.
  Eigen::SelfAdjointEigenSolver<Matrix> es(kb.gamma_gram);
  CHECK(es.eigenvalues()(0) < -0.5);
  CHECK(es.eigenvalues()(1) < -0.5);
  CHECK(es.eigenvalues()(2) > 0.5);
  CHECK(es.eigenvalues()(3) > 0.5);
}

TEST_CASE("state operators of the squeeze: frozen rational values") {
  const StateOperators so = state_operators(testutil::squeeze_fixture());
  Matrix s_expected(2, 2);
  s_expected << Complex(25.0 / 16, 0), Complex(15.0 / 16, 0),
      Complex(-15.0 / 16, 0), Complex(-9.0 / 16, 0);
  CHECK(dist(so.s, s_expected) < 1e-15);
  // S-tilde = C S.
  Matrix c = DoubledSpace(1).charge();
  CHECK(dist(so.s_tilde, c * so.s) < 1e-15);
}

TEST_CASE("purity: idempotency of S and commutation of the range agree") {
  // Automorphisms always give a pure transformed state.
  const PurityDefects pd_auto = purity_equivalence(testutil::squeeze_fixture());
  CHECK(pd_auto.s_idempotency < 1e-14);
  CHECK(pd_auto.range_commutator < 1e-14);

  // The plain embedding is pure too: V V+ is block diagonal.
  const PurityDefects pd_embed =
      purity_equivalence(testutil::embed12_fixture());
  CHECK(pd_embed.s_idempotency < 1e-14);
  CHECK(pd_embed.range_commutator < 1e-14);

  // A proper endomorphism with mixing (nonzero Z) is not pure, and both
  // defects see it together.
  const BogoliubovOperator mixed = random_bogoliubov(1, 2, 0.4, 40);
  const PurityDefects pd_mixed = purity_equivalence(mixed);
  CHECK(pd_mixed.s_idempotency > 1e-4);
  CHECK(pd_mixed.range_commutator > 1e-4);

  // Equivalence across a corpus: the two defects vanish together at 1e-8.
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int m = 1 + static_cast<int>(seed % 2);
    const int M = m + static_cast<int>(seed % 3 == 0 ? 0 : 1);
    const double z = 0.05 + 0.4 * static_cast<double>(seed) / 50.0;
    const PurityDefects pd = purity_equivalence(random_bogoliubov(m, M, z, seed));
    CHECK((pd.s_idempotency < 1e-8) == (pd.range_commutator < 1e-8));
  }
}

TEST_CASE("shale diagnostics of the squeeze: frozen values") {
  const ShaleDiagnostics sd = shale_diagnostics(testutil::squeeze_fixture());
  CHECK(sd.off_diagonal_hs == doctest::Approx(0.75).epsilon(1e-14));
  // V is already positive, so || |V| - 1 ||_HS = ||V - 1||_F = sqrt(5)/2.
  CHECK(sd.polar_defect ==
        doctest::Approx(std::sqrt(5.0) / 2.0).epsilon(1e-13));

  // Diagonal isometries have no off-diagonal part and |V| - 1 supported on
  // the cokernel only.
  const ShaleDiagnostics sd_embed =
      shale_diagnostics(testutil::embed12_fixture());
  CHECK(sd_embed.off_diagonal_hs == 0.0);
}

TEST_CASE("block distance is a symmetric diagnostic") {
  const BogoliubovOperator a = testutil::squeeze_fixture();
  const BogoliubovOperator b =
      BogoliubovOperator::validate(Matrix::Identity(2, 2), 1, 1);
  CHECK(block_distance(a, a) == 0.0);
  CHECK(block_distance(a, b) == block_distance(b, a));
  CHECK(block_distance(a, b) > 0.5);
}

TEST_CASE("random bogoliubov operators: determinism and norm bound") {
  const BogoliubovOperator a = random_bogoliubov(2, 3, 0.3, 1234);
  const BogoliubovOperator b = random_bogoliubov(2, 3, 0.3, 1234);
  CHECK(dist(a.matrix(), b.matrix()) == 0.0);

  const BogoliubovOperator c = random_bogoliubov(2, 3, 0.3, 1235);
  CHECK(dist(a.matrix(), c.matrix()) > 1e-3);

  // Every draw passes its own validation and respects the norm bound
  // through the off-diagonal block: ||V21 V11^{-1}|| <= z bound.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const BogoliubovOperator v = random_bogoliubov(1, 2, 0.25, seed);
    CHECK(check_relations(v).max() < 1e-12);
    const Matrix z =
        v.block(2, 1) * pseudo_inverse_block(v.block(1, 1));
    CHECK(operator_norm(z) <= 0.25 + 1e-12);
  }
}

TEST_CASE("pseudo inverse and cokernel projector of blocks") {
  Matrix b(3, 2);
  b << 2, 0, 0, 1, 0, 0;
  const Matrix pinv = pseudo_inverse_block(b);
  CHECK(dist(pinv * b, testutil::identity(2)) < 1e-14);
  CHECK(dist(b * pinv * b, b) < 1e-14);

  const Matrix q = cokernel_projector(b);
  CHECK(dist(q * q, q) < 1e-14);
  CHECK(dist(q * b, Matrix::Zero(3, 2)) < 1e-14);
  CHECK(std::abs(q.trace().real() - 1.0) < 1e-13);

  Matrix singular(2, 2);
  singular << 1, 1, 1, 1;
  CHECK_THROWS_AS(pseudo_inverse_block(singular), NotInjective);
}
