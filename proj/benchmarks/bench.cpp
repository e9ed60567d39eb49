#include <benchmark/benchmark.h>

#include <ccrfock/implementer.hpp>
#include <ccrfock/random.hpp>

using namespace ccrfock;

namespace {

QuadraticHamiltonian sample_hamiltonian(int modes, Rng& rng) {
  const Matrix h11 = 0.8 * rng.complex_gaussian(modes, modes);
  const Matrix h12 = random_symmetric_contraction(modes, 0.5, rng);
  const Matrix h21 = random_symmetric_contraction(modes, 0.8, rng);
  return QuadraticHamiltonian(h11, h12, h21);
}

// The factored form (pair creation / gamma / pair annihilation) versus the
// direct Wick-ordered series of the same exponential. The series is the
// reference oracle; the factored form is what build_family uses.
void bm_wick_series(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  const FockSpace space(1, cutoff);
  Rng rng(1);
  const QuadraticHamiltonian h = sample_hamiltonian(1, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(wick_exp_series(space, h));
}
BENCHMARK(bm_wick_series)->Arg(8)->Arg(12)->Arg(16);

void bm_wick_factored(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  const FockSpace space(1, cutoff);
  Rng rng(1);
  const QuadraticHamiltonian h = sample_hamiltonian(1, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(wick_exp_factored(space, h));
}
BENCHMARK(bm_wick_factored)->Arg(8)->Arg(12)->Arg(16);

// Second quantization of a one-particle map, the kernel of every transported
// operator on the truncated space.
void bm_gamma_functor(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  const FockSpace space(2, cutoff);
  Rng rng(2);
  const Matrix t = rng.complex_gaussian(2, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(gamma_functor(space, t));
}
BENCHMARK(bm_gamma_functor)->Arg(8)->Arg(12)->Arg(16);

// One-particle pipeline: factor a random endomorphism through the disk.
void bm_canonical_decomposition(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const BogoliubovOperator v = random_bogoliubov(m, m + 1, 0.4, 11);
  for (auto _ : state)
    benchmark::DoNotOptimize(canonical_decomposition(v));
}
BENCHMARK(bm_canonical_decomposition)->Arg(1)->Arg(2)->Arg(4);

// Disk point to positive automorphism.
void bm_u_from_z(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  Rng rng(3);
  const DiskPoint z(random_symmetric_contraction(m, 0.6, rng));
  for (auto _ : state)
    benchmark::DoNotOptimize(u_from_z(z));
}
BENCHMARK(bm_u_from_z)->Arg(2)->Arg(4)->Arg(8);

// Polar-isometric factor of a field operator: the SVD hot path, including
// the reconstruction check that guards against divide-and-conquer
// deflation failures on these highly degenerate spectra.
void bm_isometric_part_field(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  const FockSpace space(2, cutoff);
  const DoubledSpace k(2);
  Rng rng(4);
  Vector coords(4);
  for (int i = 0; i < 4; ++i) coords(i) = rng.complex_normal();
  const KVector f(k, coords);
  const Matrix pi_f = field(space, f).matrix;
  for (auto _ : state)
    benchmark::DoNotOptimize(isometric_part(pi_f));
}
BENCHMARK(bm_isometric_part_field)->Arg(8)->Arg(12)->Arg(16);

// End-to-end construction of the implementer family for a mixing
// endomorphism: decomposition, Gaussian, embedding and generators.
void bm_build_family(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  const BogoliubovOperator v = random_bogoliubov(1, 2, 0.1, 5);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_family(v, cutoff));
}
BENCHMARK(bm_build_family)->Arg(8)->Arg(12)->Arg(16);

// Weyl element through the spectral decomposition of the field.
void bm_weyl(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  const FockSpace space(1, cutoff);
  const DoubledSpace k(1);
  Vector coords(2);
  coords << Complex(0.3, 0.2), Complex(0.3, -0.2);
  const KVector f(k, coords);
  for (auto _ : state)
    benchmark::DoNotOptimize(weyl(space, f));
}
BENCHMARK(bm_weyl)->Arg(12)->Arg(20)->Arg(28);

}  // namespace

BENCHMARK_MAIN();
