#include <benchmark/benchmark.h>

#include <random>

#include "nfkit/centralizer.hpp"
#include "nfkit/jacobi.hpp"
#include "nfkit/linalg.hpp"
#include "nfkit/resonance.hpp"
#include "nfkit/spectrum.hpp"

using namespace nfkit;

namespace {

EigenSpectrum diag(const std::vector<long>& eig) {
  std::vector<RatVector> rows;
  for (long e : eig) rows.push_back({Rational(e)});
  return build_spectrum(eig.size(), 1, rows);
}

Matrix random_matrix(std::size_t rows, std::size_t cols, std::size_t rank, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  auto draw = [&] {
    Rational r(num(gen), den(gen));
    r.canonicalize();
    return r;
  };
  Matrix l(rows, rank), r(rank, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < rank; ++k) l(i, k) = draw();
  for (std::size_t k = 0; k < rank; ++k)
    for (std::size_t j = 0; j < cols; ++j) r(k, j) = draw();
  return l * r;
}

void BM_Kernel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(n, n + 4, n / 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(mat_kernel(m));
}
BENCHMARK(BM_Kernel)->Arg(8)->Arg(16)->Arg(32);

void BM_HilbertBasis(benchmark::State& state) {
  const std::vector<EigenSpectrum> spectra = {diag({3, 2, -6}), diag({2, 3, -5, -7}), diag({7, -5})};
  const EigenSpectrum& s = spectra[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(s));
}
BENCHMARK(BM_HilbertBasis)->DenseRange(0, 2);

void BM_ResonanceSet(benchmark::State& state) {
  const EigenSpectrum s = diag({12 * state.range(0), 3, 2});
  for (auto _ : state) benchmark::DoNotOptimize(resonance_set(s));
}
BENCHMARK(BM_ResonanceSet)->Arg(1)->Arg(3)->Arg(6);

void BM_CentralizerExact(benchmark::State& state) {
  const EigenSpectrum s = diag({12, 12, 6, 6, 6, 3});
  PolyVectorField f(6);
  std::mt19937 gen(11);
  std::uniform_int_distribution<long> num(1, 9);
  const ResonanceSet rs = resonance_set(s);
  for (std::size_t j = 0; j < 6; ++j)
    for (const auto& m : rs.per_component[j]) f.add_term(j, m, Rational(num(gen)));
  for (auto _ : state) benchmark::DoNotOptimize(centralizer_exact(s, f));
}
BENCHMARK(BM_CentralizerExact);

void BM_MultiplierLadder(benchmark::State& state) {
  const EigenSpectrum s = diag({1, -1, 0});
  PolyVectorField f(3);
  f.add_term(0, {1, 0, 1}, Rational(1, 2));
  f.add_term(1, {0, 1, 1}, Rational(1, 3));
  f.add_term(2, {0, 0, 2}, 1);
  f.add_term(2, {1, 1, 0}, Rational(1, 5));
  const int D = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_multiplier(s, f, 2, D, D));
}
BENCHMARK(BM_MultiplierLadder)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
