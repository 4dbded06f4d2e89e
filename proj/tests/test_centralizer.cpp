#include <doctest.h>

#include <map>

#include "nfkit/centralizer.hpp"
#include "nfkit/error.hpp"
#include "nfkit/linalg.hpp"
#include "nfkit/spectrum.hpp"
#include "nfkit/vectorfield.hpp"
#include "support/oracles.hpp"

using namespace nfkit;
using oracle::diag;
using oracle::field;

namespace {

PolyVectorField d1263_p(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4) {
  return field(3, {{0, {0, 2, 0}, a1}, {0, {0, 1, 2}, a2}, {0, {0, 0, 4}, a3}, {1, {0, 0, 2}, a4}});
}

EigenSpectrum jordan() { return diag({3, 3, 3, 2, 2, 1}, {{0, 1, 1}, {1, 2, 1}, {3, 4, 1}}); }

// Nonlinear part of the displayed Jordan-block normal form.
PolyVectorField jordan_p(const std::vector<Rational>& a) {
  return field(6, {{0, {0, 0, 0, 1, 0, 1}, a[0]},
                   {0, {0, 0, 0, 0, 1, 1}, a[1]},
                   {0, {0, 0, 0, 0, 0, 3}, a[2]},
                   {1, {0, 0, 0, 1, 0, 1}, a[3]},
                   {1, {0, 0, 0, 0, 1, 1}, a[4]},
                   {1, {0, 0, 0, 0, 0, 3}, a[5]},
                   {2, {0, 0, 0, 1, 0, 1}, a[6]},
                   {2, {0, 0, 0, 0, 1, 1}, a[7]},
                   {2, {0, 0, 0, 0, 0, 3}, a[8]},
                   {3, {0, 0, 0, 0, 0, 2}, a[9]},
                   {4, {0, 0, 0, 0, 0, 2}, a[10]}});
}

Matrix as_matrix(const EigenSpectrum& s, bool with_diagonal) {
  Matrix m(s.n(), s.n());
  for (std::size_t i = 0; i < s.n(); ++i)
    for (std::size_t j = 0; j < s.n(); ++j)
      m(i, j) = s.nilpotent()(i, j) + (with_diagonal && i == j ? s.rational_eigenvalue(i) : Rational(0));
  return m;
}

// Kernel dimension of g -> [g, f] (and of (g, l) -> [g, f] - l f) modulo degree > D,
// with g ranging over every vector monomial of degree 1..D and l over scalar
// monomials of degree 0..D-1. Independent of the resonance-restricted assembly.
std::size_t generic_kernel_dim(const PolyVectorField& full, int D, bool normalizer) {
  const std::size_t n = full.n();
  std::vector<PolyVectorField> images;
  oracle::for_each_exponent_upto(n, D, [&](const Exponents& m) {
    if (oracle::degree(m) == 0) return;
    for (std::size_t j = 0; j < n; ++j)
      images.push_back(lie_bracket(PolyVectorField::unit(n, j, m), full).truncated(D));
  });
  if (normalizer)
    oracle::for_each_exponent_upto(n, D - 1, [&](const Exponents& m) {
      images.push_back((PolySeries::monomial(m, -1) * full).truncated(D));
    });
  std::map<std::pair<std::size_t, Exponents>, std::size_t> rows;
  for (const auto& img : images)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [m, c] : img[j].terms()) rows.try_emplace({j, m}, rows.size());
  Matrix mat(rows.size(), images.size());
  for (std::size_t col = 0; col < images.size(); ++col)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [m, c] : images[col][j].terms()) mat(rows.at({j, m}), col) = c;
  return images.size() - mat_rank(mat);
}

}  // namespace

TEST_CASE("linear commutant") {
  const CommutantBasis d1263 = linear_commutant(diag({12, 6, 3}));
  CHECK(d1263.dimension == 3);
  for (const auto& b : d1263.basis)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (i != j) CHECK(b(i, j) == 0);
  CHECK(linear_commutant(diag({12, 12, 6, 6, 6, 3})).dimension == 14);

  const EigenSpectrum s = jordan();
  const CommutantBasis jb = linear_commutant(s);
  CHECK(jb.dimension == 6);
  const Matrix a = as_matrix(s, true);
  for (const auto& b : jb.basis) CHECK(a * b == b * a);
  // The displayed shape: upper triangular Toeplitz blocks.
  for (const auto& b : jb.basis) {
    CHECK(b(0, 0) == b(1, 1));
    CHECK(b(1, 1) == b(2, 2));
    CHECK(b(0, 1) == b(1, 2));
    CHECK(b(3, 3) == b(4, 4));
    CHECK(b(1, 0) == 0);
    CHECK(b(4, 3) == 0);
  }
}

TEST_CASE("exact centralizer: diag(12,6,3) cases and basis verification") {
  const EigenSpectrum s = diag({12, 6, 3});
  struct Case {
    PolyVectorField p;
    std::size_t dim;
  };
  const std::vector<Case> cases = {
      {d1263_p(1, 1, 1, 1), 3}, {d1263_p(0, 2, -1, 0), 5}, {d1263_p(0, 0, 3, 0), 6}, {PolyVectorField(3), 7},
      // alpha4 = 0: the drop to 5 happens at 4 a1 a3 = a2^2; 2 a1 a3 = a2^2 alone stays at 4.
      {d1263_p(1, 2, 1, 0), 5}, {d1263_p(2, 2, 1, 0), 4}};
  for (const auto& c : cases) {
    const CentralizerResult res = centralizer_exact(s, c.p);
    CHECK(res.exact);
    CHECK(res.dimension == c.dim);
    CHECK(res.basis.size() == c.dim);
    const PolyVectorField full = oracle::linear_field(s) + c.p;
    for (const auto& b : res.basis) CHECK(lie_bracket(b, full).is_zero());
    CHECK(res.bounds.d == 3);
    CHECK(res.bounds.r == 4);
  }
}

TEST_CASE("exact centralizer: Jordan blocks") {
  const EigenSpectrum s = jordan();
  const std::vector<Rational> generic = {2, Rational(1, 3), -1, 5, Rational(-2, 7), 3, Rational(4, 5), 1, -3, 7,
                                         Rational(1, 2)};
  // The nilpotent part is written out; the diagonal stays implicit.
  const PolyVectorField nil = PolyVectorField::linear(as_matrix(s, false));
  const CentralizerResult g = centralizer_exact(s, nil + jordan_p(generic));
  CHECK(g.dimension == 6);
  const PolyVectorField full = PolyVectorField::linear(as_matrix(s, true)) + jordan_p(generic);
  for (const auto& b : g.basis) CHECK(lie_bracket(b, full).is_zero());
  CHECK(centralizer_exact(s, nil).dimension == 10);
}

TEST_CASE("exact centralizer errors") {
  try {
    centralizer_exact(diag({12, 6, 3}), field(3, {{0, {2, 0, 0}, 1}}));
    FAIL("expected NotPDNF");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPDNF);
  }
  try {
    centralizer_exact(diag({1, -1}), PolyVectorField(2));
    FAIL("expected InfiniteResonance");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InfiniteResonance);
  }
}

TEST_CASE("exact centralizer agrees with the unrestricted kernel") {
  oracle::Rng rng(41);
  const std::vector<EigenSpectrum> spectra = {diag({12, 6, 3}), diag({5, 3, 2}), diag({4, 2, 1}),
                                              diag({2, 2, 1}, {{0, 1, 1}})};
  for (int t = 0; t < 12; ++t) {
    const EigenSpectrum& s = spectra[t % spectra.size()];
    const PolyVectorField p = oracle::random_pdnf(rng, s, resonance_degree_bound(s), 0.5);
    const CentralizerResult res = centralizer_exact(s, p);
    const PolyVectorField full = PolyVectorField::linear(as_matrix(s, true)) + p;
    // Every resonance has degree <= the bound, so D = bound captures the exact centralizer.
    CHECK(res.dimension == generic_kernel_dim(full, resonance_degree_bound(s), false));
  }
}

TEST_CASE("truncated centralizer") {
  const EigenSpectrum saddle = diag({1, -1});
  const CentralizerResult lin = centralizer_truncated(saddle, PolyVectorField(2), 3);
  CHECK_FALSE(lin.exact);
  CHECK(lin.truncation == 3);
  CHECK(lin.dimension == generic_kernel_dim(oracle::linear_field(saddle), 3, false));
  CHECK(lin.dimension == 4);
  CHECK(in_solution_span(lin, field(2, {{0, {2, 1}, 1}, {1, {1, 2}, -1}})));
  CHECK(in_solution_span(lin, field(2, {{0, {1, 0}, 1}, {1, {0, 1}, 1}})));

  // f = (1 + x1 x2) diag(1, -1) x
  const PolyVectorField orbital = field(2, {{0, {2, 1}, 1}, {1, {1, 2}, -1}});
  const CentralizerResult sp = centralizer_truncated(saddle, orbital, 5);
  const PolyVectorField full = oracle::linear_field(saddle) + orbital;
  CHECK(sp.dimension == generic_kernel_dim(full, 5, false));
  CHECK(sp.dimension == 4);
  // rho(x1 x2) diag(1, -1) x for rho in span{1, phi, phi^2}
  CHECK(in_solution_span(sp, field(2, {{0, {1, 0}, 1}, {1, {0, 1}, -1}})));
  CHECK(in_solution_span(sp, field(2, {{0, {2, 1}, 1}, {1, {1, 2}, -1}})));
  CHECK(in_solution_span(sp, field(2, {{0, {3, 2}, 1}, {1, {2, 3}, -1}})));
  CHECK_FALSE(in_solution_span(sp, field(2, {{0, {1, 0}, 1}, {1, {0, 1}, 1}})));
  REQUIRE(sp.graded.size() == 6);
  CHECK(sp.graded[1] == 1);
  CHECK(sp.graded[3] == 1);
  CHECK(sp.graded[5] == 2);
  for (const auto& b : sp.basis) CHECK(commutes_with(saddle, orbital, b, 5));
}

TEST_CASE("truncated centralizer contains the C-matrices") {
  oracle::Rng rng(6);
  const std::vector<EigenSpectrum> spectra = {diag({1, -1}), diag({3, 2, -6}), oracle::coords({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}),
                                              oracle::coords({{1, 0}, {-2, 0}, {0, 3}, {0, -1}})};
  for (int t = 0; t < 8; ++t) {
    const EigenSpectrum& s = spectra[t % spectra.size()];
    const int D = s.n() > 3 ? 3 : 4;
    const PolyVectorField f = oracle::random_pdnf(rng, s, D);
    const CentralizerResult res = centralizer_truncated(s, f, D);
    for (const auto& row : c_matrix_basis(s)) {
      PolyVectorField c(s.n());
      for (std::size_t i = 0; i < s.n(); ++i) {
        Exponents e(s.n(), 0);
        e[i] = 1;
        c.add_term(i, e, Rational(row[i]));
      }
      CHECK(in_solution_span(res, c));
    }
    CHECK(res.dimension >= s.q() + 1);
  }
}

TEST_CASE("truncated normalizer") {
  const EigenSpectrum s = diag({2, 3});
  const NormalizerResult res = normalizer_truncated(s, PolyVectorField(2), 2);
  CHECK(res.dimension == 4);
  CHECK(res.dimension == generic_kernel_dim(oracle::linear_field(s), 2, true));
  for (const auto& p : res.basis) CHECK(normalizer_relation_holds(s, PolyVectorField(2), p, 2));

  // f = (1 + x1 x2) diag(1, -1) x with h = I x and lambda = 2 phi - 2 phi^2 + ...
  const EigenSpectrum saddle = diag({1, -1});
  const PolyVectorField f = field(2, {{0, {2, 1}, 1}, {1, {1, 2}, -1}});
  const NormalizerResult nr = normalizer_truncated(saddle, f, 5);
  CHECK(nr.dimension == generic_kernel_dim(oracle::linear_field(saddle) + f, 5, true));
  PolySeries lambda(2, 4);
  lambda.add_term({1, 1}, 2);
  lambda.add_term({2, 2}, -2);
  const NormalizerPair ex{field(2, {{0, {1, 0}, 1}, {1, {0, 1}, 1}}, 5), lambda};
  CHECK(normalizer_relation_holds(saddle, f, ex, 5));
  CHECK(in_normalizer_span(nr, ex));
  const NormalizerPair self{(oracle::linear_field(saddle) + f).with_trunc(5), PolySeries(2, 4)};
  CHECK(in_normalizer_span(nr, self));
  CHECK_FALSE(normalizer_relation_holds(saddle, f, {ex.g, PolySeries(2, 4)}, 5));
  CHECK_THROWS_AS(normalizer_truncated(oracle::coords({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}), PolyVectorField(4), 3),
                  Error);
}

TEST_CASE("normalizer reduction") {
  const EigenSpectrum saddle = diag({1, -1});
  const PolyVectorField f = field(2, {{0, {2, 1}, 1}, {1, {1, 2}, -1}});
  PolySeries lambda(2, 4);
  lambda.add_term({1, 1}, 2);
  lambda.add_term({2, 2}, -2);
  const PolyVectorField h = field(2, {{0, {1, 0}, 1}, {1, {0, 1}, 1}}, 5);
  const NormalizerReduction red = normalizer_reduce(saddle, f, h, lambda, 5);
  CHECK(red.beta.is_zero());
  CHECK(same_terms(red.alpha, lambda));
  CHECK(red.semisimple_commutes);
  CHECK(in_kernel_of_semisimple(saddle, red.alpha));

  // g = beta f: the reduction recovers beta up to first integrals, alpha = 0.
  const EigenSpectrum s = diag({2, 3});
  const PolyVectorField lin = oracle::linear_field(s);
  const PolySeries beta = PolySeries::monomial({1, 0}, 1) + PolySeries::monomial({0, 2}, Rational(-1, 2));
  const PolyVectorField g = (beta * lin).with_trunc(4);
  const PolySeries l = (lie_derivative(lin, beta) * Rational(-1)).with_trunc(3);
  REQUIRE(normalizer_relation_holds(s, PolyVectorField(2), {g, l}, 4));
  const NormalizerReduction r2 = normalizer_reduce(s, PolyVectorField(2), g, l, 4);
  CHECK(r2.alpha.is_zero());
  CHECK(same_terms(r2.beta, beta));
  CHECK(r2.semisimple_commutes);

  // A centralizer element: beta = 0, alpha = 0.
  const EigenSpectrum d1263 = diag({12, 6, 3});
  const PolyVectorField p = d1263_p(1, 1, 1, 1);
  const CentralizerResult cent = centralizer_exact(d1263, p);
  for (const auto& b : cent.basis) {
    const NormalizerReduction r = normalizer_reduce(d1263, p, b.with_trunc(5), PolySeries(3, 4), 5);
    CHECK(r.beta.is_zero());
    CHECK(r.alpha.is_zero());
  }

  try {
    normalizer_reduce(saddle, f, h, PolySeries(2, 4), 5);
    FAIL("expected NotNormalizerPair");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNormalizerPair);
  }
  try {
    normalizer_reduce(build_spectrum(2, 0, std::vector<RatVector>(2)), PolyVectorField(2), PolyVectorField(2, 3), PolySeries(2, 2), 3);
    FAIL("expected ZeroSemisimplePart");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroSemisimplePart);
  }
}

TEST_CASE("normalizer reduction on random normalizer elements") {
  oracle::Rng rng(12);
  const std::vector<EigenSpectrum> spectra = {diag({1, -1}), diag({1, -1, 0}), diag({2, 2, 1}, {{0, 1, 1}}), diag({3, 2, -6})};
  for (int t = 0; t < 8; ++t) {
    const EigenSpectrum& s = spectra[t % spectra.size()];
    const int D = 4;
    const PolyVectorField f = oracle::random_pdnf(rng, s, D);
    const NormalizerResult nr = normalizer_truncated(s, f, D);
    for (int k = 0; k < 3 && !nr.basis.empty(); ++k) {
      // Random combination of basis pairs.
      PolyVectorField g(s.n(), D);
      PolySeries l(s.n(), D - 1);
      for (const auto& b : nr.basis) {
        const Rational c = rng.rational(3, 2);
        g += b.g * c;
        l += b.lambda * c;
      }
      const NormalizerReduction red = normalizer_reduce(s, f, g, l, D);
      CHECK(in_kernel_of_semisimple(s, red.alpha));
      CHECK(red.alpha.coeff(Exponents(s.n(), 0)) == 0);
      CHECK(red.semisimple_commutes);
    }
  }
}
