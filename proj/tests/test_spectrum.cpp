#include <doctest.h>

#include <numeric>

#include "nfkit/error.hpp"
#include "nfkit/spectrum.hpp"
#include "support/oracles.hpp"

using namespace nfkit;
using oracle::coords;
using oracle::diag;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("build_spectrum validation") {
  CHECK(diag({12, 6, 3}).n() == 3);
  const EigenSpectrum w = coords({{1, 0}, {-2, 0}, {0, 3}, {0, -1}});
  CHECK(w.q() == 2);
  CHECK(w.pairing({2, 1, 0, 0}) == RatVector{0, 0});
  CHECK(code_of([] { coords({{1, 0}, {2, 0}}); }) == ErrorCode::RankMismatch);
  CHECK(code_of([] { diag({2, 1}, {{0, 1, 1}}); }) == ErrorCode::NilpotentViolatesCommutation);
  CHECK_THROWS_AS(diag({2, 2}, {{1, 0, 1}}), Error);
  CHECK_NOTHROW(diag({3, 3, 3, 2, 2, 1}, {{0, 1, 1}, {1, 2, 1}, {3, 4, 1}}));
  CHECK(diag({1, -1, 0}).has_zero_eigenvalue());
  CHECK(diag({3, 2, -6}).trace() == RatVector{-1});
}

TEST_CASE("hilbert_basis worked cases") {
  CHECK(hilbert_basis(diag({1, -1})).generators == std::vector<Exponents>{{1, 1}});
  CHECK(hilbert_basis(coords({{1, 0}, {-2, 0}, {0, 3}, {0, -1}})).generators ==
        std::vector<Exponents>{{2, 1, 0, 0}, {0, 0, 1, 3}});
  CHECK(hilbert_basis(diag({12, 6, 3})).generators.empty());
  CHECK(hilbert_basis(diag({3, 2, -6})).generators == std::vector<Exponents>{{2, 0, 1}, {0, 3, 1}});
  const auto capped = hilbert_basis(diag({7, -5}), 4);
  CHECK(capped.cap_reached);
  CHECK(capped.generators.empty());
  CHECK_FALSE(hilbert_basis(diag({7, -5})).cap_reached);
}

TEST_CASE("finiteness, positivity, U/W splitting") {
  CHECK(is_finite_linear_centralizer(diag({12, 6, 3})));
  CHECK_FALSE(is_finite_linear_centralizer(diag({1, -1})));
  CHECK_FALSE(is_finite_linear_centralizer(coords({{1, 0}, {-1, 0}, {0, 1}, {0, -1}})));

  CHECK(has_positive_relation(diag({1, -1})));
  CHECK_FALSE(has_positive_relation(coords({{1, 0}, {-1, 0}, {0, 1}})));
  CHECK(has_positive_relation(diag({3, 2, -6})));

  const auto d1263 = uw_decomposition(diag({12, 6, 3}));
  CHECK(d1263.u.empty());
  CHECK(d1263.w == std::vector<std::size_t>{0, 1, 2});
  const auto sq = uw_decomposition(coords({{1, 0}, {-1, 0}, {0, 1}}));
  CHECK(sq.u == std::vector<std::size_t>{0, 1});
  CHECK(sq.w == std::vector<std::size_t>{2});
  const auto saddle = uw_decomposition(diag({1, -1}));
  CHECK(saddle.u == std::vector<std::size_t>{0, 1});
  CHECK(saddle.w.empty());
}

TEST_CASE("c_matrix_basis") {
  using Row = std::vector<Integer>;
  CHECK(c_matrix_basis(diag({12, 6, 3})) == std::vector<Row>{{12, 6, 3}});
  CHECK(c_matrix_basis(diag({12, 6, 3}), true) == std::vector<Row>{{4, 2, 1}});
  CHECK(c_matrix_basis(coords({{1, 0}, {-2, 0}, {0, 3}, {0, -1}})) == std::vector<Row>{{1, -2, 0, 0}, {0, 0, 3, -1}});
  CHECK(c_matrix_basis(diag({1, -1})) == std::vector<Row>{{1, -1}});
  const EigenSpectrum frac =
      build_spectrum(2, 1, {{Rational(1, 2)}, {Rational(-1, 3)}});
  CHECK(c_matrix_basis(frac) == std::vector<Row>{{3, -2}});
}

TEST_CASE("hilbert basis against brute force on the test spectra") {
  for (const auto& [name, s] : oracle::small_spectra()) {
    CAPTURE(name);
    const HilbertBasis hb = hilbert_basis(s);
    CHECK_FALSE(hb.cap_reached);
    for (const auto& g : hb.generators) {
      CHECK(oracle::pairing(s, g) == RatVector(s.q()));
      CHECK(oracle::is_irreducible(s, g));
    }
    CHECK(oracle::decomposes_over(oracle::monoid_upto(s, 8), hb.generators));
    // Graded output order.
    for (std::size_t i = 1; i < hb.generators.size(); ++i)
      CHECK(graded_less(hb.generators[i - 1], hb.generators[i]));
  }
}

TEST_CASE("positive relation against brute force") {
  for (const auto& [name, s] : oracle::small_spectra()) {
    CAPTURE(name);
    bool found = false;
    for (const auto& d : oracle::monoid_upto(s, 16))
      found = found || std::all_of(d.begin(), d.end(), [](int x) { return x > 0; });
    CHECK(has_positive_relation(s) == found);
  }
}

TEST_CASE("classify_dim3") {
  const Dim3Verdict v = classify_dim3(3, 2, 6);
  CHECK(v.holds);
  CHECK(v.l1 == 2);
  CHECK(v.l2 == 3);
  CHECK_FALSE(classify_dim3(1, 1, 1).holds);
  CHECK_FALSE(classify_dim3(2, 3, 1).holds);
  CHECK(code_of([] { classify_dim3(2, 4, 6); }) == ErrorCode::GcdNotOne);
  CHECK(code_of([] { classify_dim3(0, 4, 6); }) == ErrorCode::InvalidInput);
  // Witnesses satisfy the divisibility conditions.
  for (long d1 = 1; d1 <= 12; ++d1)
    for (long d2 = 1; d2 <= 12; ++d2)
      for (long d3 = 1; d3 <= 12; ++d3) {
        if (std::gcd(std::gcd(d1, d2), d3) != 1) continue;
        const Dim3Verdict w = classify_dim3(d1, d2, d3);
        if (!w.holds) continue;
        CHECK(w.l1 > 1);
        CHECK(w.l2 > 1);
        CHECK(std::gcd(w.l1, w.l2) == 1);
        CHECK(w.l1 * w.l2 == d3);
        CHECK(d1 % w.l2 == 0);
        CHECK(d2 % w.l1 == 0);
      }
}

TEST_CASE("classify_dim3 against the module and generator conditions on small triples") {
  for (long d1 = 1; d1 <= 10; ++d1)
    for (long d2 = 1; d2 <= 10; ++d2)
      for (long d3 = 1; d3 <= 10; ++d3) {
        if (std::gcd(std::gcd(d1, d2), d3) != 1) continue;
        CAPTURE(d1);
        CAPTURE(d2);
        CAPTURE(d3);
        CHECK(classify_dim3(d1, d2, d3).holds == oracle::dim3_condition_a(d1, d2, d3, 30));
      }
}
