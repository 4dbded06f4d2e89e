// Acceptance suite: one PASS/FAIL line per criterion, all checks exact.

#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

#include "nfkit/centralizer.hpp"
#include "nfkit/invariants.hpp"
#include "nfkit/jacobi.hpp"
#include "nfkit/linalg.hpp"
#include "nfkit/resonance.hpp"
#include "nfkit/vectorfield.hpp"
#include "support/oracles.hpp"

using namespace nfkit;
using oracle::diag;
using oracle::field;

namespace {

// Collects the first few mismatches of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  bool ok() const { return failed_ == 0 && total_ > 0; }
  std::string summary() const {
    std::ostringstream s;
    s << total_ - failed_ << "/" << total_ << " checks";
    for (const auto& f : failures_) s << "; " << f;
    return s.str();
  }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
};

std::string str(const Rational& r) { return r.get_str(); }

// X_f(phi) - div f * phi through degree `upto`, by direct differentiation.
bool raw_multiplier(const PolyVectorField& f, const PolySeries& phi, int upto) {
  PolySeries lhs(f.n());
  PolySeries div(f.n());
  for (std::size_t j = 0; j < f.n(); ++j) {
    lhs += f[j] * phi.derivative(j);
    div += f[j].derivative(j);
  }
  return (lhs - div * phi).truncated(upto).is_zero();
}

bool annihilated_by_semisimple(const EigenSpectrum& s, const PolySeries& p) {
  for (const auto& [m, c] : p.terms())
    if (oracle::pairing(s, m) != RatVector(s.q())) return false;
  return true;
}

const MultiplierEntry* entry(const MultiplierLadder& l, int r) {
  for (const auto& e : l.entries)
    if (e.r == r) return &e;
  return nullptr;
}

bool proportional(const PolySeries& a, const PolySeries& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const auto& [m, c] = *a.terms().begin();
  const Rational k = b.coeff(m) / c;
  return k != 0 && same_terms(a * k, b);
}

PolyVectorField d1263_p(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4) {
  return field(3, {{0, {0, 2, 0}, a1}, {0, {0, 1, 2}, a2}, {0, {0, 0, 4}, a3}, {1, {0, 0, 2}, a4}});
}

// Criterion 1
// Coefficient matrix of [B + q, p] = 0 in (b11, b22, b33, beta1..beta4), read off monomial by monomial.
std::size_t d1263_kernel_dim(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4) {
  const Matrix m{{-a1, 2 * a1, 0, 0, 0, 0, 0},
                 {-a2, a2, 2 * a2, -2 * a4, 0, 0, 2 * a1},
                 {-a3, 0, 4 * a3, 0, -a4, 0, a2},
                 {0, -a4, 2 * a4, 0, 0, 0, 0}};
  return 7 - mat_rank(m);
}

void d1263_case_table(Check& c) {
  const EigenSpectrum s = diag({12, 6, 3});
  const PolyVectorField lin = oracle::linear_field(s);
  oracle::Rng rng(101);
  for (int draw = 0; draw < 5; ++draw) {
    const Rational a1 = rng.nonzero(), a2 = rng.nonzero(), a4 = rng.nonzero();
    Rational a3 = rng.nonzero();
    while (4 * a1 * a3 - a2 * a2 == 0) a3 = rng.nonzero();
    // The x3^4 e1 row is dependent on the other two exactly when 4 a1 a3 = a2^2.
    const Rational a3_degenerate = a2 * a2 / (4 * a1);
    const std::vector<std::pair<std::array<Rational, 4>, std::size_t>> cases = {
        {{a1, a2, a3, a4}, 3}, {{0, a2, a3, a4}, 4}, {{a1, a2, a3, 0}, 4},
        {{a1, a2, a3_degenerate, 0}, 5}, {{0, a2, a3, 0}, 5}, {{0, 0, a3, 0}, 6},
        {{0, 0, 0, 0}, 7}};
    for (std::size_t k = 0; k < cases.size(); ++k) {
      const auto& [a, want] = cases[k];
      const PolyVectorField p = d1263_p(a[0], a[1], a[2], a[3]);
      const CentralizerResult res = centralizer_exact(s, p);
      const std::string tag = "case " + std::to_string(k + 1) + " gave " + std::to_string(res.dimension);
      c.expect(res.dimension == want, tag);
      c.expect(res.dimension == d1263_kernel_dim(a[0], a[1], a[2], a[3]), tag + " vs the coefficient matrix");
      for (const auto& b : res.basis) c.expect(lie_bracket(b, lin + p).is_zero(), "basis bracket");
    }
  }
}

// Criterion 2
void jordan_example(Check& c) {
  const EigenSpectrum s = diag({3, 3, 3, 2, 2, 1}, {{0, 1, 1}, {1, 2, 1}, {3, 4, 1}});
  PolyVectorField nil(6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (s.nilpotent()(i, j) != 0) {
        Exponents e(6, 0);
        e[j] = 1;
        nil.add_term(i, e, s.nilpotent()(i, j));
      }
  const std::vector<Exponents> x6x4{{0, 0, 0, 1, 0, 1}, {0, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 0, 3}};
  oracle::Rng rng(202);
  for (int draw = 0; draw < 5; ++draw) {
    PolyVectorField f = nil;
    for (std::size_t j = 0; j < 3; ++j)
      for (const auto& m : x6x4) f.add_term(j, m, rng.nonzero());
    f.add_term(3, {0, 0, 0, 0, 0, 2}, rng.nonzero());
    f.add_term(4, {0, 0, 0, 0, 0, 2}, rng.nonzero());
    const CentralizerResult res = centralizer_exact(s, f);
    c.expect(res.dimension == 6, "generic draw gave " + std::to_string(res.dimension));
  }
  const CentralizerResult zero = centralizer_exact(s, nil);
  c.expect(zero.dimension == 10, "a = 0 gave " + std::to_string(zero.dimension));
}

// Criterion 3
void two_block_first(Check& c) {
  const EigenSpectrum s = diag({12, 12, 6, 6, 6, 3});
  c.expect(resonance_set(s).count == 23, "resonance count");
  c.expect(linear_commutant(s).dimension == 14, "commutant dimension");
  oracle::Rng rng(303);
  for (int draw = 0; draw < 20; ++draw) {
    const PolyVectorField f = oracle::random_pdnf(rng, s, 4);
    const std::size_t dim = centralizer_exact(s, f).dimension;
    c.expect(dim >= 14 && dim <= 37, "dimension " + std::to_string(dim));
  }
}

// Criterion 4
void scaled_family(Check& c) {
  oracle::Rng rng(404);
  for (long q = 1; q <= 3; ++q) {
    const EigenSpectrum s = diag({12 * q, 3, 2});
    std::vector<Exponents> want;
    for (int k = 0; k <= 2 * q; ++k) want.push_back({0, static_cast<int>(4 * q) - 2 * k, 3 * k});
    std::sort(want.begin(), want.end(), graded_less);
    const ResonanceSet rs = resonance_set(s);
    c.expect(rs.per_component[0] == want, "R1 for q = " + std::to_string(q));
    for (int draw = 0; draw < 3; ++draw) {
      PolyVectorField f(3);
      for (const auto& m : want) f.add_term(0, m, rng.nonzero());
      const std::size_t dim = centralizer_exact(s, f).dimension;
      c.expect(dim >= static_cast<std::size_t>(2 * q + 2), "q = " + std::to_string(q) + " dim " + std::to_string(dim));
    }
  }
}

// Criterion 5
void finite_dimension_bounds(Check& c) {
  const std::vector<EigenSpectrum> spectra = {
      diag({12, 6, 3}),    diag({12, 3, 2}),       diag({24, 3, 2}),    diag({12, 12, 6, 6, 6, 3}),
      diag({5, 3, 2}),     diag({7, 4, 3, 1}),     diag({6, 4, 3, 2}),  diag({3, 3, 3, 2, 2, 1}, {{0, 1, 1}, {1, 2, 1}, {3, 4, 1}}),
      diag({4, 4, 2, 1}, {{0, 1, 1}}), diag({9, 3, 3, 1}), diag({2, 1}), diag({8, 4, 2, 1})};
  oracle::Rng rng(505);
  for (int t = 0; t < 100; ++t) {
    const EigenSpectrum& s = spectra[t % spectra.size()];
    const ResonanceSet rs = resonance_set(s);
    const std::size_t d = linear_commutant(s).dimension;
    const bool zero = t % 10 == 0;
    const PolyVectorField f = zero ? oracle::random_pdnf(rng, s, 0) : oracle::random_pdnf(rng, s, *rs.degree_bound);
    const bool p_zero = f.nonlinear_part().is_zero();
    const std::size_t dim = centralizer_exact(s, f).dimension;
    const std::string tag = "spectrum " + std::to_string(t % spectra.size()) + " dim " + std::to_string(dim);
    c.expect(d <= dim && dim <= d + rs.count, tag + " outside [d, d + r]");
    c.expect(dim >= s.n(), tag + " below n");
    // The upper bound is only reached by p = 0, and p = 0 reaches it when A_n = 0.
    if (dim == d + rs.count) c.expect(p_zero, tag + " reaches d + r with p != 0");
    if (p_zero && !s.has_nilpotent()) c.expect(dim == d + rs.count, tag + " below d + r with p = 0");
    if (s.has_nilpotent()) continue;
    // Blocks of equal eigenvalues: sum n_i^2 <= dim <= sum n_i (n_i + r_i), r_i per component of the block.
    std::map<Rational, std::pair<std::size_t, std::size_t>> blocks;
    std::vector<std::size_t> per(s.n(), 0);
    for (const auto& r : oracle::resonances_upto(s, *rs.degree_bound)) ++per[r.j];
    for (std::size_t i = 0; i < s.n(); ++i) {
      auto& b = blocks[s.rational_eigenvalue(i)];
      ++b.first;
      b.second = per[i];
    }
    std::size_t lower = 0, upper = 0;
    for (const auto& [ev, b] : blocks) {
      lower += b.first * b.first;
      upper += b.first * (b.first + b.second);
    }
    c.expect(lower <= dim && dim <= upper, tag + " outside the block bounds");
  }
}

// Criterion 6
void c_matrices_in_centralizer(Check& c) {
  const std::vector<EigenSpectrum> spectra = {diag({1, -1}), diag({3, 2, -6}), diag({1, 1, -2}),
                                              oracle::coords({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}),
                                              oracle::coords({{1, 0}, {-2, 0}, {0, 3}, {0, -1}})};
  oracle::Rng rng(606);
  for (int t = 0; t < 50; ++t) {
    const EigenSpectrum& s = spectra[t % spectra.size()];
    if (!has_positive_relation(s)) {
      c.expect(false, "test spectrum without a positive relation");
      continue;
    }
    const int D = s.n() > 3 ? 3 : 4;
    const PolyVectorField f = oracle::random_pdnf(rng, s, D);
    const CentralizerResult res = centralizer_truncated(s, f, D);
    for (const auto& row : c_matrix_basis(s)) {
      PolyVectorField cx(s.n());
      for (std::size_t i = 0; i < s.n(); ++i) {
        Exponents e(s.n(), 0);
        e[i] = 1;
        cx.add_term(i, e, Rational(row[i]));
      }
      c.expect(in_solution_span(res, cx), "C-matrix outside the span");
    }
    c.expect(res.dimension >= s.q() + 1, "truncated dimension below q + 1");
  }
}

// Criterion 7
void coupled_multipliers(Check& c) {
  const EigenSpectrum s = diag({1, -1, 0});
  oracle::Rng rng(707);
  auto draw = [&]() {
    std::array<Rational, 3> a;
    for (;;) {
      a = {Rational(rng.integer(-40, 40), rng.integer(11, 29)), Rational(rng.integer(-40, 40), rng.integer(11, 29)),
           rng.nonzero(40, 29)};
      for (auto& x : a) x.canonicalize();
      const Rational sum = a[0] + a[1];
      if (a[2] != 0 && sum != 0 && sum != 1 && sum != 2 && sum != 3 && a[0] != a[1]) return a;
    }
  };
  for (int t = 0; t < 10; ++t) {
    const auto [a1, a2, a4] = draw();
    const std::string tag = "alpha = (" + str(a1) + ", " + str(a2) + ", 1, " + str(a4) + ")";
    const PolyVectorField f = oracle::coupled_field(a1, a2, 1, a4);
    const MultiplierLadder l = solve_multiplier(s, f, 3, 4, 6);
    const MultiplierEntry* r3 = entry(l, 3);
    const MultiplierEntry* r4 = entry(l, 4);
    c.expect(r3 && r3->status == MultiplierStatus::Inconsistent, tag + ": r = 3 solvable");
    if (!r4 || r4->status != MultiplierStatus::Solved || r4->solutions.size() != 1) {
      c.expect(false, tag + ": r = 4 not uniquely solved");
      continue;
    }
    const PolySeries phi4 = r4->multiplier->homogeneous_part(4);
    const Rational lead = phi4.coeff({1, 1, 2});
    const Rational beta = 2 * a4 / (2 - a1 - a2);
    PolySeries want(3);
    want.add_term({1, 1, 2}, 1);
    want.add_term({2, 2, 0}, beta);
    c.expect(lead != 0 && same_terms(phi4 * (1 / lead), want), tag + ": phi_4 != x1x2x3^2 + beta* x1^2x2^2");
    c.expect(raw_multiplier(f, *r4->multiplier, 6), tag + ": multiplier residual");

    const PolyVectorField cubic = oracle::coupled_field(a1, a2, 1, a4, 1);
    const MultiplierLadder lc = solve_multiplier(s, cubic, 4, 4, 5);
    c.expect(entry(lc, 4)->status == MultiplierStatus::Inconsistent && entry(lc, 4)->failed_degree == 5,
             tag + ": cubic r = 4 not inconsistent at 5");
    const MultiplierLadder l7 = solve_multiplier(s, cubic, 0, 6, 7);
    for (const auto& e : l7.entries)
      c.expect(e.status == MultiplierStatus::Inconsistent, tag + ": cubic r = " + std::to_string(e.r) + " solvable at D = 7");
  }
}

// Criterion 8
void divergence_first_integral(Check& c) {
  const std::vector<EigenSpectrum> spectra = {diag({1, -1, 0}), diag({12, 6, 3}), diag({3, 2, -6}), diag({1, -1}),
                                              diag({2, 2, 1}, {{0, 1, 1}}), oracle::coords({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}),
                                              oracle::coords({{1, 0}, {-2, 0}, {0, 3}, {0, -1}})};
  oracle::Rng rng(808);
  int multipliers = 0;
  for (int t = 0; t < 100; ++t) {
    const EigenSpectrum& s = spectra[t % spectra.size()];
    const PolyVectorField f = oracle::random_pdnf(rng, s, 5, 0.6, s.q() == 1 && rng.coin());
    PolySeries div(s.n());
    for (std::size_t j = 0; j < s.n(); ++j) div += f[j].derivative(j);
    c.expect(annihilated_by_semisimple(s, div), "divergence term off the first-integral lattice");
    c.expect(divergence_integral_check(s, f), "divergence_integral_check");
    if (t % 4 != 0) continue;
    for (const auto& e : solve_multiplier(s, f, 0, 4, 4).entries)
      for (const auto& phi : e.solutions) {
        ++multipliers;
        for (const auto& [m, coef] : phi.terms())
          c.expect(oracle::pairing(s, m) == s.trace(), "multiplier term off the support");
      }
  }
  c.expect(multipliers > 0, "no multipliers were returned");
}

// Criterion 9
void dim3_classifier(Check& c) {
  oracle::Rng rng(909);
  int tested = 0;
  while (tested < 200) {
    const long d1 = rng.integer(1, 30), d2 = rng.integer(1, 30), d3 = rng.integer(1, 30);
    if (std::gcd(std::gcd(d1, d2), d3) != 1) continue;
    ++tested;
    c.expect(classify_dim3(d1, d2, d3).holds == oracle::dim3_condition_a(d1, d2, d3),
             std::to_string(d1) + "," + std::to_string(d2) + "," + std::to_string(d3));
  }
}

// Criterion 10
void hilbert_basis_oracle(Check& c) {
  for (const auto& [name, s] : oracle::small_spectra()) {
    if (s.n() > 4) continue;
    const HilbertBasis hb = hilbert_basis(s);
    c.expect(!hb.cap_reached, name + ": cap reached");
    for (const auto& g : hb.generators) c.expect(oracle::is_irreducible(s, g), name + ": reducible generator");
    c.expect(oracle::decomposes_over(oracle::monoid_upto(s, 8), hb.generators), name + ": element does not decompose");
  }
}

// Criterion 11
void algebraic_identities(Check& c) {
  oracle::Rng rng(1111);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = rng.integer(1, 4);
    const PolyVectorField a = oracle::random_field(rng, n, 0, 3, 4);
    const PolyVectorField b = oracle::random_field(rng, n, 0, 3, 4);
    const PolyVectorField g = oracle::random_field(rng, n, 0, 3, 4);
    const PolySeries phi = oracle::random_series(rng, n, 0, 3, 4);
    const PolySeries psi = oracle::random_series(rng, n, 0, 3, 3);
    c.expect(lie_bracket(a, b) == lie_bracket(b, a) * Rational(-1), "antisymmetry");
    c.expect((lie_bracket(lie_bracket(a, b), g) + lie_bracket(lie_bracket(b, g), a) + lie_bracket(lie_bracket(g, a), b))
                 .is_zero(),
             "Jacobi identity");
    c.expect(lie_derivative(a, lie_derivative(b, phi)) - lie_derivative(b, lie_derivative(a, phi)) ==
                 lie_derivative(lie_bracket(a, b), phi),
             "Lie derivative of a bracket");
    c.expect(lie_bracket(a, psi * b) == lie_derivative(a, psi) * b + psi * lie_bracket(a, b), "product rule");
  }
}

// Criterion 12
void reduced_transfer(Check& c) {
  const EigenSpectrum s = diag({3, 2, -6});
  const InvariantAlgebra inv = invariant_generators(s);
  c.expect(inv.independent && inv.r() == 2, "generators of diag(3, 2, -6)");
  c.expect(transfer_reduced(inv, TransferDirection::AmbientToReduced, PolySeries::monomial({1, 1, 1})).image ==
               PolySeries::monomial({1, 1}),
           "sigma <-> y1 y2");
  oracle::Rng rng(1212);
  int unique = 0;
  for (int t = 0; t < 10; ++t) {
    std::vector<PolySeries> eta(3, PolySeries(2));
    for (auto& e : eta) {
      e.add_term({1, 0}, rng.nonzero());
      e.add_term({0, 1}, rng.nonzero());
    }
    const PolyVectorField f = oracle::linear_field(s) + oracle::field_from_eta(inv.generators, eta);
    const ReducedField red = reduce_vectorfield(s, inv, f);
    const TransferContext ctx{&s, &f, &red};
    const ObstructionResult ob = reduced_multiplier_obstruction(red);
    if (ob.status != ObstructionStatus::UniqueCandidate) {
      c.expect(oracle::sigma_linear_multipliers(red.nu).size() != 1, "missed a unique candidate");
      continue;
    }
    ++unique;
    std::vector<PolySeries> candidates = {*ob.candidate};
    PolySeries perturbed = *ob.candidate;
    perturbed.add_term({2, 1}, rng.nonzero());
    candidates.push_back(perturbed);
    candidates.push_back(PolySeries::monomial({1, 1}));
    for (const auto& cand : candidates) {
      const TransferResult up = transfer_reduced(inv, TransferDirection::ReducedToAmbient, cand, ctx);
      c.expect(*up.source_is_multiplier == *up.image_is_multiplier, "verdicts differ (reduced to ambient)");
      c.expect(*up.image_is_multiplier == raw_multiplier(f, up.image, 40), "ambient verdict vs direct residual");
      const TransferResult down = transfer_reduced(inv, TransferDirection::AmbientToReduced, up.image, ctx);
      c.expect(*down.source_is_multiplier == *down.image_is_multiplier, "verdicts differ (ambient to reduced)");
      c.expect(down.image == cand, "round trip");
    }
    const TransferResult genuine = transfer_reduced(inv, TransferDirection::ReducedToAmbient, *ob.candidate, ctx);
    c.expect(*genuine.image_is_multiplier, "candidate is not an ambient multiplier");

    const MultiplierLadder l = solve_multiplier(reduced_spectrum(2), red.field, 3, 3, 4);
    const MultiplierEntry* e = entry(l, 3);
    c.expect(e && e->status == MultiplierStatus::Solved && e->solutions.size() == 1 &&
                 proportional(e->multiplier->homogeneous_part(3), *ob.candidate),
             "candidate differs from the reduced solver");
  }
  c.expect(unique > 0, "no instance reached the r = 2 branch");

  // mu_ij = nu_ij - nu_jj with mu12 = mu21 = mu13 = mu31 = 1 forces alpha2 = alpha3 = -alpha1,
  // and mu23 = mu32 = 1 then needs alpha2 + alpha3 = 0.
  Matrix nu(3, 3);
  const RatVector d{1, 2, 3};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) nu(i, j) = i == j ? d[i] : 1 + d[j];
  ReducedField red3;
  red3.r = 3;
  red3.nu = nu;
  red3.field = oracle::quadratic_from_nu(nu);
  c.expect(reduced_multiplier_obstruction(red3).status == ObstructionStatus::NoMultiplier, "r = 3 obstruction");
  c.expect(oracle::sigma_linear_multipliers(nu).empty(), "r = 3 brute force found a multiplier");
}

// Criterion 13
void normalizer_reduction(Check& c) {
  const std::vector<EigenSpectrum> spectra = {diag({1, -1}), diag({1, -1, 0}), diag({2, 2, 1}, {{0, 1, 1}}), diag({3, 2, -6}),
                                              diag({2, 3})};
  oracle::Rng rng(1313);
  for (int t = 0; t < 15; ++t) {
    const EigenSpectrum& s = spectra[t % spectra.size()];
    const int D = 4;
    const PolyVectorField f = oracle::random_pdnf(rng, s, D);
    const NormalizerResult nr = normalizer_truncated(s, f, D);
    for (int k = 0; k < 3; ++k) {
      PolyVectorField g(s.n(), D);
      PolySeries l(s.n(), D - 1);
      for (const auto& b : nr.basis) {
        const Rational w = rng.rational(3, 2);
        g += b.g * w;
        l += b.lambda * w;
      }
      const NormalizerReduction red = normalizer_reduce(s, f, g, l, D);
      c.expect(annihilated_by_semisimple(s, red.alpha), "X_{A_s}(alpha) != 0");
      c.expect(red.alpha.coeff(Exponents(s.n(), 0)) == 0, "alpha(0) != 0");
    }
  }
  // f = (1 + x1 x2) diag(1, -1) x, g = I x, lambda = 2 phi - 2 phi^2 with phi = x1 x2.
  const EigenSpectrum saddle = diag({1, -1});
  const PolyVectorField f = field(2, {{0, {2, 1}, 1}, {1, {1, 2}, -1}});
  PolySeries lambda(2, 4);
  lambda.add_term({1, 1}, 2);
  lambda.add_term({2, 2}, -2);
  const NormalizerReduction ex = normalizer_reduce(saddle, f, field(2, {{0, {1, 0}, 1}, {1, {0, 1}, 1}}, 5), lambda, 5);
  c.expect(ex.beta.is_zero(), "example: beta != 0");
  c.expect(!ex.alpha.is_zero(), "example: alpha == 0");
  c.expect(annihilated_by_semisimple(saddle, ex.alpha), "example: X_{A_s}(alpha) != 0");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria = {
      {"diag(12,6,3) centralizer case table", d1263_case_table},
      {"Jordan-block centralizer dimensions", jordan_example},
      {"diag(12,12,6,6,6,3) resonances, commutant, dimension range", two_block_first},
      {"diag(12q,3,2) resonances and dimension lower bound", scaled_family},
      {"finite-resonance dimension bounds", finite_dimension_bounds},
      {"C-matrices in the truncated centralizer", c_matrices_in_centralizer},
      {"diag(1,-1,0) multiplier ladder", coupled_multipliers},
      {"divergence is a first integral of A_s", divergence_first_integral},
      {"dimension-3 classifier against enumeration", dim3_classifier},
      {"Hilbert bases against enumeration", hilbert_basis_oracle},
      {"Lie bracket identities", algebraic_identities},
      {"ambient and reduced multiplier transfer", reduced_transfer},
      {"normalizer reduction", normalizer_reduction},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    std::string note;
    try {
      criteria[i].second(c);
      note = c.summary();
    } catch (const std::exception& e) {
      c.expect(false, std::string("threw: ") + e.what());
      note = c.summary();
    }
    const bool ok = c.ok();
    if (!ok) ++failed;
    std::printf("%s %2zu %s (%s)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first, note.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
