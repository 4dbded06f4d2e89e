#include "nfkit/vectorfield.hpp"

#include <algorithm>
#include <numeric>

#include "nfkit/error.hpp"
#include "nfkit/resonance.hpp"

namespace nfkit {

namespace {

bool has_constant_terms(const PolyVectorField& g) {
  for (const auto& c : g.components())
    if (c.order() == 0) return true;
  return false;
}

PolySeries untruncated(const PolySeries& p) { return p.as_polynomial(); }

// Budget of products with one factor vanishing at the origin.
Trunc derivation_budget(const PolyVectorField& g, Trunc other) {
  Trunc t = min_trunc(g.trunc(), other);
  return has_constant_terms(g) ? lower_trunc(t, 1) : t;
}

}  // namespace

PolyVectorField lie_bracket(const PolyVectorField& g, const PolyVectorField& h) {
  if (g.n() != h.n()) throw Error(ErrorCode::DimensionMismatch, "bracket of fields of different dimension");
  const std::size_t n = g.n();
  const Trunc t = has_constant_terms(g) || has_constant_terms(h) ? lower_trunc(min_trunc(g.trunc(), h.trunc()), 1)
                                                                 : min_trunc(g.trunc(), h.trunc());
  std::vector<PolySeries> gc, hc;
  for (std::size_t k = 0; k < n; ++k) {
    gc.push_back(untruncated(g[k]));
    hc.push_back(untruncated(h[k]));
  }
  std::vector<PolySeries> out(n, PolySeries(n));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      out[i] += gc[k] * hc[i].derivative(k);
      out[i] -= hc[k] * gc[i].derivative(k);
    }
  }
  for (auto& c : out) c = c.with_trunc(t);
  PolyVectorField f = PolyVectorField::from_components(std::move(out));
  return f.with_trunc(t);
}

PolySeries lie_derivative(const PolyVectorField& g, const PolySeries& phi) {
  if (g.n() != phi.nvars()) throw Error(ErrorCode::DimensionMismatch, "Lie derivative dimension");
  const Trunc t = derivation_budget(g, phi.trunc());
  PolySeries base = untruncated(phi);
  PolySeries out(g.n());
  for (std::size_t k = 0; k < g.n(); ++k) out += untruncated(g[k]) * base.derivative(k);
  return out.with_trunc(t);
}

PolySeries divergence(const PolyVectorField& f) {
  PolySeries out(f.n());
  for (std::size_t i = 0; i < f.n(); ++i) out += untruncated(f[i]).derivative(i);
  return out.with_trunc(lower_trunc(f.trunc(), 1));
}

PolySeries determinant_multiplier(const PolyVectorField& f, const std::vector<PolyVectorField>& gs) {
  const std::size_t n = f.n();
  if (gs.size() + 1 != n) throw Error(ErrorCode::DimensionMismatch, "determinant needs n-1 companion fields");
  std::vector<const PolyVectorField*> cols{&f};
  Trunc t = f.trunc();
  for (const auto& g : gs) {
    if (g.n() != n) throw Error(ErrorCode::DimensionMismatch, "companion field dimension");
    cols.push_back(&g);
    t = min_trunc(t, g.trunc());
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  PolySeries det(n);
  do {
    // sign via inversion count
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    PolySeries prod = PolySeries::constant(n, 1, t);
    for (std::size_t c = 0; c < n && !prod.is_zero(); ++c) prod = prod * (*cols[c])[perm[c]].with_trunc(t);
    if (inversions % 2) det -= prod;
    else det += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det.with_trunc(t);
}

Matrix linear_part(const PolyVectorField& f) {
  const std::size_t n = f.n();
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [m, c] : f[i].terms()) {
      if (degree_of(m) != 1) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (m[k] == 1) a(i, k) = c;
    }
  return a;
}

SplitField split_semisimple(const EigenSpectrum& s, const PolyVectorField& f) {
  if (f.n() != s.n()) throw Error(ErrorCode::DimensionMismatch, "field and spectrum dimensions differ");
  const std::size_t n = s.n();
  Matrix a = linear_part(f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (i == k) continue;
      if (a(i, k) != s.nilpotent()(i, k))
        throw Error(ErrorCode::LinearPartMismatch,
                    "linear entry (" + std::to_string(i + 1) + "," + std::to_string(k + 1) + ") differs from A_n");
    }
  bool all_zero = true;
  bool matches = s.rational_semisimple();
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) != 0) all_zero = false;
    if (matches && a(i, i) != s.rational_eigenvalue(i)) matches = false;
  }
  SplitField out;
  if (matches) out.explicit_semisimple = true;
  else if (!all_zero) throw Error(ErrorCode::LinearPartMismatch, "diagonal linear part differs from A_s");
  out.remainder = f;
  if (out.explicit_semisimple)
    for (std::size_t i = 0; i < n; ++i) {
      Exponents e(n, 0);
      e[i] = 1;
      out.remainder.add_term(i, e, -a(i, i));
    }
  return out;
}

PolyVectorField full_rational_field(const EigenSpectrum& s, const PolyVectorField& f) {
  if (!s.rational_semisimple())
    throw Error(ErrorCode::UnsupportedSpectrum, "operation needs rational eigenvalues (q <= 1)");
  SplitField sp = split_semisimple(s, f);
  PolyVectorField out = sp.remainder;
  for (std::size_t i = 0; i < s.n(); ++i) {
    Exponents e(s.n(), 0);
    e[i] = 1;
    out.add_term(i, e, s.rational_eigenvalue(i));
  }
  return out;
}

std::vector<PolySeries> semisimple_lie_derivative(const EigenSpectrum& s, const PolySeries& phi) {
  if (phi.nvars() != s.n()) throw Error(ErrorCode::DimensionMismatch, "series and spectrum dimensions differ");
  std::vector<PolySeries> out(s.q(), PolySeries(s.n(), phi.trunc()));
  for (const auto& [m, c] : phi.terms()) {
    RatVector w = s.pairing(m);
    for (std::size_t k = 0; k < s.q(); ++k) out[k].add_term(m, c * w[k]);
  }
  return out;
}

std::vector<PolyVectorField> semisimple_bracket(const EigenSpectrum& s, const PolyVectorField& g) {
  if (g.n() != s.n()) throw Error(ErrorCode::DimensionMismatch, "field and spectrum dimensions differ");
  std::vector<PolyVectorField> out(s.q(), PolyVectorField(s.n(), g.trunc()));
  for (std::size_t j = 0; j < g.n(); ++j)
    for (const auto& [m, c] : g[j].terms()) {
      RatVector w = s.pairing(m);
      for (std::size_t k = 0; k < s.q(); ++k) out[k].add_term(j, m, c * (w[k] - s.lambda()(j, k)));
    }
  return out;
}

bool in_kernel_of_semisimple(const EigenSpectrum& s, const PolySeries& phi) {
  for (const auto& p : semisimple_lie_derivative(s, phi))
    if (!p.is_zero()) return false;
  return true;
}

SpectralDivergence spectral_divergence(const EigenSpectrum& s, const PolyVectorField& f) {
  SplitField sp = split_semisimple(s, f);
  return {s.trace(), divergence(sp.remainder)};
}

bool is_resonant(const EigenSpectrum& s, std::size_t j, const Exponents& m) {
  return s.pairing(m) == s.eigenvalue(j);
}

bool is_pdnf(const EigenSpectrum& s, const PolyVectorField& f) {
  SplitField sp = split_semisimple(s, f);
  for (std::size_t j = 0; j < s.n(); ++j)
    for (const auto& [m, c] : sp.remainder[j].terms()) {
      const int d = degree_of(m);
      if (d == 1) continue;  // nilpotent part, validated by the split
      if (d == 0 || !is_resonant(s, j, m)) return false;
    }
  return true;
}

void require_pdnf(const EigenSpectrum& s, const PolyVectorField& f) {
  if (!is_pdnf(s, f)) throw Error(ErrorCode::NotPDNF, "field has a nonresonant nonlinear term");
}

bool vector_monomial_less(const VectorMonomial& a, const VectorMonomial& b) {
  const int da = degree_of(a.m);
  const int db = degree_of(b.m);
  if (da != db) return da < db;
  if (a.j != b.j) return a.j < b.j;
  return a.m < b.m;
}

std::vector<VectorMonomial> resonant_vector_monomials(const EigenSpectrum& s, int min_degree, int max_degree) {
  std::vector<VectorMonomial> out;
  for (int d = std::max(min_degree, 1); d <= max_degree; ++d)
    for (std::size_t j = 0; j < s.n(); ++j)
      for (auto& m : resonant_multiindices(s, j, d)) out.push_back({j, std::move(m)});
  return out;
}

std::vector<PolyVectorField> pdnf_basis(const EigenSpectrum& s, std::optional<int> max_degree) {
  int top = 0;
  if (max_degree) {
    if (*max_degree < 2) throw Error(ErrorCode::InvalidInput, "max_degree must be at least 2");
    top = *max_degree;
  } else if (is_finite_linear_centralizer(s)) {
    top = resonance_degree_bound(s);
  } else {
    throw Error(ErrorCode::InfiniteResonanceWithoutCap, "infinite resonance set needs an explicit degree cap");
  }
  std::vector<PolyVectorField> out;
  for (const auto& vm : resonant_vector_monomials(s, 2, top))
    out.push_back(PolyVectorField::unit(s.n(), vm.j, vm.m));
  return out;
}

}  // namespace nfkit
