#include "nfkit/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "nfkit/error.hpp"
#include "nfkit/matrix.hpp"

namespace nfkit {

Trunc min_trunc(Trunc a, Trunc b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

Trunc lower_trunc(Trunc t, int by) {
  if (!t) return t;
  return *t - by;
}

bool within(Trunc t, int degree) { return !t || degree <= *t; }

int degree_of(const Exponents& m) { return std::accumulate(m.begin(), m.end(), 0); }

std::vector<Exponents> monomials_of_degree(std::size_t n, int d) {
  std::vector<Exponents> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponents m(n, 0);
  // Lex ascending: the first exponent grows slowest.
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      m[i] = left;
      out.push_back(m);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      m[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, d);
  return out;
}

PolySeries PolySeries::constant(std::size_t nvars, const Rational& c, Trunc trunc) {
  PolySeries p(nvars, trunc);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

PolySeries PolySeries::monomial(const Exponents& m, const Rational& c, Trunc trunc) {
  PolySeries p(m.size(), trunc);
  p.add_term(m, c);
  return p;
}

Rational PolySeries::coeff(const Exponents& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> PolySeries::order() const {
  if (terms_.empty()) return std::nullopt;
  return degree_of(terms_.begin()->first);
}

std::optional<int> PolySeries::max_degree() const {
  if (terms_.empty()) return std::nullopt;
  return degree_of(terms_.rbegin()->first);
}

void PolySeries::add_term(const Exponents& m, const Rational& c) {
  if (m.size() != n_) throw Error(ErrorCode::DimensionMismatch, "exponent length differs from variable count");
  if (c == 0 || !within(trunc_, degree_of(m))) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PolySeries PolySeries::homogeneous_part(int d) const {
  PolySeries p(n_, trunc_);
  for (const auto& [m, c] : terms_)
    if (degree_of(m) == d) p.terms_.emplace(m, c);
  return p;
}

PolySeries PolySeries::truncated(Trunc t) const {
  PolySeries p(n_, trunc_);
  for (const auto& [m, c] : terms_)
    if (within(t, degree_of(m))) p.terms_.emplace(m, c);
  return p;
}

PolySeries PolySeries::with_trunc(Trunc t) const {
  PolySeries p = truncated(min_trunc(t, trunc_));
  p.trunc_ = min_trunc(t, trunc_);
  return p;
}

PolySeries PolySeries::as_polynomial() const {
  PolySeries p = *this;
  p.trunc_ = std::nullopt;
  return p;
}

PolySeries PolySeries::derivative(std::size_t i) const {
  PolySeries p(n_, lower_trunc(trunc_, 1));
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Exponents e = m;
    --e[i];
    p.add_term(e, c * m[i]);
  }
  return p;
}

PolySeries& PolySeries::operator+=(const PolySeries& o) {
  if (o.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "series variable count");
  trunc_ = min_trunc(trunc_, o.trunc_);
  if (trunc_) std::erase_if(terms_, [&](const auto& kv) { return degree_of(kv.first) > *trunc_; });
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PolySeries& PolySeries::operator-=(const PolySeries& o) {
  PolySeries neg = o;
  neg *= Rational(-1);
  return *this += neg;
}

PolySeries& PolySeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

PolySeries operator+(PolySeries a, const PolySeries& b) { return a += b; }
PolySeries operator-(PolySeries a, const PolySeries& b) { return a -= b; }
PolySeries operator-(PolySeries a) { return a *= Rational(-1); }
PolySeries operator*(PolySeries a, const Rational& c) { return a *= c; }
PolySeries operator*(const Rational& c, PolySeries a) { return a *= c; }

PolySeries operator*(const PolySeries& a, const PolySeries& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorCode::DimensionMismatch, "series variable count");
  PolySeries p(a.nvars(), min_trunc(a.trunc(), b.trunc()));
  Exponents e(a.nvars());
  for (const auto& [ma, ca] : a.terms()) {
    const int da = degree_of(ma);
    for (const auto& [mb, cb] : b.terms()) {
      if (!within(p.trunc(), da + degree_of(mb))) break;  // b's terms are graded
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ma[i] + mb[i];
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

bool same_terms(const PolySeries& a, const PolySeries& b) { return a.terms() == b.terms(); }

PolySeries substitute_monomials(const PolySeries& p, const std::vector<Exponents>& exps, std::size_t nx) {
  if (exps.size() != p.nvars()) throw Error(ErrorCode::DimensionMismatch, "one exponent row per variable");
  Trunc t;
  if (p.trunc()) {
    int min_deg = 1;
    if (!exps.empty()) {
      min_deg = degree_of(exps[0]);
      for (const auto& e : exps) min_deg = std::min(min_deg, degree_of(e));
    }
    t = (*p.trunc() + 1) * std::max(min_deg, 1) - 1;
  }
  PolySeries out(nx, t);
  for (const auto& [k, c] : p.terms()) {
    Exponents m(nx, 0);
    for (std::size_t i = 0; i < k.size(); ++i)
      for (std::size_t v = 0; v < nx; ++v) m[v] += k[i] * exps[i][v];
    out.add_term(m, c);
  }
  return out;
}

PolyVectorField::PolyVectorField(std::size_t n, Trunc trunc) : trunc_(trunc), comps_(n, PolySeries(n, trunc)) {}

PolyVectorField PolyVectorField::unit(std::size_t n, std::size_t j, const Exponents& m, const Rational& c,
                                      Trunc trunc) {
  PolyVectorField f(n, trunc);
  f.add_term(j, m, c);
  return f;
}

PolyVectorField PolyVectorField::from_components(std::vector<PolySeries> comps) {
  PolyVectorField f;
  Trunc t;
  bool first = true;
  for (const auto& c : comps) {
    if (c.nvars() != comps.size()) throw Error(ErrorCode::DimensionMismatch, "component variable count");
    t = first ? c.trunc() : min_trunc(t, c.trunc());
    first = false;
  }
  f.trunc_ = t;
  for (auto& c : comps) c = c.with_trunc(t);
  f.comps_ = std::move(comps);
  return f;
}

PolyVectorField PolyVectorField::linear(const Matrix& a, Trunc trunc) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "linear part must be square");
  const std::size_t n = a.rows();
  PolyVectorField f(n, trunc);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Exponents e(n, 0);
      e[k] = 1;
      f.add_term(i, e, a(i, k));
    }
  return f;
}

bool PolyVectorField::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const PolySeries& p) { return p.is_zero(); });
}

std::size_t PolyVectorField::term_count() const {
  std::size_t c = 0;
  for (const auto& p : comps_) c += p.terms().size();
  return c;
}

std::optional<int> PolyVectorField::max_degree() const {
  std::optional<int> d;
  for (const auto& p : comps_)
    if (auto m = p.max_degree()) d = d ? std::max(*d, *m) : *m;
  return d;
}

void PolyVectorField::add_term(std::size_t j, const Exponents& m, const Rational& c) {
  if (j >= comps_.size()) throw Error(ErrorCode::DimensionMismatch, "component index out of range");
  comps_[j].add_term(m, c);
}

PolyVectorField PolyVectorField::homogeneous_part(int d) const {
  PolyVectorField f = *this;
  for (auto& c : f.comps_) c = c.homogeneous_part(d);
  return f;
}

PolyVectorField PolyVectorField::truncated(Trunc t) const {
  PolyVectorField f = *this;
  for (auto& c : f.comps_) c = c.truncated(t);
  return f;
}

PolyVectorField PolyVectorField::with_trunc(Trunc t) const {
  PolyVectorField f = *this;
  f.trunc_ = min_trunc(t, trunc_);
  for (auto& c : f.comps_) c = c.with_trunc(f.trunc_);
  return f;
}

PolyVectorField PolyVectorField::as_polynomial() const {
  PolyVectorField f = *this;
  f.trunc_ = std::nullopt;
  for (auto& c : f.comps_) c = c.as_polynomial();
  return f;
}

PolyVectorField PolyVectorField::nonlinear_part() const {
  PolyVectorField f = *this;
  for (auto& c : f.comps_) c -= c.homogeneous_part(1);
  return f;
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& o) {
  if (o.n() != n()) throw Error(ErrorCode::DimensionMismatch, "field dimension");
  trunc_ = min_trunc(trunc_, o.trunc_);
  for (std::size_t j = 0; j < n(); ++j) comps_[j] += o.comps_[j];
  return *this;
}

PolyVectorField& PolyVectorField::operator-=(const PolyVectorField& o) {
  if (o.n() != n()) throw Error(ErrorCode::DimensionMismatch, "field dimension");
  trunc_ = min_trunc(trunc_, o.trunc_);
  for (std::size_t j = 0; j < n(); ++j) comps_[j] -= o.comps_[j];
  return *this;
}

PolyVectorField& PolyVectorField::operator*=(const Rational& c) {
  for (auto& p : comps_) p *= c;
  return *this;
}

PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) { return a -= b; }
PolyVectorField operator*(PolyVectorField a, const Rational& c) { return a *= c; }

PolyVectorField operator*(const PolySeries& phi, const PolyVectorField& f) {
  if (phi.nvars() != f.n()) throw Error(ErrorCode::DimensionMismatch, "scalar times field");
  std::vector<PolySeries> comps;
  for (std::size_t j = 0; j < f.n(); ++j) comps.push_back(phi * f[j]);
  return PolyVectorField::from_components(std::move(comps));
}

bool same_terms(const PolyVectorField& a, const PolyVectorField& b) {
  if (a.n() != b.n()) return false;
  for (std::size_t j = 0; j < a.n(); ++j)
    if (!same_terms(a[j], b[j])) return false;
  return true;
}

}  // namespace nfkit
