#include "nfkit/resonance.hpp"

#include <algorithm>
#include <functional>

#include "nfkit/error.hpp"
#include "nfkit/lp.hpp"

namespace nfkit {

namespace {

enum class ColumnSign { Mixed, NonNegative, NonPositive };

std::vector<ColumnSign> column_signs(const EigenSpectrum& s) {
  std::vector<ColumnSign> out(s.q(), ColumnSign::Mixed);
  for (std::size_t k = 0; k < s.q(); ++k) {
    bool nonneg = true;
    bool nonpos = true;
    for (std::size_t i = 0; i < s.n(); ++i) {
      if (s.lambda()(i, k) < 0) nonneg = false;
      if (s.lambda()(i, k) > 0) nonpos = false;
    }
    if (nonneg) out[k] = ColumnSign::NonNegative;
    else if (nonpos) out[k] = ColumnSign::NonPositive;
  }
  return out;
}

}  // namespace

std::vector<Exponents> multiindices_with_pairing(const EigenSpectrum& s, int d, const RatVector& target) {
  const std::size_t n = s.n();
  const std::size_t q = s.q();
  if (target.size() != q) throw Error(ErrorCode::DimensionMismatch, "pairing target length");
  std::vector<Exponents> out;
  if (d < 0) return out;
  const auto signs = column_signs(s);
  Exponents m(n, 0);
  RatVector partial(q);

  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    for (std::size_t k = 0; k < q; ++k) {
      if (signs[k] == ColumnSign::NonNegative && partial[k] > target[k]) return;
      if (signs[k] == ColumnSign::NonPositive && partial[k] < target[k]) return;
    }
    if (i + 1 == n) {
      m[i] = left;
      bool ok = true;
      for (std::size_t k = 0; k < q && ok; ++k) ok = partial[k] + left * s.lambda()(i, k) == target[k];
      if (ok) out.push_back(m);
      m[i] = 0;
      return;
    }
    for (int v = 0; v <= left; ++v) {
      m[i] = v;
      rec(i + 1, left - v);
      for (std::size_t k = 0; k < q; ++k) partial[k] += s.lambda()(i, k);
    }
    for (std::size_t k = 0; k < q; ++k) partial[k] -= (left + 1) * s.lambda()(i, k);
    m[i] = 0;
  };
  rec(0, d);
  return out;
}

std::vector<Exponents> resonant_multiindices(const EigenSpectrum& s, std::size_t j, int d) {
  if (j >= s.n()) throw Error(ErrorCode::DimensionMismatch, "component index out of range");
  if (d < 1) throw Error(ErrorCode::InvalidInput, "degree must be at least 1");
  return multiindices_with_pairing(s, d, s.eigenvalue(j));
}

int resonance_degree_bound(const EigenSpectrum& s) {
  if (!is_finite_linear_centralizer(s))
    throw Error(ErrorCode::InfiniteResonance, "resonance set is infinite (a nonnegative relation exists)");
  Matrix a = s.lambda().transpose();
  RatVector ones(s.n(), Rational(1));
  int bound = 1;
  for (std::size_t j = 0; j < s.n(); ++j) {
    LpResult res = lp_max(ones, a, s.eigenvalue(j));
    if (res.status != LpStatus::Optimal)
      throw Error(ErrorCode::InfiniteResonance, "degree LP not bounded for component " + std::to_string(j + 1));
    Rational f = floor_of(res.value);
    bound = std::max(bound, static_cast<int>(f.get_num().get_si()));
  }
  return bound;
}

ResonanceSet resonance_set(const EigenSpectrum& s, std::optional<int> cap) {
  ResonanceSet rs;
  rs.finite = is_finite_linear_centralizer(s);
  int top = 0;
  if (rs.finite) {
    rs.degree_bound = resonance_degree_bound(s);
    top = *rs.degree_bound;
  } else {
    if (!cap) throw Error(ErrorCode::InfiniteResonanceWithoutCap, "infinite resonance set needs an explicit degree cap");
    rs.cap = *cap;
    top = *cap;
  }
  rs.per_component.resize(s.n());
  for (std::size_t j = 0; j < s.n(); ++j)
    for (int d = 2; d <= top; ++d) {
      auto ms = resonant_multiindices(s, j, d);
      rs.per_component[j].insert(rs.per_component[j].end(), ms.begin(), ms.end());
    }
  for (const auto& r : rs.per_component) rs.count += r.size();
  return rs;
}

namespace {

// Largest s with a * s <= value, a > 0.
int floor_ratio(const Rational& value, const Rational& a) {
  Rational f = floor_of(value / a);
  return static_cast<int>(f.get_num().get_si());
}

Rational positivity_scale(const RatVector& mu) {
  Rational a = 1;
  for (const auto& m : mu) a = std::min(a, m);
  return a;
}

bool all_positive(const RatVector& mu) {
  return std::all_of(mu.begin(), mu.end(), [](const Rational& m) { return m > 0; });
}

// Calls visit(parts) for every composition of s into `count` nonnegative parts.
void compositions(int s, std::size_t count, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> parts(count, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == count) {
      parts[i] = left;
      visit(parts);
      return;
    }
    for (int v = left; v >= 0; --v) {
      parts[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (count == 0) {
    if (s == 0) visit(parts);
    return;
  }
  rec(0, s);
}

}  // namespace

SemiInvariantLadder semiinvariant_degree_ladder(const RatVector& mu, const Rational& cofactor, int cap) {
  SemiInvariantLadder out;
  int top = cap;
  if (all_positive(mu)) {
    out.complete = true;
    top = cofactor < 0 ? 1 : floor_ratio(cofactor, positivity_scale(mu));
  }
  out.bound = top;
  const std::size_t r = mu.size();
  for (int s = 2; s <= top; ++s) {
    // parts[0] = k, parts[1..r] = k_i
    compositions(s, r + 1, [&](const std::vector<int>& parts) {
      Rational v = parts[0];
      for (std::size_t i = 0; i < r; ++i) v += parts[i + 1] * mu[i];
      if (v == cofactor) out.solutions.push_back({s, parts[0], std::vector<int>(parts.begin() + 1, parts.end())});
    });
  }
  std::sort(out.solutions.begin(), out.solutions.end(), [](const LadderSolution& a, const LadderSolution& b) {
    if (a.s != b.s) return a.s < b.s;
    if (a.k != b.k) return a.k < b.k;
    return a.ks < b.ks;
  });
  return out;
}

CommutingLadder commuting_degree_ladder(const RatVector& mu, int cap) {
  CommutingLadder out;
  int top = cap;
  if (all_positive(mu) && !mu.empty()) {
    out.complete = true;
    top = floor_ratio(*std::max_element(mu.begin(), mu.end()), positivity_scale(mu));
  }
  out.bound = top;
  const std::size_t r = mu.size();
  for (int s = 2; s <= top; ++s) {
    bool feasible = false;
    compositions(s, r + 1, [&](const std::vector<int>& parts) {
      if (feasible) return;
      Rational v = parts[0];
      for (std::size_t i = 0; i < r; ++i) v += parts[i + 1] * mu[i];
      feasible = std::find(mu.begin(), mu.end(), v) != mu.end();
    });
    if (feasible) out.degrees.push_back(s);
  }
  return out;
}

}  // namespace nfkit
