#include "nfkit/lp.hpp"

#include <optional>

#include "nfkit/error.hpp"

namespace nfkit {

namespace {

struct Tableau {
  std::vector<RatVector> t;  // constraint rows over all columns
  RatVector rhs;
  std::vector<std::size_t> basis;
  std::size_t ncols = 0;

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = t[r][c];
    for (auto& x : t[r]) x /= p;
    rhs[r] /= p;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || t[i][c] == 0) continue;
      const Rational f = t[i][c];
      for (std::size_t j = 0; j < ncols; ++j)
        if (t[r][j] != 0) t[i][j] -= f * t[r][j];
      rhs[i] -= f * rhs[r];
    }
    basis[r] = c;
  }

  Rational objective(const RatVector& w) const {
    Rational v = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) v += w[basis[i]] * rhs[i];
    return v;
  }
};

// Maximizes w over columns [0, usable); returns false when unbounded.
bool run_simplex(Tableau& tab, const RatVector& w, std::size_t usable) {
  for (;;) {
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j < usable && !enter; ++j) {
      Rational d = w[j];
      for (std::size_t i = 0; i < tab.basis.size(); ++i)
        if (tab.t[i][j] != 0) d -= w[tab.basis[i]] * tab.t[i][j];
      if (d > 0) enter = j;
    }
    if (!enter) return true;
    const std::size_t c = *enter;
    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t i = 0; i < tab.t.size(); ++i) {
      if (tab.t[i][c] <= 0) continue;
      Rational ratio = tab.rhs[i] / tab.t[i][c];
      if (!leave || ratio < best || (ratio == best && tab.basis[i] < tab.basis[*leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (!leave) return false;
    tab.pivot(*leave, c);
  }
}

}  // namespace

LpResult lp_max(const RatVector& c, const Matrix& a, const RatVector& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (c.size() != n || b.size() != m) throw Error(ErrorCode::DimensionMismatch, "lp_max dimensions");

  Tableau tab;
  tab.ncols = n + m;
  tab.t.assign(m, RatVector(n + m));
  tab.rhs = b;
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = flip ? Rational(-a(i, j)) : a(i, j);
    if (flip) tab.rhs[i] = -tab.rhs[i];
    tab.t[i][n + i] = 1;
    tab.basis[i] = n + i;
  }

  RatVector phase1(n + m);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  run_simplex(tab, phase1, n + m);
  LpResult res;
  if (tab.objective(phase1) != 0) {
    res.status = LpStatus::Infeasible;
    return res;
  }

  // Drive artificial variables out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < tab.t.size();) {
    if (tab.basis[i] < n) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n && !col; ++j)
      if (tab.t[i][j] != 0) col = j;
    if (col) {
      tab.pivot(i, *col);
      ++i;
    } else {
      tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
      tab.rhs.erase(tab.rhs.begin() + static_cast<std::ptrdiff_t>(i));
      tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  RatVector phase2(n + m);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  if (!run_simplex(tab, phase2, n)) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  res.status = LpStatus::Optimal;
  res.point.assign(n, Rational(0));
  for (std::size_t i = 0; i < tab.basis.size(); ++i) res.point[tab.basis[i]] = tab.rhs[i];
  res.value = 0;
  for (std::size_t j = 0; j < n; ++j) res.value += c[j] * res.point[j];
  return res;
}

}  // namespace nfkit
