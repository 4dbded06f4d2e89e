#include "nfkit/diophantine.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "nfkit/error.hpp"

namespace nfkit {

IntMatrix integer_rows(const Matrix& m) {
  IntMatrix out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    RatVector row = m.row(i);
    Integer scale = lcm_of_denominators(row);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational v = row[j] * scale;
      if (!v.get_num().fits_slong_p()) throw Error(ErrorCode::InvalidInput, "coefficient too large for lattice search");
      out[i][j] = v.get_num().get_si();
    }
  }
  return out;
}

bool graded_less(const Exponents& a, const Exponents& b) {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

namespace {

std::vector<std::int64_t> image(const IntMatrix& a, const Exponents& p) {
  std::vector<std::int64_t> v(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) v[i] += a[i][j] * p[j];
  return v;
}

bool dominates(const Exponents& big, const Exponents& small) {
  for (std::size_t i = 0; i < big.size(); ++i)
    if (big[i] < small[i]) return false;
  return true;
}

}  // namespace

HilbertResult solve_hilbert_basis(const IntMatrix& a, std::size_t nvars, int degree_cap,
                                  const std::optional<Exponents>& upper) {
  for (const auto& row : a)
    if (row.size() != nvars) throw Error(ErrorCode::DimensionMismatch, "lattice system width");
  HilbertResult res;
  std::set<Exponents> frontier;
  for (std::size_t k = 0; k < nvars; ++k) {
    if (upper && (*upper)[k] < 1) continue;
    Exponents e(nvars, 0);
    e[k] = 1;
    frontier.insert(e);
  }
  int degree = 1;
  while (!frontier.empty()) {
    if (degree > degree_cap) {
      res.cap_reached = true;
      break;
    }
    std::vector<std::pair<Exponents, std::vector<std::int64_t>>> open;
    for (const auto& p : frontier) {
      auto v = image(a, p);
      if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; }))
        res.basis.push_back(p);
      else
        open.emplace_back(p, std::move(v));
    }
    std::set<Exponents> next;
    for (const auto& [p, v] : open) {
      for (std::size_t k = 0; k < nvars; ++k) {
        std::int64_t dot = 0;
        for (std::size_t i = 0; i < a.size(); ++i) dot += v[i] * a[i][k];
        if (dot >= 0) continue;
        Exponents c = p;
        ++c[k];
        if (upper && c[k] > (*upper)[k]) continue;
        bool dominated = false;
        for (const auto& b : res.basis)
          if (dominates(c, b)) {
            dominated = true;
            break;
          }
        if (!dominated) next.insert(std::move(c));
      }
    }
    frontier = std::move(next);
    ++degree;
  }
  // Solutions found at equal degree cannot dominate each other, but keep the
  // filter explicit.
  std::vector<Exponents> minimal;
  for (const auto& b : res.basis) {
    bool keep = true;
    for (const auto& other : res.basis)
      if (other != b && dominates(b, other)) keep = false;
    if (keep) minimal.push_back(b);
  }
  std::sort(minimal.begin(), minimal.end(), graded_less);
  res.basis = std::move(minimal);
  return res;
}

}  // namespace nfkit
