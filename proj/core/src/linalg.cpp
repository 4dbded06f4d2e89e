#include "nfkit/linalg.hpp"

#include <utility>

#include "nfkit/error.hpp"

namespace nfkit {

namespace {

using IntRow = std::vector<Integer>;

struct Echelon {
  std::vector<IntRow> rows;  // first pivots.size() rows are the echelon rows
  std::vector<std::size_t> pivots;
  std::size_t cols = 0;
};

IntRow integer_row(const Matrix& m, std::size_t i) {
  Integer scale = 1;
  for (std::size_t j = 0; j < m.cols(); ++j)
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
  IntRow row(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const Rational& x = m(i, j);
    if (x == 0) continue;
    Integer f = scale / x.get_den();
    row[j] = x.get_num() * f;
  }
  return row;
}

// Fraction-free (Bareiss) forward elimination.
Echelon bareiss(const Matrix& m) {
  Echelon e;
  e.cols = m.cols();
  e.rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) e.rows.push_back(integer_row(m, i));
  std::size_t r = 0;
  Integer prev = 1;
  Integer t;
  for (std::size_t c = 0; c < e.cols && r < e.rows.size(); ++c) {
    std::size_t p = r;
    while (p < e.rows.size() && e.rows[p][c] == 0) ++p;
    if (p == e.rows.size()) continue;
    std::swap(e.rows[r], e.rows[p]);
    const IntRow& piv = e.rows[r];
    for (std::size_t i = r + 1; i < e.rows.size(); ++i) {
      IntRow& row = e.rows[i];
      const Integer lead = row[c];
      for (std::size_t j = c + 1; j < e.cols; ++j) {
        t = piv[c] * row[j];
        if (lead != 0) t -= lead * piv[j];
        mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = piv[c];
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

// Solves the echelon rows for the pivot unknowns given the free ones in x.
void back_substitute(const Echelon& e, RatVector& x, const IntRow* rhs) {
  for (std::size_t k = e.pivots.size(); k-- > 0;) {
    const std::size_t p = e.pivots[k];
    const IntRow& row = e.rows[k];
    Rational s = rhs ? Rational((*rhs)[k]) : Rational(0);
    for (std::size_t j = p + 1; j < x.size(); ++j)
      if (row[j] != 0 && x[j] != 0) s -= Rational(row[j]) * x[j];
    x[p] = s / Rational(row[p]);
  }
}

std::vector<RatVector> kernel_from(const Echelon& e, std::size_t ncols) {
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    RatVector x(ncols);
    x[f] = 1;
    back_substitute(e, x, nullptr);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace

std::vector<RatVector> mat_kernel(const Matrix& m) { return kernel_from(bareiss(m), m.cols()); }

std::size_t mat_rank(const Matrix& m) { return bareiss(m).pivots.size(); }

std::optional<AffineSolution> mat_solve(const Matrix& m, const RatVector& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length differs from row count");
  const std::size_t n = m.cols();
  Matrix aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  Echelon e = bareiss(aug);
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  IntRow rhs(e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) rhs[k] = e.rows[k][n];
  // Drop the augmented column so back-substitution sees only the unknowns.
  Echelon lhs = e;
  lhs.cols = n;
  for (auto& row : lhs.rows) row.resize(n);
  AffineSolution sol;
  sol.particular.assign(n, Rational(0));
  back_substitute(lhs, sol.particular, &rhs);
  sol.kernel = kernel_from(lhs, n);
  return sol;
}

bool in_span(const std::vector<RatVector>& basis, const RatVector& v) {
  if (basis.empty()) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
  Matrix m(v.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < v.size(); ++i) m(i, j) = basis[j][i];
  return mat_solve(m, v).has_value();
}

}  // namespace nfkit
