#include "nfkit/spectrum.hpp"

#include <numeric>

#include "nfkit/error.hpp"
#include "nfkit/linalg.hpp"
#include "nfkit/lp.hpp"

namespace nfkit {

EigenSpectrum build_spectrum(std::size_t n, std::size_t q, const std::vector<RatVector>& rows,
                             const std::vector<NilpotentEntry>& nilpotent) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "spectrum dimension must be positive");
  if (rows.size() != n) throw Error(ErrorCode::DimensionMismatch, "lambda must have n rows");
  EigenSpectrum s;
  s.lambda_ = Matrix::from_rows(rows, q);
  if (mat_rank(s.lambda_) != q) throw Error(ErrorCode::RankMismatch, "rank(lambda) differs from q");
  s.nilpotent_ = Matrix(n, n);
  for (const auto& e : nilpotent) {
    if (e.i >= n || e.j >= n) throw Error(ErrorCode::DimensionMismatch, "nilpotent index out of range");
    if (e.i >= e.j) throw Error(ErrorCode::InvalidInput, "nilpotent part must be strictly upper triangular");
    if (e.value == 0) continue;
    if (!s.same_eigenvalue(e.i, e.j))
      throw Error(ErrorCode::NilpotentViolatesCommutation,
                  "nilpotent entry links distinct eigenvalues " + std::to_string(e.i + 1) + "," +
                      std::to_string(e.j + 1));
    s.nilpotent_(e.i, e.j) = e.value;
  }
  return s;
}

bool EigenSpectrum::same_eigenvalue(std::size_t i, std::size_t j) const {
  for (std::size_t k = 0; k < q(); ++k)
    if (lambda_(i, k) != lambda_(j, k)) return false;
  return true;
}

bool EigenSpectrum::has_zero_eigenvalue() const {
  for (std::size_t i = 0; i < n(); ++i) {
    bool zero = true;
    for (std::size_t k = 0; k < q(); ++k)
      if (lambda_(i, k) != 0) zero = false;
    if (zero) return true;
  }
  return false;
}

RatVector EigenSpectrum::pairing(const Exponents& m) const {
  RatVector v(q());
  for (std::size_t i = 0; i < n(); ++i) {
    if (m[i] == 0) continue;
    for (std::size_t k = 0; k < q(); ++k) v[k] += m[i] * lambda_(i, k);
  }
  return v;
}

RatVector EigenSpectrum::trace() const { return pairing(Exponents(n(), 1)); }

Rational EigenSpectrum::rational_eigenvalue(std::size_t i) const {
  if (!rational_semisimple()) throw Error(ErrorCode::UnsupportedSpectrum, "eigenvalues are not rational (q > 1)");
  return q() == 0 ? Rational(0) : lambda_(i, 0);
}

HilbertBasis hilbert_basis(const EigenSpectrum& s, int degree_cap) {
  auto res = solve_hilbert_basis(integer_rows(s.lambda().transpose()), s.n(), degree_cap);
  return {std::move(res.basis), res.cap_reached};
}

namespace {

// Is there d >= 0 with Lambda^T d = 0 and d_i >= 1 for every i in `forced`
// (and |d| = 1 when `forced` is empty)?
bool relation_exists(const EigenSpectrum& s, const std::vector<std::size_t>& forced) {
  const std::size_t n = s.n();
  const std::size_t q = s.q();
  // Substitute d = d' + sum_{i in forced} e_i so that d' >= 0.
  Exponents shift(n, 0);
  for (auto i : forced) shift[i] = 1;
  RatVector offset = s.pairing(shift);
  const bool normalize = forced.empty();
  Matrix a(q + (normalize ? 1 : 0), n);
  RatVector b(a.rows());
  for (std::size_t k = 0; k < q; ++k) {
    for (std::size_t i = 0; i < n; ++i) a(k, i) = s.lambda()(i, k);
    b[k] = -offset[k];
  }
  if (normalize) {
    for (std::size_t i = 0; i < n; ++i) a(q, i) = 1;
    b[q] = 1;
  }
  return lp_max(RatVector(n), a, b).status != LpStatus::Infeasible;
}

}  // namespace

bool is_finite_linear_centralizer(const EigenSpectrum& s) { return !relation_exists(s, {}); }

bool has_positive_relation(const EigenSpectrum& s) {
  std::vector<std::size_t> all(s.n());
  std::iota(all.begin(), all.end(), 0);
  return relation_exists(s, all);
}

UWDecomposition uw_decomposition(const EigenSpectrum& s) {
  UWDecomposition out;
  for (std::size_t i = 0; i < s.n(); ++i) (relation_exists(s, {i}) ? out.u : out.w).push_back(i);
  return out;
}

std::vector<std::vector<Integer>> c_matrix_basis(const EigenSpectrum& s, bool gcd_normalize) {
  std::vector<std::vector<Integer>> out;
  for (std::size_t k = 0; k < s.q(); ++k) {
    RatVector col = s.lambda().col(k);
    const Integer scale = lcm_of_denominators(col);
    for (auto& x : col) x *= scale;
    if (gcd_normalize) {
      const Integer g = gcd_of_numerators(col);
      if (g > 1)
        for (auto& x : col) x /= g;
    }
    std::vector<Integer> row;
    for (const auto& x : col) row.push_back(x.get_num());
    out.push_back(std::move(row));
  }
  return out;
}

Dim3Verdict classify_dim3(long d1, long d2, long d3) {
  if (d1 <= 0 || d2 <= 0 || d3 <= 0) throw Error(ErrorCode::InvalidInput, "classify_dim3 needs positive integers");
  if (std::gcd(std::gcd(d1, d2), d3) != 1) throw Error(ErrorCode::GcdNotOne, "gcd(d1,d2,d3) must be 1");
  Dim3Verdict v;
  for (long l1 = 2; l1 * 2 <= d3; ++l1) {
    if (d3 % l1 != 0) continue;
    const long l2 = d3 / l1;
    if (l2 < 2 || std::gcd(l1, l2) != 1) continue;
    if (d1 % l2 == 0 && d2 % l1 == 0) {
      v.holds = true;
      v.l1 = l1;
      v.l2 = l2;
      return v;
    }
  }
  return v;
}

}  // namespace nfkit
