#include "nfkit/centralizer.hpp"

#include <map>
#include <stdexcept>

#include "linear_system.hpp"
#include "nfkit/error.hpp"
#include "nfkit/linalg.hpp"
#include "nfkit/resonance.hpp"
#include "nfkit/vectorfield.hpp"

namespace nfkit {

CommutantBasis linear_commutant(const EigenSpectrum& s) {
  const std::size_t n = s.n();
  const Matrix& nil = s.nilpotent();
  auto var = [n](std::size_t i, std::size_t j) { return i * n + j; };
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!s.same_eigenvalue(i, j)) {
        RatVector row(n * n);
        row[var(i, j)] = 1;
        rows.push_back(std::move(row));
      }
  if (s.has_nilpotent())
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        // (B N - N B)_{ij}
        RatVector row(n * n);
        for (std::size_t k = 0; k < n; ++k) {
          row[var(i, k)] += nil(k, j);
          row[var(k, j)] -= nil(i, k);
        }
        rows.push_back(std::move(row));
      }
  CommutantBasis out;
  for (const auto& v : mat_kernel(Matrix::from_rows(rows, n * n))) {
    Matrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = v[var(i, j)];
    out.basis.push_back(std::move(b));
  }
  out.dimension = out.basis.size();
  return out;
}

namespace {

PolyVectorField combine(const std::vector<PolyVectorField>& unknowns, const RatVector& coeffs, std::size_t n) {
  PolyVectorField g(n);
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    if (coeffs[u] != 0) g += unknowns[u] * coeffs[u];
  return g;
}

void fill_block_bounds(const EigenSpectrum& s, const ResonanceSet* rs, CentralizerBounds& b) {
  if (s.has_nilpotent() || !rs) return;
  std::vector<bool> seen(s.n(), false);
  std::size_t lower = 0;
  std::size_t upper = 0;
  for (std::size_t i = 0; i < s.n(); ++i) {
    if (seen[i]) continue;
    std::size_t size = 0;
    for (std::size_t j = i; j < s.n(); ++j)
      if (s.same_eigenvalue(i, j)) {
        seen[j] = true;
        ++size;
      }
    lower += size * size;
    upper += size * (size + rs->per_component[i].size());
  }
  b.block_lower = lower;
  b.block_upper = upper;
}

void check_resonant_image(const EigenSpectrum& s, const PolyVectorField& image) {
  for (std::size_t j = 0; j < image.n(); ++j)
    for (const auto& [m, c] : image[j].terms())
      if (!is_resonant(s, j, m)) throw std::logic_error("bracket left the resonant span");
}

}  // namespace

CentralizerResult centralizer_exact(const EigenSpectrum& s, const PolyVectorField& f) {
  if (!is_finite_linear_centralizer(s))
    throw Error(ErrorCode::InfiniteResonance, "exact centralizer needs a finite resonance set");
  require_pdnf(s, f);
  const ResonanceSet rs = resonance_set(s);
  // Resonant terms stop at the degree bound, so a truncation at or above it is complete.
  if (f.trunc() && *f.trunc() < *rs.degree_bound)
    throw Error(ErrorCode::TruncationTooLow, "field is truncated below the resonance degree bound");
  const PolyVectorField rem = split_semisimple(s, f).remainder.as_polynomial();
  const std::size_t n = s.n();

  const CommutantBasis comm = linear_commutant(s);
  std::vector<PolyVectorField> unknowns;
  for (const auto& b : comm.basis) unknowns.push_back(PolyVectorField::linear(b));
  for (const auto& vm : resonant_vector_monomials(s, 2, *rs.degree_bound))
    unknowns.push_back(PolyVectorField::unit(n, vm.j, vm.m));

  detail::EquationAssembler eqs(unknowns.size());
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    PolyVectorField image = lie_bracket(unknowns[u], rem);
    check_resonant_image(s, image);
    eqs.add_field(u, image);
  }

  CentralizerResult res;
  res.exact = true;
  for (const auto& v : mat_kernel(eqs.matrix())) res.basis.push_back(combine(unknowns, v, n));
  res.dimension = res.basis.size();
  res.bounds.d = comm.dimension;
  res.bounds.r = rs.count;
  fill_block_bounds(s, &rs, res.bounds);
  if (res.dimension < res.bounds.d || res.dimension > res.bounds.d + res.bounds.r)
    throw std::logic_error("centralizer dimension outside d <= dim <= d + r");
  if (res.bounds.block_lower && (res.dimension < *res.bounds.block_lower || res.dimension > *res.bounds.block_upper))
    throw std::logic_error("centralizer dimension outside the block bounds");
  return res;
}

CentralizerResult centralizer_truncated(const EigenSpectrum& s, const PolyVectorField& f, int D) {
  if (D < 1) throw Error(ErrorCode::InvalidInput, "truncation degree must be positive");
  require_pdnf(s, f);
  if (f.trunc() && *f.trunc() < D)
    throw Error(ErrorCode::TruncationTooLow, "field is truncated below the requested degree");
  const PolyVectorField rem = split_semisimple(s, f).remainder.truncated(D);
  const std::size_t n = s.n();

  const auto monos = resonant_vector_monomials(s, 1, D);
  std::vector<PolyVectorField> unknowns;
  std::vector<int> degrees;
  for (const auto& vm : monos) {
    unknowns.push_back(PolyVectorField::unit(n, vm.j, vm.m));
    degrees.push_back(degree_of(vm.m));
  }
  detail::EquationAssembler eqs(unknowns.size());
  for (std::size_t u = 0; u < unknowns.size(); ++u) eqs.add_field(u, lie_bracket(unknowns[u], rem).truncated(D));
  const Matrix m = eqs.matrix();

  CentralizerResult res;
  res.exact = false;
  res.truncation = D;
  for (const auto& v : mat_kernel(m)) res.basis.push_back(combine(unknowns, v, n).with_trunc(D));
  res.dimension = res.basis.size();

  // dim K_{>=k}: kernel restricted to unknowns of degree >= k.
  auto tail_dim = [&](int k) -> std::size_t {
    std::size_t first = 0;
    while (first < degrees.size() && degrees[first] < k) ++first;
    const std::size_t cols = degrees.size() - first;
    if (cols == 0) return 0;
    Matrix sub(m.rows(), cols);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) sub(i, j) = m(i, first + j);
    return cols - mat_rank(sub);
  };
  res.graded.assign(static_cast<std::size_t>(D) + 1, 0);
  std::size_t above = 0;
  for (int k = D; k >= 1; --k) {
    const std::size_t here = tail_dim(k);
    res.graded[static_cast<std::size_t>(k)] = here - above;
    above = here;
  }
  res.bounds.d = linear_commutant(s).dimension;
  res.bounds.r = 0;
  for (int d : degrees)
    if (d >= 2) ++res.bounds.r;
  return res;
}

bool commutes_with(const EigenSpectrum& s, const PolyVectorField& f, const PolyVectorField& g, std::optional<int> D) {
  // A centralizer element necessarily commutes with A_s, so both parts must vanish.
  for (const auto& part : semisimple_bracket(s, g))
    if (!part.truncated(D).is_zero()) return false;
  const PolyVectorField rem = split_semisimple(s, f).remainder;
  return lie_bracket(g, rem).truncated(D).is_zero();
}

namespace {

// Flattens fields (and optional series) over the union of their keys.
struct Flattener {
  std::map<std::pair<std::size_t, Exponents>, std::size_t> index;
  void collect(const PolyVectorField& f, std::size_t offset = 0) {
    for (std::size_t j = 0; j < f.n(); ++j)
      for (const auto& [m, c] : f[j].terms()) index.try_emplace({offset + j, m}, 0);
  }
  void collect(const PolySeries& p, std::size_t slot) {
    for (const auto& [m, c] : p.terms()) index.try_emplace({slot, m}, 0);
  }
  void finalize() {
    std::size_t i = 0;
    for (auto& [k, v] : index) v = i++;
  }
  RatVector flatten(const PolyVectorField& f, const PolySeries* p = nullptr) const {
    RatVector v(index.size());
    for (std::size_t j = 0; j < f.n(); ++j)
      for (const auto& [m, c] : f[j].terms()) v[index.at({j, m})] = c;
    if (p)
      for (const auto& [m, c] : p->terms()) v[index.at({f.n(), m})] = c;
    return v;
  }
};

}  // namespace

bool in_solution_span(const CentralizerResult& res, const PolyVectorField& g) {
  Flattener fl;
  for (const auto& b : res.basis) fl.collect(b);
  fl.collect(g);
  fl.finalize();
  std::vector<RatVector> basis;
  for (const auto& b : res.basis) basis.push_back(fl.flatten(b));
  return in_span(basis, fl.flatten(g));
}

bool in_normalizer_span(const NormalizerResult& res, const NormalizerPair& pair) {
  Flattener fl;
  auto add = [&](const NormalizerPair& p) {
    fl.collect(p.g);
    fl.collect(p.lambda, p.g.n());
  };
  for (const auto& b : res.basis) add(b);
  add(pair);
  fl.finalize();
  std::vector<RatVector> basis;
  for (const auto& b : res.basis) basis.push_back(fl.flatten(b.g, &b.lambda));
  return in_span(basis, fl.flatten(pair.g, &pair.lambda));
}

}  // namespace nfkit
