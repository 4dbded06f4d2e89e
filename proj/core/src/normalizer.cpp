#include <map>

#include "linear_system.hpp"
#include "nfkit/centralizer.hpp"
#include "nfkit/error.hpp"
#include "nfkit/linalg.hpp"
#include "nfkit/vectorfield.hpp"

namespace nfkit {

namespace {

// A_s x + remainder up to degree D, as an exact polynomial.
PolyVectorField rational_field_upto(const EigenSpectrum& s, const PolyVectorField& f, int D) {
  if (D < 1) throw Error(ErrorCode::InvalidInput, "truncation degree must be positive");
  require_pdnf(s, f);
  if (f.trunc() && *f.trunc() < D)
    throw Error(ErrorCode::TruncationTooLow, "field is truncated below the requested degree");
  return full_rational_field(s, f).truncated(D).as_polynomial();
}

bool has_constant_term(const PolyVectorField& g) {
  for (const auto& c : g.components())
    if (c.order() == 0) return true;
  return false;
}

}  // namespace

NormalizerResult normalizer_truncated(const EigenSpectrum& s, const PolyVectorField& f, int D) {
  const PolyVectorField F = rational_field_upto(s, f, D);
  const std::size_t n = s.n();

  std::vector<PolyVectorField> g_unknowns;
  std::vector<Exponents> lambda_unknowns;
  for (int d = 1; d <= D; ++d)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& m : monomials_of_degree(n, d)) g_unknowns.push_back(PolyVectorField::unit(n, j, m));
  for (int d = 0; d < D; ++d)
    for (const auto& m : monomials_of_degree(n, d)) lambda_unknowns.push_back(m);

  const std::size_t ng = g_unknowns.size();
  detail::EquationAssembler eqs(ng + lambda_unknowns.size());
  for (std::size_t u = 0; u < ng; ++u) eqs.add_field(u, lie_bracket(g_unknowns[u], F).truncated(D));
  for (std::size_t u = 0; u < lambda_unknowns.size(); ++u) {
    const PolySeries mono = PolySeries::monomial(lambda_unknowns[u], -1);
    eqs.add_field(ng + u, (mono * F).truncated(D));
  }

  NormalizerResult res;
  res.truncation = D;
  for (const auto& v : mat_kernel(eqs.matrix())) {
    NormalizerPair p{PolyVectorField(n, D), PolySeries(n, D - 1)};
    for (std::size_t u = 0; u < ng; ++u)
      if (v[u] != 0) p.g += g_unknowns[u] * v[u];
    for (std::size_t u = 0; u < lambda_unknowns.size(); ++u) p.lambda.add_term(lambda_unknowns[u], v[ng + u]);
    res.basis.push_back(std::move(p));
  }
  res.dimension = res.basis.size();
  return res;
}

bool normalizer_relation_holds(const EigenSpectrum& s, const PolyVectorField& f, const NormalizerPair& pair, int D) {
  const PolyVectorField F = rational_field_upto(s, f, D);
  if (has_constant_term(pair.g)) throw Error(ErrorCode::InvalidInput, "normalizer field must vanish at the origin");
  if (pair.g.trunc() && *pair.g.trunc() < D)
    throw Error(ErrorCode::TruncationTooLow, "normalizer field is truncated below the requested degree");
  if (pair.lambda.trunc() && *pair.lambda.trunc() < D - 1)
    throw Error(ErrorCode::TruncationTooLow, "cofactor is truncated below the requested degree");
  const PolyVectorField g = pair.g.truncated(D).as_polynomial();
  const PolySeries lam = pair.lambda.truncated(D - 1).as_polynomial();
  return (lie_bracket(g, F) - lam * F).truncated(D).is_zero();
}

NormalizerReduction normalizer_reduce(const EigenSpectrum& s, const PolyVectorField& f, const PolyVectorField& g,
                                      const PolySeries& lambda, int D) {
  if (s.q() == 0 || s.lambda().is_zero()) throw Error(ErrorCode::ZeroSemisimplePart, "A_s must be nonzero");
  if (!normalizer_relation_holds(s, f, {g, lambda}, D))
    throw Error(ErrorCode::NotNormalizerPair, "[g, f] - lambda f does not vanish up to the truncation degree");
  const std::size_t n = s.n();
  const PolyVectorField F = rational_field_upto(s, f, D);
  std::vector<PolyVectorField> parts;  // parts[j] = homogeneous degree j
  for (int j = 0; j <= D; ++j) parts.push_back(F.homogeneous_part(j));
  const PolyVectorField nil = PolyVectorField::linear(s.nilpotent());

  std::vector<PolySeries> beta(static_cast<std::size_t>(D), PolySeries(n));
  std::vector<PolySeries> alpha(static_cast<std::size_t>(D), PolySeries(n));
  for (int k = 0; k < D; ++k) {
    PolySeries r = lambda.as_polynomial().homogeneous_part(k);
    for (int j = 2; j <= k + 1 && j <= D; ++j) r += lie_derivative(parts[j], beta[k - j + 1]);

    // Group by the X_{A_s} eigenvalue <m, lambda>.
    std::map<Rational, PolySeries> by_value;
    for (const auto& [m, c] : r.terms()) {
      Rational value = 0;
      for (std::size_t i = 0; i < n; ++i) value += s.rational_eigenvalue(i) * m[i];
      by_value.try_emplace(value, PolySeries(n)).first->second.add_term(m, c);
    }
    for (auto& [c, rc] : by_value) {
      if (c == 0) {
        alpha[k] = rc;
        continue;
      }
      // (c + N)^{-1} applied to -rc, with N = X_{A_n} nilpotent on this degree.
      PolySeries term = -rc;
      Rational scale = 1 / c;
      int sign = 1;
      while (!term.is_zero()) {
        beta[k] += term * (scale * sign);
        term = lie_derivative(nil, term).as_polynomial();
        scale /= c;
        sign = -sign;
      }
    }
  }
  if (!alpha[0].is_zero()) throw Error(ErrorCode::NotNormalizerPair, "cofactor has a nonzero constant term");

  NormalizerReduction out{PolySeries(n, D - 1), PolySeries(n, D - 1), false};
  for (int k = 0; k < D; ++k) {
    out.beta += beta[k];
    out.alpha += alpha[k];
  }
  const PolyVectorField h = (g.truncated(D).as_polynomial() - out.beta.as_polynomial() * F).truncated(D);
  out.semisimple_commutes = true;
  for (const auto& part : semisimple_bracket(s, h))
    if (!part.is_zero()) out.semisimple_commutes = false;
  return out;
}

}  // namespace nfkit
