#include "nfkit/invariants.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "linear_system.hpp"
#include "nfkit/diophantine.hpp"
#include "nfkit/error.hpp"
#include "nfkit/linalg.hpp"
#include "nfkit/lp.hpp"
#include "nfkit/vectorfield.hpp"

namespace nfkit {

InvariantAlgebra invariant_generators(const EigenSpectrum& s, int degree_cap) {
  InvariantAlgebra inv;
  inv.n = s.n();
  HilbertBasis hb = hilbert_basis(s, degree_cap);
  inv.generators = std::move(hb.generators);
  inv.cap_reached = hb.cap_reached;
  std::vector<RatVector> rows;
  for (const auto& g : inv.generators) rows.emplace_back(g.begin(), g.end());
  inv.independent = mat_rank(Matrix::from_rows(rows, s.n())) == inv.generators.size();
  return inv;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

struct Search {
  Verdict found = Verdict::Unknown;  // Yes: a solution exists; No: none exists
  std::optional<Exponents> witness;
  bool complete = false;
};

std::optional<Exponents> enumerate_excluding(const EigenSpectrum& s, std::size_t j, const RatVector& target,
                                             int max_degree) {
  for (int d = 0; d <= max_degree; ++d)
    for (auto& m : multiindices_with_pairing(s, d, target))
      if (m[j] == 0) return m;
  return std::nullopt;
}

// Looks for m >= 0 with m_j = 0 and <m, lambda> = target.
Search search_excluding(const EigenSpectrum& s, std::size_t j, const RatVector& target, int search_bound,
                        int degree_cap) {
  const std::size_t n = s.n();
  const std::size_t q = s.q();
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < n; ++i)
    if (i != j) vars.push_back(i);

  Matrix a(q, vars.size());
  for (std::size_t k = 0; k < q; ++k)
    for (std::size_t c = 0; c < vars.size(); ++c) a(k, c) = s.lambda()(vars[c], k);
  const LpResult lp = lp_max(RatVector(vars.size(), Rational(1)), a, target);

  Search out;
  if (lp.status == LpStatus::Infeasible) {
    out.found = Verdict::No;
    out.complete = true;
    return out;
  }
  if (lp.status == LpStatus::Optimal) {
    // Bounded polyhedron: every solution has |m| <= the LP optimum.
    out.complete = true;
    out.witness = enumerate_excluding(s, j, target, static_cast<int>(floor_of(lp.value).get_num().get_si()));
    out.found = out.witness ? Verdict::Yes : Verdict::No;
    return out;
  }

  // Unbounded: minimal solutions are the t = 1 elements of the Hilbert basis of
  // {(m, t) : Lambda^T m = t target, t <= 1}.
  Matrix ext(q, vars.size() + 1);
  for (std::size_t k = 0; k < q; ++k) {
    for (std::size_t c = 0; c < vars.size(); ++c) ext(k, c) = a(k, c);
    ext(k, vars.size()) = -target[k];
  }
  Exponents upper(vars.size() + 1, INT_MAX);
  upper.back() = 1;
  const HilbertResult hr = solve_hilbert_basis(integer_rows(ext), vars.size() + 1, degree_cap, upper);
  for (const auto& h : hr.basis) {
    if (h.back() != 1) continue;
    Exponents m(n, 0);
    for (std::size_t c = 0; c < vars.size(); ++c) m[vars[c]] = h[c];
    out.found = Verdict::Yes;
    out.witness = m;
    out.complete = true;
    return out;
  }
  if (!hr.cap_reached) {
    out.found = Verdict::No;
    out.complete = true;
    return out;
  }
  out.witness = enumerate_excluding(s, j, target, search_bound);
  out.found = out.witness ? Verdict::Yes : Verdict::Unknown;
  out.complete = out.witness.has_value();
  return out;
}

// Runs the search for each component; the condition holds when no component has a solution.
ModuleCheck combine_searches(const EigenSpectrum& s, const std::vector<RatVector>& targets, int search_bound,
                             int degree_cap) {
  ModuleCheck out;
  bool unknown = false;
  for (std::size_t j = 0; j < s.n(); ++j) {
    Search r = search_excluding(s, j, targets[j], search_bound, degree_cap);
    if (r.found == Verdict::Yes) {
      out.verdict = Verdict::No;
      out.component = j;
      out.witness = r.witness;
      out.complete = true;
      return out;
    }
    if (r.found == Verdict::Unknown) unknown = true;
  }
  out.verdict = unknown ? Verdict::Unknown : Verdict::Yes;
  out.complete = !unknown;
  return out;
}

}  // namespace

ModuleCheck check_free_module(const EigenSpectrum& s, int search_bound, int degree_cap) {
  if (s.has_zero_eigenvalue()) throw Error(ErrorCode::ZeroEigenvalue, "free module check needs nonzero eigenvalues");
  std::vector<RatVector> targets;
  for (std::size_t j = 0; j < s.n(); ++j) targets.push_back(s.eigenvalue(j));
  return combine_searches(s, targets, search_bound, degree_cap);
}

OneDivCheck check_onediv(const EigenSpectrum& s, int search_bound, int degree_cap) {
  OneDivCheck out;
  const RatVector trace = s.trace();
  out.divergence_nonzero = std::any_of(trace.begin(), trace.end(), [](const Rational& x) { return x != 0; });
  if (!out.divergence_nonzero) {
    // m = 0 already satisfies <m, lambda> = sum lambda_i.
    out.check.verdict = Verdict::No;
    out.check.component = 0;
    out.check.witness = Exponents(s.n(), 0);
    out.check.complete = true;
    return out;
  }
  out.check = combine_searches(s, std::vector<RatVector>(s.n(), trace), search_bound, degree_cap);
  return out;
}

std::optional<Exponents> rewrite_in_generators(const InvariantAlgebra& inv, const Exponents& e) {
  const std::size_t r = inv.r();
  const std::size_t n = e.size();
  if (n != inv.n) throw Error(ErrorCode::DimensionMismatch, "exponent length differs from the algebra");
  // Columns k_1..k_r, t with sum k_i M_i = t e and t <= 1.
  IntMatrix a(n, std::vector<std::int64_t>(r + 1, 0));
  Exponents upper(r + 1, INT_MAX);
  upper.back() = 1;
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t i = 0; i < r; ++i) {
      a[l][i] = inv.generators[i][l];
      if (inv.generators[i][l] > 0) upper[i] = std::min(upper[i], e[l] / inv.generators[i][l]);
    }
    a[l][r] = -e[l];
  }
  const int cap = degree_of(e) + 1;  // each generator has degree >= 1
  const HilbertResult hr = solve_hilbert_basis(a, r + 1, cap, upper);
  std::optional<Exponents> found;
  for (const auto& h : hr.basis) {
    if (h.back() != 1) continue;
    if (found) {
      if (inv.independent) throw std::logic_error("independent generators gave two rewritings");
      break;
    }
    found = Exponents(h.begin(), h.end() - 1);
  }
  return found;
}

std::vector<PolySeries> decompose_eta(const EigenSpectrum& s, const InvariantAlgebra& inv, const PolyVectorField& f) {
  if (inv.n != s.n()) throw Error(ErrorCode::DimensionMismatch, "invariant algebra and spectrum dimensions differ");
  require_pdnf(s, f);
  if (!inv.independent)
    throw Error(ErrorCode::UnsupportedSpectrum, "rewriting needs algebraically independent generators");
  const std::size_t n = s.n();
  const std::size_t r = inv.r();
  int top = 1;
  for (const auto& g : inv.generators) top = std::max(top, degree_of(g));
  // y^k is fully determined once its largest possible x-degree stays below the field's budget.
  Trunc t;
  if (f.trunc()) t = (*f.trunc() - 1) / top;

  const PolyVectorField rem = split_semisimple(s, f).remainder;
  std::vector<PolySeries> eta(n, PolySeries(r, t));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [m, c] : rem[j].terms()) {
      if (m[j] == 0)
        throw Error(ErrorCode::NotFreeModuleShape,
                    "term of component " + std::to_string(j + 1) + " is not divisible by x_" + std::to_string(j + 1));
      Exponents e = m;
      --e[j];
      auto k = rewrite_in_generators(inv, e);
      if (!k) throw Error(ErrorCode::RewriteFailure, "monomial is not a product of the invariant generators");
      eta[j].add_term(*k, c);
    }
  return eta;
}

ReducedField reduce_vectorfield(const EigenSpectrum& s, const InvariantAlgebra& inv, const PolyVectorField& f) {
  std::vector<PolySeries> eta = decompose_eta(s, inv, f);
  const std::size_t n = s.n();
  const std::size_t r = inv.r();
  const Trunc teta = eta.empty() ? Trunc{} : eta[0].trunc();
  if (r > 0 && teta && *teta < 1)
    throw Error(ErrorCode::TruncationTooLow, "field truncation leaves no quadratic part in the reduced field");

  ReducedField red;
  red.r = r;
  red.nu = Matrix(r, r);
  std::vector<PolySeries> comps(r, PolySeries(r, lower_trunc(teta, -1)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int mij = inv.generators[i][j];
      if (mij == 0) continue;
      for (const auto& [k, c] : eta[j].terms()) {
        Exponents e = k;
        ++e[i];
        comps[i].add_term(e, c * mij);
        if (degree_of(k) == 1)
          for (std::size_t l = 0; l < r; ++l)
            if (k[l] == 1) red.nu(i, l) += c * mij;
      }
    }
  red.field = r > 0 ? PolyVectorField::from_components(comps) : PolyVectorField(0, teta);
  red.eta = std::move(eta);

  // D psi . f == fhat(psi) within both budgets.
  const PolyVectorField rem = split_semisimple(s, f).remainder;
  for (std::size_t i = 0; i < r; ++i) {
    PolySeries lhs = lie_derivative(rem, PolySeries::monomial(inv.generators[i]));
    PolySeries rhs = substitute_monomials(red.field[i], inv.generators, n);
    const Trunc t = min_trunc(lhs.trunc(), rhs.trunc());
    if (!same_terms(lhs.truncated(t), rhs.truncated(t)))
      throw std::logic_error("reduced field does not intertwine with the invariant map");
  }
  return red;
}

std::size_t quadratic_commutator_kernel_dim(const Matrix& nu) {
  const std::size_t r = nu.rows();
  PolyVectorField f2(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Exponents e(r, 0);
      ++e[i];
      ++e[j];
      f2.add_term(i, e, nu(i, j));
    }
  std::vector<PolyVectorField> unknowns;
  for (std::size_t j = 0; j < r; ++j)
    for (const auto& m : monomials_of_degree(r, 2)) unknowns.push_back(PolyVectorField::unit(r, j, m));
  detail::EquationAssembler eqs(unknowns.size());
  for (std::size_t u = 0; u < unknowns.size(); ++u) eqs.add_field(u, lie_bracket(unknowns[u], f2));
  return unknowns.size() - mat_rank(eqs.matrix());
}

TrivialityCertificate triviality_certificate(const ReducedField& red, int cap) {
  TrivialityCertificate out;
  if (red.r == 0) {
    out.reasons.push_back("reduced field has no variables");
    return out;
  }
  if (red.nu(0, 0) == 0) {
    out.reasons.push_back("nu_11 is zero, no fixed point on the first axis");
    return out;
  }
  out.mu.push_back(2);
  for (std::size_t j = 1; j < red.r; ++j) out.mu.push_back(red.nu(j, 0) / red.nu(0, 0));
  out.commuting = commuting_degree_ladder(out.mu, cap);
  out.first_integrals = semiinvariant_degree_ladder(out.mu, 0, cap);
  out.quadratic_kernel_dim = quadratic_commutator_kernel_dim(red.nu);

  const bool ladder_ok = out.commuting->complete && out.commuting->degrees == std::vector<int>{2};
  if (!out.commuting->complete) out.reasons.push_back("commuting degree ladder is only complete up to the cap");
  if (out.commuting->degrees != std::vector<int>{2}) out.reasons.push_back("commuting degree ladder admits s > 2");
  if (*out.quadratic_kernel_dim != 1) out.reasons.push_back("quadratic commutator kernel is not spanned by f2");
  out.certified = ladder_ok && *out.quadratic_kernel_dim == 1;
  if (out.certified) out.reasons.push_back("only s = 2 is feasible and the quadratic kernel is one-dimensional");
  return out;
}

}  // namespace nfkit
