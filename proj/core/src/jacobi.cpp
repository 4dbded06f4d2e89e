#include "nfkit/jacobi.hpp"

#include <algorithm>
#include <stdexcept>

#include "linear_system.hpp"
#include "nfkit/error.hpp"
#include "nfkit/linalg.hpp"
#include "nfkit/vectorfield.hpp"

namespace nfkit {

std::vector<Exponents> multiplier_support(const EigenSpectrum& s, int d) {
  return multiindices_with_pairing(s, d, s.trace());
}

bool divergence_integral_check(const EigenSpectrum& s, const PolyVectorField& f) {
  require_pdnf(s, f);
  return in_kernel_of_semisimple(s, spectral_divergence(s, f).rest);
}

bool MultiplierResidual::vanishes(Trunc upto) const {
  if (upto && rest.trunc() && *upto > *rest.trunc())
    throw Error(ErrorCode::TruncationTooLow, "residual is only known up to degree " + std::to_string(*rest.trunc()));
  for (const auto& p : semisimple)
    if (!p.truncated(upto).is_zero()) return false;
  return rest.truncated(upto).is_zero();
}

MultiplierResidual multiplier_residual(const EigenSpectrum& s, const PolyVectorField& f, const PolySeries& phi) {
  if (phi.nvars() != s.n()) throw Error(ErrorCode::DimensionMismatch, "multiplier and spectrum dimensions differ");
  const PolyVectorField rem = split_semisimple(s, f).remainder;
  const PolyVectorField r = rem.as_polynomial();
  const PolySeries p = phi.as_polynomial();

  MultiplierResidual out;
  const RatVector trace = s.trace();
  out.semisimple.assign(s.q(), PolySeries(s.n(), phi.trunc()));
  for (const auto& [m, c] : phi.terms()) {
    const RatVector w = s.pairing(m);
    for (std::size_t k = 0; k < s.q(); ++k) out.semisimple[k].add_term(m, c * (w[k] - trace[k]));
  }

  out.rest = lie_derivative(r, p) - divergence(r) * p;
  if (auto ord = phi.order()) {
    // X_{A_n} keeps degrees, so phi's budget only grows by one without a nilpotent part.
    Trunc budget = s.has_nilpotent() ? phi.trunc() : lower_trunc(phi.trunc(), -1);
    if (f.trunc()) budget = min_trunc(budget, *f.trunc() + *ord - 1);
    out.rest = out.rest.with_trunc(budget);
  }
  return out;
}

bool is_multiplier(const EigenSpectrum& s, const PolyVectorField& f, const PolySeries& phi, Trunc upto) {
  MultiplierResidual res = multiplier_residual(s, f, phi);
  return res.vanishes(upto ? upto : res.rest.trunc());
}

std::optional<SemiInvariantCertificate> semiinvariant_certificate(const EigenSpectrum& s, const PolyVectorField& f,
                                                                  int cap) {
  if (s.has_nilpotent()) return std::nullopt;
  const std::size_t n = s.n();
  const PolyVectorField f2 = split_semisimple(s, f).remainder.homogeneous_part(2);
  auto sum_exp = [n](std::size_t a, std::size_t b) {
    Exponents e(n, 0);
    ++e[a];
    ++e[b];
    return e;
  };
  for (std::size_t k = 0; k < n; ++k) {
    bool eigen = true;
    for (std::size_t i = 0; i < n && eigen; ++i)
      if (i != k && f2[i].coeff(sum_exp(k, k)) != 0) eigen = false;
    const Rational kappa = f2[k].coeff(sum_exp(k, k));
    if (!eigen || kappa == 0) continue;
    // Jacobian of f2 at c = e_k / kappa.
    Matrix jac(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) jac(i, l) = f2[i].coeff(sum_exp(l, k)) * (l == k ? 2 : 1) / kappa;
    bool upper = true;
    bool lower = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (i > l && jac(i, l) != 0) upper = false;
        if (i < l && jac(i, l) != 0) lower = false;
      }
    if (!upper && !lower) continue;
    SemiInvariantCertificate cert;
    cert.axis = k;
    cert.kappa = kappa;
    cert.cofactor = 0;
    for (std::size_t i = 0; i < n; ++i) {
      cert.mu.push_back(jac(i, i));
      cert.cofactor += jac(i, i);
    }
    cert.ladder = semiinvariant_degree_ladder(cert.mu, cert.cofactor, cap);
    return cert;
  }
  return std::nullopt;
}

MultiplierLadder solve_multiplier(const EigenSpectrum& s, const PolyVectorField& f, int r_min, int r_max, int D) {
  if (r_min < 0 || r_min > r_max || r_max > D)
    throw Error(ErrorCode::InvalidInput, "need 0 <= r-min <= r-max <= truncation degree");
  require_pdnf(s, f);
  if (f.trunc() && *f.trunc() + r_min - 2 < D)
    throw Error(ErrorCode::TruncationTooLow, "field truncation is too low for the requested multiplier degree");
  const std::size_t n = s.n();
  const PolyVectorField rem = split_semisimple(s, f).remainder.as_polynomial();
  const int aux = s.has_nilpotent() ? 1 : 0;

  std::vector<std::vector<Exponents>> support(static_cast<std::size_t>(D + aux) + 1);
  for (int d = r_min; d <= D + aux; ++d) support[static_cast<std::size_t>(d)] = multiplier_support(s, d);

  MultiplierLadder out;
  out.D = D;
  out.support_note = "phi_d is supported on m with |m| = d and <m, lambda> = sum of the eigenvalues";
  out.semiinvariant = semiinvariant_certificate(s, f, r_max);

  for (int r = r_min; r <= r_max; ++r) {
    const PolyVectorField rt = rem.truncated(D - r + 2);
    const PolySeries div = divergence(rt);
    auto image = [&](const Exponents& m) {
      const PolySeries mono = PolySeries::monomial(m);
      return lie_derivative(rt, mono) - div * mono;
    };

    struct Column {
      int degree;
      Exponents m;
      PolySeries img;
    };
    std::vector<Column> all;  // higher degrees first
    for (int d = D + aux; d >= r; --d)
      for (const auto& m : support[static_cast<std::size_t>(d)]) all.push_back({d, m, image(m)});

    // Kernel vectors of level d whose phi_r block is nonzero, with their columns.
    auto solve_level = [&](int d, std::vector<const Column*>& cols) {
      cols.clear();
      for (const auto& c : all)
        if (c.degree <= d + aux) cols.push_back(&c);
      detail::EquationAssembler eqs(cols.size());
      for (std::size_t u = 0; u < cols.size(); ++u) eqs.add_series(u, 0, cols[u]->img.truncated(d + 1));
      std::vector<RatVector> solved;
      for (auto& v : mat_kernel(eqs.matrix())) {
        bool leading = false;
        for (std::size_t u = 0; u < cols.size() && !leading; ++u) leading = cols[u]->degree == r && v[u] != 0;
        if (leading) solved.push_back(std::move(v));
      }
      return solved;
    };

    MultiplierEntry entry;
    entry.r = r;
    std::vector<const Column*> cols;
    std::vector<RatVector> solved;
    for (int d = r; d <= D; ++d) {
      solved = solve_level(d, cols);
      if (solved.empty()) {
        entry.failed_degree = d;
        break;
      }
    }
    if (!entry.failed_degree) {
      entry.status = MultiplierStatus::Solved;
      for (const auto& v : solved) {
        PolySeries phi(n, D);
        for (std::size_t u = 0; u < cols.size(); ++u)
          if (cols[u]->degree <= D) phi.add_term(cols[u]->m, v[u]);
        const Rational lead = phi.terms().begin()->second;
        phi *= 1 / lead;
        if (!is_multiplier(s, f, phi, D)) throw std::logic_error("solved multiplier fails the defining equation");
        entry.solutions.push_back(std::move(phi));
      }
      entry.multiplier = entry.solutions.front();
    }
    out.entries.push_back(std::move(entry));
  }
  return out;
}

EigenSpectrum reduced_spectrum(std::size_t r) { return build_spectrum(r, 0, std::vector<RatVector>(r)); }

TransferResult transfer_reduced(const InvariantAlgebra& inv, TransferDirection direction, const PolySeries& candidate,
                                const std::optional<TransferContext>& verify) {
  if (!inv.independent)
    throw Error(ErrorCode::UnsupportedSpectrum, "transfer needs algebraically independent generators");
  const std::size_t n = inv.n;
  const std::size_t r = inv.r();
  int top = 1;
  int bottom = 0;
  for (const auto& g : inv.generators) {
    top = std::max(top, degree_of(g));
    bottom = bottom == 0 ? degree_of(g) : std::min(bottom, degree_of(g));
  }
  bottom = std::max(bottom, 1);

  TransferResult out;
  if (direction == TransferDirection::AmbientToReduced) {
    if (candidate.nvars() != n) throw Error(ErrorCode::DimensionMismatch, "ambient candidate dimension");
    Trunc t;
    if (candidate.trunc()) t = (*candidate.trunc() - static_cast<int>(n)) / top + static_cast<int>(r);
    out.image = PolySeries(r, t);
    for (const auto& [m, c] : candidate.terms()) {
      Exponents rho = m;
      for (auto& e : rho)
        if (--e < 0) throw Error(ErrorCode::WrongShape, "candidate is not divisible by x_1 ... x_n");
      auto k = rewrite_in_generators(inv, rho);
      if (!k) throw Error(ErrorCode::WrongShape, "candidate quotient by x_1 ... x_n is not invariant");
      for (auto& e : *k) ++e;
      out.image.add_term(*k, c);
    }
  } else {
    if (candidate.nvars() != r) throw Error(ErrorCode::DimensionMismatch, "reduced candidate dimension");
    Trunc t;
    if (candidate.trunc()) t = (*candidate.trunc() - static_cast<int>(r) + 1) * bottom - 1 + static_cast<int>(n);
    out.image = PolySeries(n, t);
    for (const auto& [k, c] : candidate.terms()) {
      Exponents m(n, 1);
      for (std::size_t i = 0; i < r; ++i) {
        if (k[i] < 1) throw Error(ErrorCode::WrongShape, "candidate is not divisible by y_1 ... y_r");
        for (std::size_t l = 0; l < n; ++l) m[l] += (k[i] - 1) * inv.generators[i][l];
      }
      out.image.add_term(m, c);
    }
  }

  if (verify) {
    const EigenSpectrum rs = reduced_spectrum(r);
    const bool to_reduced = direction == TransferDirection::AmbientToReduced;
    const PolySeries& amb = to_reduced ? candidate : out.image;
    const PolySeries& red = to_reduced ? out.image : candidate;
    const bool amb_ok = is_multiplier(*verify->spectrum, *verify->ambient, amb);
    const bool red_ok = is_multiplier(rs, verify->reduced->field, red);
    out.source_is_multiplier = to_reduced ? amb_ok : red_ok;
    out.image_is_multiplier = to_reduced ? red_ok : amb_ok;
  }
  return out;
}

ObstructionResult reduced_multiplier_obstruction(const ReducedField& red) {
  const std::size_t r = red.r;
  ObstructionResult out;
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      RatVector row(r);
      row[i] = red.nu(i, j) - red.nu(j, j);
      row[j] = red.nu(j, i) - red.nu(i, i);
      rows.push_back(std::move(row));
    }
  out.system = Matrix::from_rows(rows, r);
  const auto kernel = mat_kernel(out.system);
  if (r >= 3 && kernel.empty()) {
    out.status = ObstructionStatus::NoMultiplier;
  } else if (r == 2 && kernel.size() == 1) {
    out.status = ObstructionStatus::UniqueCandidate;
    out.alpha = kernel.front();
    PolySeries cand(r);
    for (std::size_t i = 0; i < r; ++i) {
      Exponents e(r, 1);
      ++e[i];
      cand.add_term(e, out.alpha[i]);
    }
    out.candidate = std::move(cand);
  }
  return out;
}

const char* status_name(MultiplierStatus s) { return s == MultiplierStatus::Solved ? "solved" : "inconsistent"; }

const char* status_name(ObstructionStatus s) {
  switch (s) {
    case ObstructionStatus::NoMultiplier: return "no_multiplier";
    case ObstructionStatus::UniqueCandidate: return "unique_candidate";
    case ObstructionStatus::Undecided: return "undecided";
  }
  return "undecided";
}

}  // namespace nfkit
