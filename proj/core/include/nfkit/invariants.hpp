#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nfkit/matrix.hpp"
#include "nfkit/polynomial.hpp"
#include "nfkit/resonance.hpp"
#include "nfkit/spectrum.hpp"

namespace nfkit {

// Monomial generators psi_i = x^{M_i} of the polynomial first integrals of A_s.
struct InvariantAlgebra {
  std::size_t n = 0;
  std::vector<Exponents> generators;
  bool independent = false;  // rank M == r
  bool cap_reached = false;
  std::size_t r() const { return generators.size(); }
};

InvariantAlgebra invariant_generators(const EigenSpectrum& s, int degree_cap = kDefaultHilbertCap);

enum class Verdict { Yes, No, Unknown };
const char* verdict_name(Verdict v);

struct ModuleCheck {
  Verdict verdict = Verdict::Unknown;
  // Violating exponent row and its component (0-based), when one was found.
  std::optional<std::size_t> component;
  std::optional<Exponents> witness;
  // The answer for every component came from a bounded polyhedron or a completed lattice search.
  bool complete = false;
};

// Every m >= 0 with <m, lambda> = lambda_j has m_j > 0.
ModuleCheck check_free_module(const EigenSpectrum& s, int search_bound, int degree_cap = kDefaultHilbertCap);

struct OneDivCheck {
  ModuleCheck check;
  bool divergence_nonzero = false;  // trace of A_s != 0, necessary for the condition
};

// Every m >= 0 with <m, lambda> = sum lambda_i satisfies m >= (1, ..., 1).
OneDivCheck check_onediv(const EigenSpectrum& s, int search_bound, int degree_cap = kDefaultHilbertCap);

// Writes f = A x + sum_j eta_j(x) x_j e_j with eta_j = etahat_j(psi(x)); one series in r variables per component.
std::vector<PolySeries> decompose_eta(const EigenSpectrum& s, const InvariantAlgebra& inv, const PolyVectorField& f);

// Nonnegative k with sum_i k_i M_i = e, or nullopt.
std::optional<Exponents> rewrite_in_generators(const InvariantAlgebra& inv, const Exponents& e);

struct ReducedField {
  std::size_t r = 0;
  PolyVectorField field;  // in r variables
  Matrix nu;              // quadratic part: component i = y_i sum_j nu_ij y_j
  std::vector<PolySeries> eta;
};

ReducedField reduce_vectorfield(const EigenSpectrum& s, const InvariantAlgebra& inv, const PolyVectorField& f);

struct TrivialityCertificate {
  bool certified = false;
  RatVector mu;  // eigenvalues of Df2(c) at c = e_1 / nu_11
  std::optional<CommutingLadder> commuting;
  std::optional<SemiInvariantLadder> first_integrals;
  std::optional<std::size_t> quadratic_kernel_dim;
  std::vector<std::string> reasons;
};

TrivialityCertificate triviality_certificate(const ReducedField& red, int cap);

// Homogeneous quadratic fields g with [g, f2] = 0, f2 = y_i sum_j nu_ij y_j.
std::size_t quadratic_commutator_kernel_dim(const Matrix& nu);

}  // namespace nfkit
