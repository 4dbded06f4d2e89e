#pragma once

#include <optional>
#include <vector>

#include "nfkit/matrix.hpp"
#include "nfkit/polynomial.hpp"
#include "nfkit/spectrum.hpp"

namespace nfkit {

// [g, h] = Dh g - Dg h
PolyVectorField lie_bracket(const PolyVectorField& g, const PolyVectorField& h);
// X_g(phi) = Dphi g
PolySeries lie_derivative(const PolyVectorField& g, const PolySeries& phi);
PolySeries divergence(const PolyVectorField& f);
PolySeries determinant_multiplier(const PolyVectorField& f, const std::vector<PolyVectorField>& gs);

Matrix linear_part(const PolyVectorField& f);

// A field relative to a spectrum is f = A_s x + remainder. The diagonal of the
// semisimple part may be omitted from f (implicit, any q) or written out with
// nu_1 := 1 (explicit, q <= 1).
struct SplitField {
  PolyVectorField remainder;  // A_n x + nonlinear terms, rational
  bool explicit_semisimple = false;
};
SplitField split_semisimple(const EigenSpectrum& s, const PolyVectorField& f);

// Requires a rational semisimple part (q <= 1); returns A_s x + remainder.
PolyVectorField full_rational_field(const EigenSpectrum& s, const PolyVectorField& f);

// X_{A_s}(phi), one series per nu coordinate.
std::vector<PolySeries> semisimple_lie_derivative(const EigenSpectrum& s, const PolySeries& phi);
// [A_s, g], one field per nu coordinate.
std::vector<PolyVectorField> semisimple_bracket(const EigenSpectrum& s, const PolyVectorField& g);
bool in_kernel_of_semisimple(const EigenSpectrum& s, const PolySeries& phi);

struct SpectralDivergence {
  RatVector constant;  // sum of eigenvalues in nu coordinates
  PolySeries rest;     // divergence of the remainder
};
SpectralDivergence spectral_divergence(const EigenSpectrum& s, const PolyVectorField& f);

bool is_resonant(const EigenSpectrum& s, std::size_t j, const Exponents& m);
bool is_pdnf(const EigenSpectrum& s, const PolyVectorField& f);
void require_pdnf(const EigenSpectrum& s, const PolyVectorField& f);

struct VectorMonomial {
  std::size_t j;
  Exponents m;
};
// Order used for unknowns and listings: degree, then component, then exponents.
bool vector_monomial_less(const VectorMonomial& a, const VectorMonomial& b);

std::vector<VectorMonomial> resonant_vector_monomials(const EigenSpectrum& s, int min_degree, int max_degree);
std::vector<PolyVectorField> pdnf_basis(const EigenSpectrum& s, std::optional<int> max_degree);

}  // namespace nfkit
