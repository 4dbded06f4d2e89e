#pragma once

#include <optional>
#include <vector>

#include "nfkit/matrix.hpp"
#include "nfkit/polynomial.hpp"
#include "nfkit/spectrum.hpp"

namespace nfkit {

struct CommutantBasis {
  std::size_t dimension = 0;
  std::vector<Matrix> basis;
};

// Matrices commuting with A_s and A_n.
CommutantBasis linear_commutant(const EigenSpectrum& s);

struct CentralizerBounds {
  std::size_t d = 0;  // commutant dimension
  std::size_t r = 0;  // resonant monomials counted (exact) or up to D (truncated)
  // Block bounds, available when A_n = 0.
  std::optional<std::size_t> block_lower;
  std::optional<std::size_t> block_upper;
};

struct CentralizerResult {
  std::size_t dimension = 0;
  std::vector<PolyVectorField> basis;
  bool exact = false;
  std::optional<int> truncation;
  CentralizerBounds bounds;
  // Truncated case: graded[k] = number of independent solutions of lowest degree k (index 0 unused).
  std::vector<std::size_t> graded;
};

CentralizerResult centralizer_exact(const EigenSpectrum& s, const PolyVectorField& f);
CentralizerResult centralizer_truncated(const EigenSpectrum& s, const PolyVectorField& f, int D);

// [g, f] == 0 modulo degree > D (D = nullopt: exactly). f is taken relative to s.
bool commutes_with(const EigenSpectrum& s, const PolyVectorField& f, const PolyVectorField& g, std::optional<int> D);
// Whether g lies in the span of the result's basis.
bool in_solution_span(const CentralizerResult& res, const PolyVectorField& g);

struct NormalizerPair {
  PolyVectorField g;
  PolySeries lambda;
};

struct NormalizerResult {
  std::size_t dimension = 0;
  std::vector<NormalizerPair> basis;
  int truncation = 0;
};

// Requires rational eigenvalues (q <= 1).
NormalizerResult normalizer_truncated(const EigenSpectrum& s, const PolyVectorField& f, int D);
bool normalizer_relation_holds(const EigenSpectrum& s, const PolyVectorField& f, const NormalizerPair& pair, int D);
bool in_normalizer_span(const NormalizerResult& res, const NormalizerPair& pair);

struct NormalizerReduction {
  PolySeries beta;
  PolySeries alpha;
  bool semisimple_commutes = false;  // [A_s, g - beta f] == 0 modulo degree > D
};

NormalizerReduction normalizer_reduce(const EigenSpectrum& s, const PolyVectorField& f, const PolyVectorField& g,
                                      const PolySeries& lambda, int D);

}  // namespace nfkit
