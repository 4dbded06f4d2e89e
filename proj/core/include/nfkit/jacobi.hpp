#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nfkit/invariants.hpp"
#include "nfkit/polynomial.hpp"
#include "nfkit/resonance.hpp"
#include "nfkit/spectrum.hpp"

namespace nfkit {

// m with |m| = d and <m, lambda> = sum lambda_i.
std::vector<Exponents> multiplier_support(const EigenSpectrum& s, int d);

// X_{A_s}(div f) == 0.
bool divergence_integral_check(const EigenSpectrum& s, const PolyVectorField& f);

struct MultiplierResidual {
  std::vector<PolySeries> semisimple;  // X_{A_s}(phi) - tr(A_s) phi, per nu coordinate
  PolySeries rest;                     // X_R(phi) - div(R) phi for f = A_s x + R
  bool vanishes(Trunc upto) const;
};

MultiplierResidual multiplier_residual(const EigenSpectrum& s, const PolyVectorField& f, const PolySeries& phi);
// X_f(phi) == div f * phi up to degree `upto` (nullopt: the residual's own budget).
bool is_multiplier(const EigenSpectrum& s, const PolyVectorField& f, const PolySeries& phi,
                   Trunc upto = std::nullopt);

enum class MultiplierStatus { Solved, Inconsistent };

struct MultiplierEntry {
  int r = 0;
  MultiplierStatus status = MultiplierStatus::Inconsistent;
  std::optional<PolySeries> multiplier;  // first solution, scaled so its leading term is 1
  std::vector<PolySeries> solutions;     // independent solutions with phi_r != 0
  std::optional<int> failed_degree;      // first level d whose equations (degree <= d + 1) force phi_r = 0
};

// Fixed point c = e_k / kappa of the quadratic part and the resulting degree ladder.
struct SemiInvariantCertificate {
  std::size_t axis = 0;  // 0-based
  Rational kappa;
  RatVector mu;
  Rational cofactor;
  SemiInvariantLadder ladder;
};

struct MultiplierLadder {
  int D = 0;
  std::vector<MultiplierEntry> entries;
  std::string support_note;
  std::optional<SemiInvariantCertificate> semiinvariant;
};

// Level d of candidate r: unknowns phi_r..phi_d on the support, equations of degree <= d + 1.
MultiplierLadder solve_multiplier(const EigenSpectrum& s, const PolyVectorField& f, int r_min, int r_max, int D);

std::optional<SemiInvariantCertificate> semiinvariant_certificate(const EigenSpectrum& s, const PolyVectorField& f,
                                                                  int cap);

enum class TransferDirection { AmbientToReduced, ReducedToAmbient };

struct TransferContext {
  const EigenSpectrum* spectrum;
  const PolyVectorField* ambient;
  const ReducedField* reduced;
};

struct TransferResult {
  PolySeries image;
  std::optional<bool> source_is_multiplier;
  std::optional<bool> image_is_multiplier;
};

// sigma * (rhohat o Psi) <-> y_1 ... y_r * rhohat.
TransferResult transfer_reduced(const InvariantAlgebra& inv, TransferDirection direction, const PolySeries& candidate,
                                const std::optional<TransferContext>& verify = std::nullopt);

// Spectrum with q = 0 in r variables, the linear part of a reduced field.
EigenSpectrum reduced_spectrum(std::size_t r);

enum class ObstructionStatus { NoMultiplier, UniqueCandidate, Undecided };

struct ObstructionResult {
  ObstructionStatus status = ObstructionStatus::Undecided;
  Matrix system;          // rows mu_ij alpha_i + mu_ji alpha_j = 0, i < j
  RatVector alpha;        // UniqueCandidate
  std::optional<PolySeries> candidate;  // y_1 ... y_r sum alpha_i y_i
};

ObstructionResult reduced_multiplier_obstruction(const ReducedField& red);

const char* status_name(MultiplierStatus s);
const char* status_name(ObstructionStatus s);

}  // namespace nfkit
