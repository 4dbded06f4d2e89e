#pragma once

#include <optional>
#include <vector>

#include "nfkit/spectrum.hpp"

namespace nfkit {

// All m with |m| = d and <m, lambda> equal to `target` (q coordinates), lex order.
std::vector<Exponents> multiindices_with_pairing(const EigenSpectrum& s, int d, const RatVector& target);

// j is 0-based.
std::vector<Exponents> resonant_multiindices(const EigenSpectrum& s, std::size_t j, int d);

int resonance_degree_bound(const EigenSpectrum& s);

struct ResonanceSet {
  std::vector<std::vector<Exponents>> per_component;  // R_j, each graded
  std::size_t count = 0;
  bool finite = false;
  std::optional<int> degree_bound;  // finite case
  std::optional<int> cap;           // infinite case
  int max_degree() const { return finite ? *degree_bound : *cap; }
};

// Infinite resonance requires an explicit cap.
ResonanceSet resonance_set(const EigenSpectrum& s, std::optional<int> cap = std::nullopt);

struct LadderSolution {
  int s = 0;
  int k = 0;
  std::vector<int> ks;
  friend bool operator==(const LadderSolution&, const LadderSolution&) = default;
};

struct SemiInvariantLadder {
  std::vector<LadderSolution> solutions;  // ordered by (s, k, ks)
  bool complete = false;                  // positivity bound applied
  int bound = 0;                          // largest s examined
};

SemiInvariantLadder semiinvariant_degree_ladder(const RatVector& mu, const Rational& cofactor, int cap);

struct CommutingLadder {
  std::vector<int> degrees;
  bool complete = false;
  int bound = 0;
};

CommutingLadder commuting_degree_ladder(const RatVector& mu, int cap);

}  // namespace nfkit
