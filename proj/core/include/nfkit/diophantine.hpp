#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nfkit/matrix.hpp"

namespace nfkit {

using IntMatrix = std::vector<std::vector<std::int64_t>>;
using Exponents = std::vector<int>;

// Each row scaled by the lcm of its denominators.
IntMatrix integer_rows(const Matrix& m);

// Total degree first, then lexicographic.
bool graded_less(const Exponents& a, const Exponents& b);

struct HilbertResult {
  std::vector<Exponents> basis;  // graded order
  bool cap_reached = false;
};

// Minimal nonzero solutions of A x = 0 over nonnegative integers (Contejean-Devie
// completion). Candidates above degree_cap or above the optional per-variable
// bounds are not explored.
HilbertResult solve_hilbert_basis(const IntMatrix& a, std::size_t nvars, int degree_cap,
                                  const std::optional<Exponents>& upper = std::nullopt);

}  // namespace nfkit
