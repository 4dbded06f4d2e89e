#pragma once

#include <optional>
#include <vector>

#include "nfkit/matrix.hpp"

namespace nfkit {

// Kernel basis in reduced-echelon order: one vector per free column, with a 1
// in that column and 0 in every other free column.
std::vector<RatVector> mat_kernel(const Matrix& m);

std::size_t mat_rank(const Matrix& m);

struct AffineSolution {
  RatVector particular;
  std::vector<RatVector> kernel;
};

// nullopt means the system is inconsistent.
std::optional<AffineSolution> mat_solve(const Matrix& m, const RatVector& b);

bool in_span(const std::vector<RatVector>& basis, const RatVector& v);

}  // namespace nfkit
