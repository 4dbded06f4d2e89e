#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "nfkit/diophantine.hpp"
#include "nfkit/matrix.hpp"

namespace nfkit {

struct NilpotentEntry {
  std::size_t i;  // 0-based, i < j
  std::size_t j;
  Rational value;
};

// Semisimple part as coordinates of the eigenvalues over an implicit Q-basis
// nu_1..nu_q, plus a strictly upper triangular nilpotent part.
class EigenSpectrum {
 public:
  std::size_t n() const { return lambda_.rows(); }
  std::size_t q() const { return lambda_.cols(); }
  const Matrix& lambda() const { return lambda_; }
  const Matrix& nilpotent() const { return nilpotent_; }
  RatVector eigenvalue(std::size_t i) const { return lambda_.row(i); }
  bool same_eigenvalue(std::size_t i, std::size_t j) const;
  bool has_nilpotent() const { return !nilpotent_.is_zero(); }
  bool has_zero_eigenvalue() const;
  // Coordinates of <m, lambda>.
  RatVector pairing(const Exponents& m) const;
  // Coordinates of the trace sum lambda_1 + ... + lambda_n.
  RatVector trace() const;
  // With q <= 1 the semisimple part is rational once nu_1 := 1.
  bool rational_semisimple() const { return q() <= 1; }
  Rational rational_eigenvalue(std::size_t i) const;

  friend EigenSpectrum build_spectrum(std::size_t n, std::size_t q, const std::vector<RatVector>& rows,
                                      const std::vector<NilpotentEntry>& nilpotent);

 private:
  Matrix lambda_;
  Matrix nilpotent_;
};

EigenSpectrum build_spectrum(std::size_t n, std::size_t q, const std::vector<RatVector>& rows,
                             const std::vector<NilpotentEntry>& nilpotent = {});

inline constexpr int kDefaultHilbertCap = 64;

struct HilbertBasis {
  std::vector<Exponents> generators;
  bool cap_reached = false;
};

HilbertBasis hilbert_basis(const EigenSpectrum& s, int degree_cap = kDefaultHilbertCap);
bool is_finite_linear_centralizer(const EigenSpectrum& s);
bool has_positive_relation(const EigenSpectrum& s);

struct UWDecomposition {
  std::vector<std::size_t> u;  // 0-based
  std::vector<std::size_t> w;
};
UWDecomposition uw_decomposition(const EigenSpectrum& s);

std::vector<std::vector<Integer>> c_matrix_basis(const EigenSpectrum& s, bool gcd_normalize = false);

struct Dim3Verdict {
  bool holds = false;
  long l1 = 0;
  long l2 = 0;
};
Dim3Verdict classify_dim3(long d1, long d2, long d3);

}  // namespace nfkit
