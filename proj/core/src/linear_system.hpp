#pragma once

#include <map>
#include <utility>

#include "nfkit/matrix.hpp"
#include "nfkit/polynomial.hpp"

namespace nfkit::detail {

// Collects coefficient equations keyed by (component, monomial); one column per unknown.
class EquationAssembler {
 public:
  explicit EquationAssembler(std::size_t unknowns) : unknowns_(unknowns) {}

  void add(std::size_t unknown, std::size_t component, const Exponents& m, const Rational& c) {
    if (c == 0) return;
    rows_[{component, m}][unknown] += c;
  }
  void add_series(std::size_t unknown, std::size_t component, const PolySeries& p) {
    for (const auto& [m, c] : p.terms()) add(unknown, component, m, c);
  }
  void add_field(std::size_t unknown, const PolyVectorField& f) {
    for (std::size_t j = 0; j < f.n(); ++j) add_series(unknown, j, f[j]);
  }

  Matrix matrix() const {
    Matrix m(rows_.size(), unknowns_);
    std::size_t i = 0;
    for (const auto& [key, row] : rows_) {
      for (const auto& [u, c] : row) m(i, u) = c;
      ++i;
    }
    return m;
  }

 private:
  struct KeyLess {
    bool operator()(const std::pair<std::size_t, Exponents>& a, const std::pair<std::size_t, Exponents>& b) const {
      const int da = degree_of(a.second);
      const int db = degree_of(b.second);
      if (da != db) return da < db;
      if (a.first != b.first) return a.first < b.first;
      return a.second < b.second;
    }
  };
  std::size_t unknowns_;
  std::map<std::pair<std::size_t, Exponents>, std::map<std::size_t, Rational>, KeyLess> rows_;
};

}  // namespace nfkit::detail
