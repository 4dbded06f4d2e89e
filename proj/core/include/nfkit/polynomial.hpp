#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nfkit/diophantine.hpp"
#include "nfkit/rational.hpp"

namespace nfkit {

// Degree beyond which terms are undefined; nullopt means an exact polynomial.
using Trunc = std::optional<int>;

Trunc min_trunc(Trunc a, Trunc b);
Trunc lower_trunc(Trunc t, int by);
bool within(Trunc t, int degree);

int degree_of(const Exponents& m);

struct GradedLess {
  bool operator()(const Exponents& a, const Exponents& b) const { return graded_less(a, b); }
};

// All exponent rows of total degree d in n variables, lex order.
std::vector<Exponents> monomials_of_degree(std::size_t n, int d);

class PolySeries {
 public:
  using Terms = std::map<Exponents, Rational, GradedLess>;

  PolySeries() = default;
  explicit PolySeries(std::size_t nvars, Trunc trunc = std::nullopt) : n_(nvars), trunc_(trunc) {}
  static PolySeries constant(std::size_t nvars, const Rational& c, Trunc trunc = std::nullopt);
  static PolySeries monomial(const Exponents& m, const Rational& c = 1, Trunc trunc = std::nullopt);

  std::size_t nvars() const { return n_; }
  Trunc trunc() const { return trunc_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Exponents& m) const;
  // Lowest degree present; nullopt for zero.
  std::optional<int> order() const;
  std::optional<int> max_degree() const;

  // Accumulates; zero results and terms beyond trunc are dropped.
  void add_term(const Exponents& m, const Rational& c);

  PolySeries homogeneous_part(int d) const;
  PolySeries truncated(Trunc t) const;
  PolySeries with_trunc(Trunc t) const;  // truncates and records the budget
  // Same terms, read as an exact polynomial.
  PolySeries as_polynomial() const;
  PolySeries derivative(std::size_t i) const;

  PolySeries& operator+=(const PolySeries& o);
  PolySeries& operator-=(const PolySeries& o);
  PolySeries& operator*=(const Rational& c);

  friend bool operator==(const PolySeries& a, const PolySeries& b) {
    return a.n_ == b.n_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t n_ = 0;
  Trunc trunc_;
  Terms terms_;
};

PolySeries operator+(PolySeries a, const PolySeries& b);
PolySeries operator-(PolySeries a, const PolySeries& b);
PolySeries operator-(PolySeries a);
PolySeries operator*(PolySeries a, const Rational& c);
PolySeries operator*(const Rational& c, PolySeries a);
PolySeries operator*(const PolySeries& a, const PolySeries& b);

// Same terms, regardless of recorded truncation.
bool same_terms(const PolySeries& a, const PolySeries& b);

// Substitutes y_i := x^{exps[i]}; the result lives in `nx` variables.
PolySeries substitute_monomials(const PolySeries& p, const std::vector<Exponents>& exps, std::size_t nx);

class PolyVectorField {
 public:
  PolyVectorField() = default;
  explicit PolyVectorField(std::size_t n, Trunc trunc = std::nullopt);
  static PolyVectorField unit(std::size_t n, std::size_t j, const Exponents& m, const Rational& c = 1,
                              Trunc trunc = std::nullopt);
  static PolyVectorField from_components(std::vector<PolySeries> comps);
  // x -> M x
  static PolyVectorField linear(const class Matrix& m, Trunc trunc = std::nullopt);

  std::size_t n() const { return comps_.size(); }
  Trunc trunc() const { return trunc_; }
  const PolySeries& operator[](std::size_t j) const { return comps_[j]; }
  const std::vector<PolySeries>& components() const { return comps_; }
  bool is_zero() const;
  std::size_t term_count() const;
  std::optional<int> max_degree() const;

  void add_term(std::size_t j, const Exponents& m, const Rational& c);
  PolyVectorField homogeneous_part(int d) const;
  PolyVectorField truncated(Trunc t) const;
  PolyVectorField with_trunc(Trunc t) const;
  PolyVectorField as_polynomial() const;
  // Nonlinear part (all terms of degree != 1).
  PolyVectorField nonlinear_part() const;

  PolyVectorField& operator+=(const PolyVectorField& o);
  PolyVectorField& operator-=(const PolyVectorField& o);
  PolyVectorField& operator*=(const Rational& c);

  friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) {
    return a.trunc_ == b.trunc_ && a.comps_ == b.comps_;
  }

 private:
  Trunc trunc_;
  std::vector<PolySeries> comps_;
};

PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b);
PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b);
PolyVectorField operator*(PolyVectorField a, const Rational& c);
PolyVectorField operator*(const PolySeries& phi, const PolyVectorField& f);

bool same_terms(const PolyVectorField& a, const PolyVectorField& b);

}  // namespace nfkit
