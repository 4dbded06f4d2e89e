#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace nfkit {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q" with q != 0; result is canonical.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

Integer lcm_of_denominators(const std::vector<Rational>& v);
Integer gcd_of_numerators(const std::vector<Rational>& v);

Rational floor_of(const Rational& r);
bool is_integer(const Rational& r);

}  // namespace nfkit
