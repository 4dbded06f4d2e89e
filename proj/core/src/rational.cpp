#include "nfkit/rational.hpp"

#include <cctype>

#include "nfkit/error.hpp"

namespace nfkit {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NilpotentViolatesCommutation: return "NilpotentViolatesCommutation";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::InfiniteResonance: return "InfiniteResonance";
    case ErrorCode::InfiniteResonanceWithoutCap: return "InfiniteResonanceWithoutCap";
    case ErrorCode::LinearPartMismatch: return "LinearPartMismatch";
    case ErrorCode::NotPDNF: return "NotPDNF";
    case ErrorCode::ZeroEigenvalue: return "ZeroEigenvalue";
    case ErrorCode::NotFreeModuleShape: return "NotFreeModuleShape";
    case ErrorCode::RewriteFailure: return "RewriteFailure";
    case ErrorCode::NotNormalizerPair: return "NotNormalizerPair";
    case ErrorCode::ZeroSemisimplePart: return "ZeroSemisimplePart";
    case ErrorCode::WrongShape: return "WrongShape";
    case ErrorCode::UnsupportedSpectrum: return "UnsupportedSpectrum";
    case ErrorCode::TruncationTooLow: return "TruncationTooLow";
  }
  return "Unknown";
}

bool is_scope_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::InfiniteResonance:
    case ErrorCode::InfiniteResonanceWithoutCap:
    case ErrorCode::UnsupportedSpectrum:
    case ErrorCode::ZeroSemisimplePart:
    case ErrorCode::NotFreeModuleShape:
      return true;
    default:
      return false;
  }
}

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den))
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational r(Integer(std::string(num), 10), d);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Integer lcm_of_denominators(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

Integer gcd_of_numerators(const std::vector<Rational>& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  return g;
}

Rational floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rational(q);
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace nfkit
