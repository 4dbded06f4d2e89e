#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nfkit {

enum class ErrorCode {
  InvalidInput,
  DimensionMismatch,
  ParseError,
  RankMismatch,
  NilpotentViolatesCommutation,
  GcdNotOne,
  InfiniteResonance,
  InfiniteResonanceWithoutCap,
  LinearPartMismatch,
  NotPDNF,
  ZeroEigenvalue,
  NotFreeModuleShape,
  RewriteFailure,
  NotNormalizerPair,
  ZeroSemisimplePart,
  WrongShape,
  UnsupportedSpectrum,
  TruncationTooLow,
};

std::string_view error_name(ErrorCode code);

// Scope errors are well-formed requests outside what can be decided exactly
// (infinite resonance without a cap, irrational semisimple parts, ...).
bool is_scope_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nfkit
