#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace primecm {

/// Failure categories shared by every module. The C API maps these one to one
/// onto its status codes.
enum class ErrorCode {
  InvalidArgument,
  DomainError,
  NoSquareRoot,
  BadModulus,
  NonInvertible,
  BadWitness,
  InvariantNotApplicable,
  NoRootModP,
  SpecialJ,
  AmbiguousHasse,
  OracleRange,
  SearchExhausted,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Carries the shared factor, which callers may use as a factor witness.
class NonInvertibleError : public Error {
 public:
  NonInvertibleError(const mpz_class& gcd, const std::string& what)
      : Error(ErrorCode::NonInvertible, what), gcd_(gcd) {}

  const mpz_class& gcd() const noexcept { return gcd_; }

 private:
  mpz_class gcd_;
};

}  // namespace primecm
