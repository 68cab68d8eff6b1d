// Error taxonomy for the whole library.
//
// Math errors are violations of an operation's mathematical contract
// (dividing by zero, asking for the length of an infinite module, ...).
// Parse errors are rejections of user-supplied text and carry a byte
// offset into the offending input.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idealpow {

enum class Errc {
  // field / polynomial arithmetic
  MixedFields,
  DivisionByZero,
  LengthMismatch,
  MixedRings,
  MissingImage,
  ZeroPolynomial,
  Overflow,
  // ideal-level contracts
  ZeroIdeal,
  UnitIdeal,
  ZeroDivisor,
  NotMPrimary,
  NotContained,
  NotHomogeneous,
  BadVariableSet,
  InfiniteLength,
  // input text
  SyntaxError,
  UnknownVariable,
  NonPrimeCharacteristic,
  ReservedVariableName,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

// Contract violation in exact arithmetic or ideal calculus. CLI exit code 1.
class MathError : public Error {
public:
  using Error::Error;
};

// A length question whose answer is not finite; carries the first power k
// at which finiteness fails (0 when there is no power in play).
class InfiniteLengthError : public MathError {
public:
  explicit InfiniteLengthError(unsigned k, const std::string& msg)
      : MathError(Errc::InfiniteLength, msg), k_(k) {}
  unsigned k() const noexcept { return k_; }

private:
  unsigned k_;
};

// Rejected input text. CLI exit code 2.
class ParseError : public Error {
public:
  ParseError(Errc code, std::size_t position, const std::string& msg)
      : Error(code, msg), position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace idealpow
