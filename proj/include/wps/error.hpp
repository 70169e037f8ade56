#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wps {

/// Every domain failure raised by the library carries one of these codes.
/// The string forms returned by `code_name` are stable and are what the CLI
/// prints in its error output.
enum class Errc {
  FieldMismatch,
  ZeroPolynomial,
  NotHomogeneous,
  BadCase,
  BoundTooSmall,
  Mismatch,
  Unsupported,
  NotOnPatch,
  PrimeUnsuitable,
  NotPrime,
  NotWellFormed,
  NotSufficientlyGeneral,
  NotAConePoint,
  DegenerateEdge,
  InvalidDegreeWeight,
  NonIntegerGenus,
  AmbiguousLowDegree,
  InvalidOverride,
  NumeratorNotPolynomial,
  TooLarge,
  InvalidWeight,
  InvalidArgument,
  ParseError,
  UnknownVariable,
  DivisionByZero,
};

std::string_view code_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view code_name() const noexcept { return wps::code_name(code_); }

 private:
  Errc code_;
};

/// Syntax errors additionally record the byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(Errc code, const std::string& message, std::size_t position)
      : Error(code, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace wps
