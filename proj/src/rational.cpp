#include "wps/rational.hpp"

#include "wps/error.hpp"

namespace wps {

std::string_view code_name(Errc code) noexcept {
  switch (code) {
    case Errc::FieldMismatch: return "E_FIELD_MISMATCH";
    case Errc::ZeroPolynomial: return "E_ZERO_POLYNOMIAL";
    case Errc::NotHomogeneous: return "E_NOT_HOMOGENEOUS";
    case Errc::BadCase: return "E_BAD_CASE";
    case Errc::BoundTooSmall: return "E_BOUND_TOO_SMALL";
    case Errc::Mismatch: return "E_MISMATCH";
    case Errc::Unsupported: return "E_UNSUPPORTED";
    case Errc::NotOnPatch: return "E_NOT_ON_PATCH";
    case Errc::PrimeUnsuitable: return "E_PRIME_UNSUITABLE";
    case Errc::NotPrime: return "E_NOT_PRIME";
    case Errc::NotWellFormed: return "E_NOT_WELL_FORMED";
    case Errc::NotSufficientlyGeneral: return "E_NOT_SUFFICIENTLY_GENERAL";
    case Errc::NotAConePoint: return "E_NOT_A_CONE_POINT";
    case Errc::DegenerateEdge: return "E_DEGENERATE_EDGE";
    case Errc::InvalidDegreeWeight: return "E_INVALID_DEGREE_WEIGHT";
    case Errc::NonIntegerGenus: return "E_GENUS_NONINT";
    case Errc::AmbiguousLowDegree: return "E_AMBIGUOUS_LOW_DEGREE";
    case Errc::InvalidOverride: return "E_INVALID_OVERRIDE";
    case Errc::NumeratorNotPolynomial: return "E_NUMERATOR_NOT_POLYNOMIAL";
    case Errc::TooLarge: return "E_TOO_LARGE";
    case Errc::InvalidWeight: return "E_INVALID_WEIGHT";
    case Errc::InvalidArgument: return "E_INVALID_ARGUMENT";
    case Errc::ParseError: return "E_PARSE";
    case Errc::UnknownVariable: return "E_UNKNOWN_VARIABLE";
    case Errc::DivisionByZero: return "E_DIVISION_BY_ZERO";
  }
  return "E_UNKNOWN";
}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  // Boost rejects a negative denominator, so move the sign first.
  if (denominator < 0) {
    value_ = boost::multiprecision::cpp_rational(-numerator, -denominator);
  } else {
    value_ = boost::multiprecision::cpp_rational(numerator, denominator);
  }
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

bool Rational::is_zero() const { return value_ == 0; }
bool Rational::is_integer() const { return denominator() == 1; }
int Rational::sign() const { return value_.sign(); }

Rational Rational::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  Rational r;
  r.value_ = 1 / value_;
  return r;
}

Rational Rational::pow(unsigned long long exponent) const {
  Rational result(1);
  Rational base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (lhs.value_ < rhs.value_) return std::strong_ordering::less;
  if (lhs.value_ > rhs.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

}  // namespace wps
