#pragma once

#include "wps/prime_field.hpp"
#include "wps/rational.hpp"

#include <cstdint>
#include <string>
#include <variant>

namespace wps {

/// The closed set of coefficient fields: the rationals or a prime field F_p.
class Field {
 public:
  enum class Kind { Rationals, Prime };

  static Field rationals() { return Field(Kind::Rationals, 0); }
  /// Throws Errc::NotPrime unless p is a prime below 2^32.
  static Field prime(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_prime() const noexcept { return kind_ == Kind::Prime; }
  /// Zero for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }

  friend bool operator==(const Field&, const Field&) = default;

  /// "Q" or "F_p".
  std::string to_string() const;

 private:
  Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

/// A coefficient in one of the supported fields. Arithmetic across two
/// different fields throws Errc::FieldMismatch.
class Scalar {
 public:
  Scalar(const Rational& value) : value_(value) {}  // NOLINT(implicit)
  Scalar(const PrimeFieldElem& value) : value_(value) {}  // NOLINT(implicit)

  static Scalar zero(const Field& field) { return from_int(field, 0); }
  static Scalar one(const Field& field) { return from_int(field, 1); }
  static Scalar from_int(const Field& field, long long value);
  static Scalar from_bigint(const Field& field, const BigInt& value);
  /// Reduces into `field`; over F_p a denominator divisible by p throws
  /// Errc::DivisionByZero.
  static Scalar from_rational(const Field& field, const Rational& value);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  const Rational* as_rational() const { return std::get_if<Rational>(&value_); }
  const PrimeFieldElem* as_prime() const { return std::get_if<PrimeFieldElem>(&value_); }

  Scalar pow(std::uint64_t exponent) const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

  /// Total order used only for deterministic output (orbit minima, sorting).
  /// Rationals compare numerically, F_p elements by residue.
  friend bool operator<(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  std::variant<Rational, PrimeFieldElem> value_;
};

}  // namespace wps
