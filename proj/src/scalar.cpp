#include "wps/scalar.hpp"

#include "wps/error.hpp"

namespace wps {

namespace {

[[noreturn]] void mismatch(const Scalar& a, const Scalar& b) {
  throw Error(Errc::FieldMismatch,
              "field mismatch: " + a.field().to_string() + " vs " + b.field().to_string());
}

template <typename Op>
void combine(Scalar& lhs, const Scalar& rhs, Op op) {
  if (auto* l = const_cast<Rational*>(lhs.as_rational())) {
    if (auto* r = rhs.as_rational()) {
      op(*l, *r);
      return;
    }
  } else if (auto* l2 = const_cast<PrimeFieldElem*>(lhs.as_prime())) {
    if (auto* r2 = rhs.as_prime()) {
      if (l2->modulus() != r2->modulus()) mismatch(lhs, rhs);
      op(*l2, *r2);
      return;
    }
  }
  mismatch(lhs, rhs);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 32) || !wps::is_prime(p)) {
    throw Error(Errc::NotPrime, std::to_string(p) + " is not a supported prime");
  }
  return Field(Kind::Prime, p);
}

std::string Field::to_string() const {
  return kind_ == Kind::Rationals ? "Q" : "F_" + std::to_string(p_);
}

Scalar Scalar::from_int(const Field& field, long long value) {
  if (field.is_prime()) return PrimeFieldElem(value, field.characteristic());
  return Rational(value);
}

Scalar Scalar::from_bigint(const Field& field, const BigInt& value) {
  if (!field.is_prime()) return Rational(value);
  BigInt r = value % field.characteristic();
  if (r < 0) r += field.characteristic();
  return PrimeFieldElem(r.convert_to<long long>(), field.characteristic());
}

Scalar Scalar::from_rational(const Field& field, const Rational& value) {
  if (!field.is_prime()) return value;
  Scalar num = from_bigint(field, value.numerator());
  Scalar den = from_bigint(field, value.denominator());
  if (den.is_zero()) {
    throw Error(Errc::DivisionByZero, "denominator " + value.denominator().str() +
                                          " vanishes in " + field.to_string());
  }
  return num / den;
}

Field Scalar::field() const {
  if (auto* p = as_prime()) return Field::prime(p->modulus());
  return Field::rationals();
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& v) { return v.is_zero(); }, value_);
}

bool Scalar::is_one() const {
  if (auto* r = as_rational()) return *r == Rational(1);
  return as_prime()->residue() == 1;
}

Scalar Scalar::pow(std::uint64_t exponent) const {
  return std::visit([&](const auto& v) -> Scalar { return v.pow(exponent); }, value_);
}

Scalar Scalar::inverse() const {
  return std::visit([](const auto& v) -> Scalar { return v.inverse(); }, value_);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  combine(*this, rhs, [](auto& a, const auto& b) { a += b; });
  return *this;
}
Scalar& Scalar::operator-=(const Scalar& rhs) {
  combine(*this, rhs, [](auto& a, const auto& b) { a -= b; });
  return *this;
}
Scalar& Scalar::operator*=(const Scalar& rhs) {
  combine(*this, rhs, [](auto& a, const auto& b) { a *= b; });
  return *this;
}
Scalar& Scalar::operator/=(const Scalar& rhs) {
  combine(*this, rhs, [](auto& a, const auto& b) { a /= b; });
  return *this;
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& v) -> Scalar { return -v; }, value_);
}

bool operator<(const Scalar& a, const Scalar& b) {
  const auto* ra = a.as_rational();
  const auto* rb = b.as_rational();
  if (ra && rb) return *ra < *rb;
  const auto* pa = a.as_prime();
  const auto* pb = b.as_prime();
  if (pa && pb && pa->modulus() == pb->modulus()) return pa->residue() < pb->residue();
  mismatch(a, b);
}

std::string Scalar::to_string() const {
  return std::visit([](const auto& v) { return v.to_string(); }, value_);
}

}  // namespace wps
