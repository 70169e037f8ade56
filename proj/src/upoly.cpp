#include "wps/upoly.hpp"

#include "wps/error.hpp"

namespace wps {

UPolynomial::UPolynomial(Field field, std::vector<Scalar> coefficients)
    : field_(field), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_) {
    if (!(c.field() == field_)) throw Error(Errc::FieldMismatch, "coefficient outside " + field_.to_string());
  }
  trim();
}

UPolynomial UPolynomial::constant(const Scalar& c) { return monomial(c, 0); }

UPolynomial UPolynomial::monomial(const Scalar& c, std::size_t k) {
  Field f = c.field();
  std::vector<Scalar> coeffs(k + 1, Scalar::zero(f));
  coeffs[k] = c;
  return UPolynomial(f, std::move(coeffs));
}

UPolynomial UPolynomial::from_ints(Field field, const std::vector<long long>& coefficients) {
  std::vector<Scalar> coeffs;
  coeffs.reserve(coefficients.size());
  for (long long c : coefficients) coeffs.push_back(Scalar::from_int(field, c));
  return UPolynomial(field, std::move(coeffs));
}

void UPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void UPolynomial::require_same_field(const UPolynomial& other) const {
  if (!(field_ == other.field_)) {
    throw Error(Errc::FieldMismatch,
                "polynomials over " + field_.to_string() + " and " + other.field_.to_string());
  }
}

Scalar UPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Scalar::zero(field_);
}

Scalar UPolynomial::leading() const {
  if (is_zero()) throw Error(Errc::ZeroPolynomial, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

UPolynomial UPolynomial::derivative() const {
  std::vector<Scalar> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out.push_back(coeffs_[k] * Scalar::from_int(field_, static_cast<long long>(k)));
  }
  return UPolynomial(field_, std::move(out));
}

UPolynomial UPolynomial::monic() const {
  if (is_zero()) return *this;
  Scalar inv = leading().inverse();
  UPolynomial r = *this;
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

Scalar UPolynomial::evaluate(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::pair<UPolynomial, UPolynomial> UPolynomial::divmod(const UPolynomial& divisor) const {
  require_same_field(divisor);
  if (divisor.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  UPolynomial rem = *this;
  if (rem.degree() < divisor.degree()) return {UPolynomial(field_), rem};
  const std::size_t dd = static_cast<std::size_t>(divisor.degree());
  std::vector<Scalar> quot(rem.coeffs_.size() - dd, Scalar::zero(field_));
  Scalar inv = divisor.leading().inverse();
  for (std::size_t k = rem.coeffs_.size(); k-- > dd;) {
    Scalar q = rem.coeffs_[k] * inv;
    if (q.is_zero()) continue;
    quot[k - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem.coeffs_[k - dd + j] -= q * divisor.coeffs_[j];
  }
  rem.trim();
  return {UPolynomial(field_, std::move(quot)), rem};
}

UPolynomial operator+(const UPolynomial& a, const UPolynomial& b) {
  a.require_same_field(b);
  std::vector<Scalar> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar::zero(a.field_));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
  return UPolynomial(a.field_, std::move(out));
}

UPolynomial operator-(const UPolynomial& a, const UPolynomial& b) {
  a.require_same_field(b);
  std::vector<Scalar> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar::zero(a.field_));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] -= b.coeffs_[k];
  return UPolynomial(a.field_, std::move(out));
}

UPolynomial operator*(const UPolynomial& a, const UPolynomial& b) {
  a.require_same_field(b);
  if (a.is_zero() || b.is_zero()) return UPolynomial(a.field_);
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPolynomial(a.field_, std::move(out));
}

bool operator==(const UPolynomial& a, const UPolynomial& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::string UPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Scalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool negative = !cs.empty() && cs[0] == '-';
    if (negative) cs.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += cs;
      continue;
    }
    if (cs != "1") out += cs + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

UPolynomial upoly_gcd(const UPolynomial& a, const UPolynomial& b) {
  if (!(a.field() == b.field())) {
    throw Error(Errc::FieldMismatch,
                "gcd over " + a.field().to_string() + " and " + b.field().to_string());
  }
  UPolynomial x = a;
  UPolynomial y = b;
  while (!y.is_zero()) {
    UPolynomial r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

long distinct_root_count(const UPolynomial& g, bool exclude_zero) {
  if (g.is_zero()) throw Error(Errc::ZeroPolynomial, "distinct_root_count of the zero polynomial");
  UPolynomial h = upoly_gcd(g, g.derivative());
  long count = g.degree() - h.degree();
  if (exclude_zero && g.coefficient(0).is_zero()) --count;
  return count;
}

bool is_squarefree(const UPolynomial& g) {
  if (g.is_zero()) throw Error(Errc::ZeroPolynomial, "squarefree test of the zero polynomial");
  return upoly_gcd(g, g.derivative()).degree() == 0;
}

}  // namespace wps
