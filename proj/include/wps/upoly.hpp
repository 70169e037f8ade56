#pragma once

#include "wps/scalar.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wps {

// Dense univariate polynomial, constant term first. The leading coefficient is
// never stored as zero; the zero polynomial has an empty coefficient list.
class UPolynomial {
 public:
  explicit UPolynomial(Field field) : field_(field) {}
  UPolynomial(Field field, std::vector<Scalar> coefficients);

  static UPolynomial constant(const Scalar& c);
  // c * lambda^k
  static UPolynomial monomial(const Scalar& c, std::size_t k);
  static UPolynomial from_ints(Field field, const std::vector<long long>& coefficients);

  const Field& field() const { return field_; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Scalar coefficient(std::size_t k) const;
  Scalar leading() const;

  UPolynomial derivative() const;
  UPolynomial monic() const;
  Scalar evaluate(const Scalar& x) const;
  // Quotient and remainder; throws DivisionByZero for a zero divisor.
  std::pair<UPolynomial, UPolynomial> divmod(const UPolynomial& divisor) const;

  friend UPolynomial operator+(const UPolynomial& a, const UPolynomial& b);
  friend UPolynomial operator-(const UPolynomial& a, const UPolynomial& b);
  friend UPolynomial operator*(const UPolynomial& a, const UPolynomial& b);
  friend bool operator==(const UPolynomial& a, const UPolynomial& b);

  // Ascending powers in `var`, e.g. "1 + lambda^4".
  std::string to_string(const std::string& var = "lambda") const;

 private:
  void trim();
  void require_same_field(const UPolynomial& other) const;

  Field field_;
  std::vector<Scalar> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
UPolynomial upoly_gcd(const UPolynomial& a, const UPolynomial& b);

// deg(g / gcd(g, g')), minus one if exclude_zero and g(0) = 0.
// Over F_p this counts distinct roots only when g' is not identically zero on
// a repeated factor; callers keep degrees below p.
long distinct_root_count(const UPolynomial& g, bool exclude_zero);

bool is_squarefree(const UPolynomial& g);

}  // namespace wps
