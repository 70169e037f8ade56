#pragma once

#include "wps/scalar.hpp"
#include "wps/upoly.hpp"
#include "wps/weights.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wps {

using Monomial = std::vector<std::uint32_t>;

std::int64_t weighted_degree(const Monomial& m, const Weight& a);

// Canonical term order: weighted degree first, then the exponent vector read
// from the last variable backwards. Under (1,2,3) in degree 6 this lists
// x^6, x^4y, x^2y^2, y^3, x^3z, xyz, z^2.
struct TermOrder {
  const Weight* weight = nullptr;
  bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

// Default variable names: x,y (2), x,y,z (3), w,x,y,z (4), x0.. otherwise.
std::vector<std::string> default_variable_names(std::size_t count);

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);

class WPolynomial {
 public:
  using TermMap = std::map<Monomial, Scalar>;

  WPolynomial(Weight weight, Field field) : weight_(std::move(weight)), field_(field) {}

  static WPolynomial constant(Weight weight, const Scalar& c);
  static WPolynomial monomial(Weight weight, const Scalar& c, Monomial m);
  // Variable i with coefficient 1.
  static WPolynomial variable(Weight weight, Field field, std::size_t i);

  const Weight& weight() const { return weight_; }
  const Field& field() const { return field_; }
  std::size_t variable_count() const { return weight_.size(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds c*m into the polynomial, dropping the term if it cancels.
  void add_term(const Monomial& m, const Scalar& c);
  Scalar coefficient(const Monomial& m) const;

  // Terms sorted by TermOrder.
  std::vector<std::pair<Monomial, Scalar>> sorted_terms() const;

  // Same terms, new grading.
  WPolynomial regraded(const Weight& weight) const;
  // Reduces every coefficient into F_p; throws DivisionByZero if p divides a
  // denominator.
  WPolynomial reduce(const Field& field) const;

  WPolynomial pow(std::uint64_t k) const;

  friend WPolynomial operator+(const WPolynomial& a, const WPolynomial& b);
  friend WPolynomial operator-(const WPolynomial& a, const WPolynomial& b);
  friend WPolynomial operator*(const WPolynomial& a, const WPolynomial& b);
  WPolynomial operator-() const;
  friend bool operator==(const WPolynomial& a, const WPolynomial& b);

  std::string to_string() const { return to_string(default_variable_names(variable_count())); }
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void require_compatible(const WPolynomial& other) const;

  Weight weight_;
  Field field_;
  TermMap terms_;
};

// Max of sum(a_i e_i) over the terms; ZeroPolynomial on zero.
std::int64_t weighted_degree(const WPolynomial& f);

// Common degree if every monomial agrees; ZeroPolynomial on zero.
std::optional<std::int64_t> is_weighted_homogeneous(const WPolynomial& f);

std::map<std::int64_t, WPolynomial> graded_decompose(const WPolynomial& f);

WPolynomial partial(const WPolynomial& f, std::size_t i);

Scalar evaluate(const WPolynomial& f, const std::vector<Scalar>& coords);

// x_i -> y_i^{a_i}; the result lives under the all-ones weight.
WPolynomial power_substitute(const WPolynomial& f);

// x_i = 0, x_{i+1} = 1, x_{i+2} = lambda, indices mod 3.
UPolynomial restrict_to_edge(const WPolynomial& f, std::size_t i);

}  // namespace wps
