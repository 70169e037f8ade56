#pragma once

#include "wps/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wps {

// N(t) / prod (1 - t^{a_i}), numerator coefficients ascending.
struct HilbertSeries {
  std::vector<BigInt> numerator;
  std::vector<std::int64_t> denominators;
};

// Throws InvalidArgument on a non-positive denominator exponent.
void validate_series(const HilbertSeries& s);

// c_0 .. c_N of the power series.
std::vector<BigInt> expand(const HilbertSeries& s, std::int64_t n);

// prod_j (1 - t^{d_j}) over prod (1 - t^{a_i}).
HilbertSeries complete_intersection_series(const std::vector<std::int64_t>& a,
                                           const std::vector<std::int64_t>& relation_degrees);

// Coefficients as "1 - t^6", "1 - 2t^2 + t^4".
std::string format_numerator(const std::vector<BigInt>& numerator);
// "(1 - t^6) / (1-t)(1-t^2)(1-t^3)"
std::string format_series(const HilbertSeries& s);

// l(nD) for a divisor of degree `divisor_degree` on a genus-g curve.
// Outside 0 < n deg <= 2g - 2 Riemann-Roch fixes the value; inside, the
// caller supplies it.
class EllSequence {
 public:
  // Throws InvalidOverride for keys outside the ambiguous range or values
  // below 1, InvalidArgument for a non-positive degree or negative genus.
  EllSequence(std::int64_t genus, std::int64_t divisor_degree, std::map<std::int64_t, std::int64_t> overrides = {});

  std::int64_t genus() const { return g_; }
  std::int64_t divisor_degree() const { return deg_; }
  const std::map<std::int64_t, std::int64_t>& overrides() const { return overrides_; }

  // AmbiguousLowDegree when an ambiguous value was not supplied.
  std::int64_t operator()(std::int64_t n) const;

  // n |-> l(k n D)
  EllSequence scaled(std::int64_t k) const;

 private:
  std::int64_t g_;
  std::int64_t deg_;
  std::map<std::int64_t, std::int64_t> overrides_;
};

std::int64_t ell(const EllSequence& e, std::int64_t n);

using CoefficientSource = std::function<BigInt(std::int64_t)>;

// N(t) = P(t) prod (1 - t^{a_i}) truncated at max_degree, after checking the
// next sum(a_i) coefficients vanish (NumeratorNotPolynomial otherwise).
std::vector<BigInt> numerator_from_sequence(const CoefficientSource& coeffs, const std::vector<std::int64_t>& a,
                                            std::int64_t max_degree);

// Relation degrees read off a numerator 1 - sum t^{d_j} + (higher syzygies):
// each negative coefficient before the first positive non-constant term
// contributes |c| copies of its degree.
std::vector<std::int64_t> relation_degrees(const std::vector<BigInt>& numerator);

struct DiscoveryRow {
  std::int64_t n = 0;
  std::int64_t ell = 0;
  std::int64_t products = 0;  // monomials of degree n in the generators found so far
  std::int64_t surplus = 0;   // ell - products
};

struct GeneratorDiscovery {
  std::vector<DiscoveryRow> rows;
  // Degrees of the generators found before the first deficit.
  std::vector<std::int64_t> generator_degrees;
  std::optional<std::int64_t> first_relation_degree;
};

// New generators in degree n = l(n) - (products of earlier generators), up to
// the first degree where products outnumber l(n).
GeneratorDiscovery discover_generators(const CoefficientSource& ell, std::int64_t max_n);

struct EmbeddingRow {
  std::int64_t k = 0;
  std::vector<std::int64_t> weights;
  std::vector<BigInt> numerator;
  std::vector<std::int64_t> relation_degrees;
};

// For each k, l(k n D) under the supplied weights, or the discovered ones
// when none are given for that k.
std::vector<EmbeddingRow> embedding_report(const EllSequence& e, const std::vector<std::int64_t>& ks,
                                           const std::map<std::int64_t, std::vector<std::int64_t>>& weights = {},
                                           std::int64_t max_degree = 40);

}  // namespace wps
