#pragma once

#include "wps/scalar.hpp"
#include "wps/weights.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wps {

// A point |x0:...:xn| of P(a): a nonzero coordinate vector up to the
// weighted scaling action.
class WPoint {
 public:
  // Throws InvalidArgument on the zero vector, Mismatch on a length
  // mismatch, FieldMismatch on mixed coordinates.
  WPoint(std::vector<Scalar> coords, Weight weight);

  // Colon-separated integers or num/den, e.g. "1:0:2".
  static WPoint parse(std::string_view text, const Weight& weight, const Field& field);

  const std::vector<Scalar>& coords() const { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  const Weight& weight() const { return weight_; }
  Field field() const { return coords_.front().field(); }
  std::size_t size() const { return coords_.size(); }

  // lambda . x = (lambda^{a_0} x_0, ...)
  WPoint scaled(const Scalar& lambda) const;

  // Coordinatewise; for deterministic ordering only.
  friend bool operator==(const WPoint& p, const WPoint& q) {
    return p.weight_ == q.weight_ && p.coords_ == q.coords_;
  }
  friend bool operator<(const WPoint& p, const WPoint& q);

  // "|1:0:2|"
  std::string to_string() const;

 private:
  std::vector<Scalar> coords_;
  Weight weight_;
};

// Equality over the algebraic closure via the supports and the binomials
// p_i^{a_k} q_k^{a_i} = p_k^{a_i} q_i^{a_k}. Exact for well-formed weights;
// the binomials cannot see roots of unity shared by a non-coprime pair.
bool eq_geometric(const WPoint& p, const WPoint& q);

// Some lambda in the base field's unit group carries p to q. Over the
// rationals needs a nonzero coordinate of weight 1 (Unsupported otherwise).
bool eq_rational(const WPoint& p, const WPoint& q);

struct NormalizedPoint {
  WPoint point;
  bool canonical = false;
};

// F_p: the lexicographically least orbit member. Q: scaled so the first
// nonzero weight-1 coordinate is 1; otherwise the input, flagged
// non-canonical.
NormalizedPoint normalize(const WPoint& p);

// [y0:...:yn] |-> |y0^{a0}:...:yn^{an}|. y must carry the all-ones weight.
WPoint cover_project(const WPoint& y, const Weight& a);

// Throws PrimeUnsuitable unless every a_i divides p - 1.
void require_roots_of_unity(const Weight& a, std::uint64_t p);

// Number of g in mu_{a0} x ... x mu_{an} fixing y as a point of straight
// projective space.
std::int64_t stabilizer_order(const WPoint& y, const Weight& a, std::uint64_t p);

// Distinct points of the G-orbit of y, each scaled so its first nonzero
// coordinate is 1, sorted.
std::vector<WPoint> orbit(const WPoint& y, const Weight& a, std::uint64_t p);

// Scales x so coordinate i becomes 1 and drops it. Over F_p the smallest
// residue lambda with lambda^{a_i} x_i = 1 is used.
std::vector<Scalar> patch_representative(const WPoint& x, std::size_t i);

// Every choice of lambda, one representative each.
std::vector<std::vector<Scalar>> patch_representatives(const WPoint& x, std::size_t i);

// Whether u and v on patch i differ by the type 1/a_i action of mu_{a_i}.
bool patch_equivalent(const std::vector<Scalar>& u, const std::vector<Scalar>& v, const Weight& a,
                      std::size_t i);

}  // namespace wps
