#include "wps/geometry.hpp"

#include "wps/error.hpp"
#include "wps/prime_field.hpp"

#include <algorithm>
#include <set>

namespace wps {

namespace {

Scalar parse_coordinate(std::string_view text, const Field& field) {
  auto parse_big = [&](std::string_view s) {
    std::string t(s);
    bool neg = !t.empty() && t[0] == '-';
    std::string digits = neg ? t.substr(1) : t;
    if (digits.empty() || digits.size() > 200 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw Error(Errc::InvalidArgument, "malformed coordinate '" + std::string(text) + "'");
    }
    BigInt v(digits);
    return neg ? BigInt(-v) : v;
  };
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Scalar::from_bigint(field, parse_big(text));
  BigInt den = parse_big(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::DivisionByZero, "coordinate with zero denominator");
  return Scalar::from_rational(field, Rational(parse_big(text.substr(0, slash)), den));
}

void require_same_space(const WPoint& p, const WPoint& q) {
  if (!(p.weight() == q.weight())) {
    throw Error(Errc::Mismatch, "points of " + p.weight().to_string() + " and " + q.weight().to_string());
  }
  if (!(p.field() == q.field())) {
    throw Error(Errc::Mismatch, "points over " + p.field().to_string() + " and " + q.field().to_string());
  }
}

std::uint64_t modulus_of(const WPoint& y) {
  if (!y.field().is_prime()) throw Error(Errc::Unsupported, "group actions are computed over F_p only");
  return y.field().characteristic();
}

bool same_straight_point(const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t k = i + 1; k < u.size(); ++k) {
      if (!(u[i] * v[k] == u[k] * v[i])) return false;
    }
  }
  return true;
}

std::vector<Scalar> straight_normal(std::vector<Scalar> v) {
  auto it = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
  Scalar inv = it->inverse();
  for (auto& s : v) s *= inv;
  return v;
}

// Calls visit(sigma) for every sigma in mu_{a0} x ... x mu_{an} inside F_p.
template <typename Visit>
void for_each_group_element(const Weight& a, std::uint64_t p, Visit visit) {
  std::vector<std::vector<std::uint64_t>> roots;
  for (auto x : a.entries()) roots.push_back(roots_of_unity(static_cast<std::uint64_t>(x), p));
  std::vector<std::size_t> idx(a.size(), 0);
  std::vector<Scalar> sigma(a.size(), Scalar::one(Field::prime(p)));
  while (true) {
    for (std::size_t i = 0; i < a.size(); ++i) sigma[i] = PrimeFieldElem(static_cast<long long>(roots[i][idx[i]]), p);
    visit(sigma);
    std::size_t i = 0;
    while (i < a.size() && ++idx[i] == roots[i].size()) idx[i++] = 0;
    if (i == a.size()) break;
  }
}

}  // namespace

WPoint::WPoint(std::vector<Scalar> coords, Weight weight) : coords_(std::move(coords)), weight_(std::move(weight)) {
  if (coords_.size() != weight_.size()) throw Error(Errc::Mismatch, "coordinate count differs from weight length");
  for (const auto& c : coords_) {
    if (!(c.field() == coords_.front().field())) throw Error(Errc::FieldMismatch, "coordinates over different fields");
  }
  if (std::all_of(coords_.begin(), coords_.end(), [](const Scalar& s) { return s.is_zero(); })) {
    throw Error(Errc::InvalidArgument, "the origin is not a point of weighted projective space");
  }
}

WPoint WPoint::parse(std::string_view text, const Weight& weight, const Field& field) {
  std::vector<Scalar> coords;
  std::size_t start = 0;
  while (true) {
    std::size_t colon = text.find(':', start);
    coords.push_back(parse_coordinate(text.substr(start, colon == text.npos ? text.npos : colon - start), field));
    if (colon == text.npos) break;
    start = colon + 1;
  }
  return WPoint(std::move(coords), weight);
}

WPoint WPoint::scaled(const Scalar& lambda) const {
  std::vector<Scalar> out = coords_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= lambda.pow(static_cast<std::uint64_t>(weight_[i]));
  return WPoint(std::move(out), weight_);
}

bool operator<(const WPoint& p, const WPoint& q) {
  return std::lexicographical_compare(p.coords_.begin(), p.coords_.end(), q.coords_.begin(), q.coords_.end());
}

std::string WPoint::to_string() const {
  std::string out = "|";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ":";
    out += coords_[i].to_string();
  }
  return out + "|";
}

bool eq_geometric(const WPoint& p, const WPoint& q) {
  require_same_space(p, q);
  const Weight& a = p.weight();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero() != q[i].is_zero()) return false;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t k = i + 1; k < p.size(); ++k) {
      auto ai = static_cast<std::uint64_t>(a[i]);
      auto ak = static_cast<std::uint64_t>(a[k]);
      if (!(p[i].pow(ak) * q[k].pow(ai) == p[k].pow(ai) * q[i].pow(ak))) return false;
    }
  }
  return true;
}

bool eq_rational(const WPoint& p, const WPoint& q) {
  require_same_space(p, q);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero() != q[i].is_zero()) return false;
  }
  const Field field = p.field();
  if (field.is_prime()) {
    const std::uint64_t m = field.characteristic();
    for (std::uint64_t l = 1; l < m; ++l) {
      if (p.scaled(PrimeFieldElem(static_cast<long long>(l), m)) == q) return true;
    }
    return false;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.weight()[i] == 1 && !p[i].is_zero()) return p.scaled(q[i] / p[i]) == q;
  }
  throw Error(Errc::Unsupported, "rational equality needs a nonzero coordinate of weight 1");
}

NormalizedPoint normalize(const WPoint& p) {
  const Field field = p.field();
  if (field.is_prime()) {
    const std::uint64_t m = field.characteristic();
    WPoint best = p;
    for (std::uint64_t l = 2; l < m; ++l) {
      WPoint candidate = p.scaled(PrimeFieldElem(static_cast<long long>(l), m));
      if (candidate < best) best = candidate;
    }
    return {best, true};
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.weight()[i] == 1 && !p[i].is_zero()) return {p.scaled(p[i].inverse()), true};
  }
  return {p, false};
}

WPoint cover_project(const WPoint& y, const Weight& a) {
  if (!y.weight().is_straight() || y.size() != a.size()) {
    throw Error(Errc::Mismatch, "cover projection starts from straight projective space of matching dimension");
  }
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < y.size(); ++i) out.push_back(y[i].pow(static_cast<std::uint64_t>(a[i])));
  return WPoint(std::move(out), a);
}

void require_roots_of_unity(const Weight& a, std::uint64_t p) {
  for (auto x : a.entries()) {
    if ((p - 1) % static_cast<std::uint64_t>(x) != 0) {
      throw Error(Errc::PrimeUnsuitable, "p = " + std::to_string(p) + " is not 1 mod " + std::to_string(x));
    }
  }
}

std::int64_t stabilizer_order(const WPoint& y, const Weight& a, std::uint64_t p) {
  if (y.size() != a.size()) throw Error(Errc::Mismatch, "point and weight differ in length");
  if (modulus_of(y) != p) throw Error(Errc::Mismatch, "point is not over F_" + std::to_string(p));
  require_roots_of_unity(a, p);
  std::int64_t count = 0;
  for_each_group_element(a, p, [&](const std::vector<Scalar>& sigma) {
    std::vector<Scalar> moved = y.coords();
    for (std::size_t i = 0; i < moved.size(); ++i) moved[i] *= sigma[i];
    if (same_straight_point(moved, y.coords())) ++count;
  });
  return count;
}

std::vector<WPoint> orbit(const WPoint& y, const Weight& a, std::uint64_t p) {
  if (y.size() != a.size()) throw Error(Errc::Mismatch, "point and weight differ in length");
  if (modulus_of(y) != p) throw Error(Errc::Mismatch, "point is not over F_" + std::to_string(p));
  require_roots_of_unity(a, p);
  std::set<std::vector<Scalar>> seen;
  for_each_group_element(a, p, [&](const std::vector<Scalar>& sigma) {
    std::vector<Scalar> moved = y.coords();
    for (std::size_t i = 0; i < moved.size(); ++i) moved[i] *= sigma[i];
    seen.insert(straight_normal(std::move(moved)));
  });
  std::vector<WPoint> out;
  for (const auto& v : seen) out.emplace_back(v, y.weight());
  return out;
}

std::vector<std::vector<Scalar>> patch_representatives(const WPoint& x, std::size_t i) {
  if (i >= x.size()) throw Error(Errc::InvalidArgument, "patch index out of range");
  if (x[i].is_zero()) throw Error(Errc::NotOnPatch, x.to_string() + " has coordinate " + std::to_string(i) + " = 0");
  const Field field = x.field();
  std::vector<Scalar> lambdas;
  if (field.is_prime()) {
    const std::uint64_t m = field.characteristic();
    for (std::uint64_t l = 1; l < m; ++l) {
      PrimeFieldElem lam(static_cast<long long>(l), m);
      if ((Scalar(lam).pow(static_cast<std::uint64_t>(x.weight()[i])) * x[i]).is_one()) lambdas.emplace_back(lam);
    }
  } else if (x.weight()[i] == 1) {
    lambdas.push_back(x[i].inverse());
  } else {
    throw Error(Errc::Unsupported, "over the rationals only weight-1 patches are dehomogenized");
  }
  if (lambdas.empty()) {
    throw Error(Errc::Unsupported, "no " + std::to_string(x.weight()[i]) + "-th root of 1/x_" + std::to_string(i) +
                                       " in " + field.to_string());
  }
  std::vector<std::vector<Scalar>> reps;
  for (const auto& lam : lambdas) {
    WPoint s = x.scaled(lam);
    std::vector<Scalar> v;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k != i) v.push_back(s[k]);
    }
    reps.push_back(std::move(v));
  }
  return reps;
}

std::vector<Scalar> patch_representative(const WPoint& x, std::size_t i) {
  return patch_representatives(x, i).front();
}

bool patch_equivalent(const std::vector<Scalar>& u, const std::vector<Scalar>& v, const Weight& a, std::size_t i) {
  if (u.size() + 1 != a.size() || v.size() != u.size()) throw Error(Errc::Mismatch, "patch coordinates of wrong length");
  if (u.empty()) return true;
  const Field field = u.front().field();
  std::vector<std::int64_t> rest;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k != i) rest.push_back(a[k]);
  }
  std::vector<Scalar> sigmas;
  if (field.is_prime()) {
    const std::uint64_t p = field.characteristic();
    require_roots_of_unity(Weight({a[i], 1}), p);
    for (auto r : roots_of_unity(static_cast<std::uint64_t>(a[i]), p)) {
      sigmas.emplace_back(PrimeFieldElem(static_cast<long long>(r), p));
    }
  } else {
    // Rational roots of unity are +-1.
    sigmas.emplace_back(Rational(1));
    if (a[i] % 2 == 0) sigmas.emplace_back(Rational(-1));
  }
  for (const auto& s : sigmas) {
    bool all = true;
    for (std::size_t k = 0; k < u.size() && all; ++k) {
      all = s.pow(static_cast<std::uint64_t>(rest[k])) * u[k] == v[k];
    }
    if (all) return true;
  }
  return false;
}

}  // namespace wps
