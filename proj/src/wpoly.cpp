#include "wps/wpoly.hpp"

#include "wps/error.hpp"

#include <algorithm>

namespace wps {

std::int64_t weighted_degree(const Monomial& m, const Weight& a) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += a[i] * static_cast<std::int64_t>(m[i]);
  return d;
}

bool TermOrder::operator()(const Monomial& lhs, const Monomial& rhs) const {
  auto dl = weighted_degree(lhs, *weight);
  auto dr = weighted_degree(rhs, *weight);
  if (dl != dr) return dl < dr;
  return std::lexicographical_compare(lhs.rbegin(), lhs.rend(), rhs.rbegin(), rhs.rend());
}

std::vector<std::string> default_variable_names(std::size_t count) {
  switch (count) {
    case 2: return {"x", "y"};
    case 3: return {"x", "y", "z"};
    case 4: return {"w", "x", "y", "z"};
    default: break;
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

WPolynomial WPolynomial::constant(Weight weight, const Scalar& c) {
  Monomial zero(weight.size(), 0);
  return monomial(std::move(weight), c, std::move(zero));
}

WPolynomial WPolynomial::monomial(Weight weight, const Scalar& c, Monomial m) {
  if (m.size() != weight.size()) throw Error(Errc::Mismatch, "monomial length differs from weight length");
  WPolynomial f(std::move(weight), c.field());
  f.add_term(m, c);
  return f;
}

WPolynomial WPolynomial::variable(Weight weight, Field field, std::size_t i) {
  Monomial m(weight.size(), 0);
  m.at(i) = 1;
  return monomial(std::move(weight), Scalar::one(field), std::move(m));
}

void WPolynomial::add_term(const Monomial& m, const Scalar& c) {
  if (m.size() != weight_.size()) throw Error(Errc::Mismatch, "monomial length differs from weight length");
  if (!(c.field() == field_)) {
    throw Error(Errc::FieldMismatch, "coefficient in " + c.field().to_string() + ", polynomial over " +
                                         field_.to_string());
  }
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar WPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

std::vector<std::pair<Monomial, Scalar>> WPolynomial::sorted_terms() const {
  std::vector<std::pair<Monomial, Scalar>> out(terms_.begin(), terms_.end());
  TermOrder order{&weight_};
  std::sort(out.begin(), out.end(), [&](const auto& l, const auto& r) { return order(l.first, r.first); });
  return out;
}

WPolynomial WPolynomial::regraded(const Weight& weight) const {
  if (weight.size() != weight_.size()) throw Error(Errc::Mismatch, "regrading changes the variable count");
  WPolynomial out(weight, field_);
  out.terms_ = terms_;
  return out;
}

WPolynomial WPolynomial::reduce(const Field& field) const {
  WPolynomial out(weight_, field);
  for (const auto& [m, c] : terms_) {
    if (const Rational* r = c.as_rational()) {
      out.add_term(m, Scalar::from_rational(field, *r));
    } else if (c.field() == field) {
      out.add_term(m, c);
    } else {
      throw Error(Errc::FieldMismatch, "cannot reduce " + field_.to_string() + " into " + field.to_string());
    }
  }
  return out;
}

void WPolynomial::require_compatible(const WPolynomial& other) const {
  if (!(field_ == other.field_)) {
    throw Error(Errc::FieldMismatch, "polynomials over " + field_.to_string() + " and " + other.field_.to_string());
  }
  if (!(weight_ == other.weight_)) {
    throw Error(Errc::Mismatch, "polynomials under weights " + weight_.to_string() + " and " + other.weight_.to_string());
  }
}

WPolynomial operator+(const WPolynomial& a, const WPolynomial& b) {
  a.require_compatible(b);
  WPolynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

WPolynomial operator-(const WPolynomial& a, const WPolynomial& b) {
  a.require_compatible(b);
  WPolynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
  return out;
}

WPolynomial operator*(const WPolynomial& a, const WPolynomial& b) {
  a.require_compatible(b);
  WPolynomial out(a.weight_, a.field_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

WPolynomial WPolynomial::operator-() const {
  WPolynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const WPolynomial& a, const WPolynomial& b) {
  return a.weight_ == b.weight_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

WPolynomial WPolynomial::pow(std::uint64_t k) const {
  WPolynomial result = constant(weight_, Scalar::one(field_));
  WPolynomial base = *this;
  while (k != 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

std::string WPolynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : sorted_terms()) {
    std::string cs = c.to_string();
    bool negative = cs[0] == '-';
    if (negative) cs.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    bool unit = std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
    if (unit) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += monomial_to_string(m, names);
    }
  }
  return out;
}

std::int64_t weighted_degree(const WPolynomial& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "the zero polynomial has no degree");
  std::int64_t d = 0;
  for (const auto& [m, c] : f.terms()) d = std::max(d, weighted_degree(m, f.weight()));
  return d;
}

std::optional<std::int64_t> is_weighted_homogeneous(const WPolynomial& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "homogeneity of the zero polynomial");
  std::optional<std::int64_t> d;
  for (const auto& [m, c] : f.terms()) {
    auto e = weighted_degree(m, f.weight());
    if (d && *d != e) return std::nullopt;
    d = e;
  }
  return d;
}

std::map<std::int64_t, WPolynomial> graded_decompose(const WPolynomial& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "graded decomposition of the zero polynomial");
  std::map<std::int64_t, WPolynomial> parts;
  for (const auto& [m, c] : f.terms()) {
    auto d = weighted_degree(m, f.weight());
    auto it = parts.try_emplace(d, f.weight(), f.field()).first;
    it->second.add_term(m, c);
  }
  return parts;
}

WPolynomial partial(const WPolynomial& f, std::size_t i) {
  if (i >= f.variable_count()) throw Error(Errc::InvalidArgument, "variable index out of range");
  WPolynomial out(f.weight(), f.field());
  for (const auto& [m, c] : f.terms()) {
    if (m[i] == 0) continue;
    Monomial dm = m;
    --dm[i];
    out.add_term(dm, c * Scalar::from_int(f.field(), m[i]));
  }
  return out;
}

Scalar evaluate(const WPolynomial& f, const std::vector<Scalar>& coords) {
  if (coords.size() != f.variable_count()) throw Error(Errc::Mismatch, "coordinate count differs from variable count");
  for (const auto& x : coords) {
    if (!(x.field() == f.field())) {
      throw Error(Errc::FieldMismatch, "point over " + x.field().to_string() + ", polynomial over " +
                                           f.field().to_string());
    }
  }
  Scalar acc = Scalar::zero(f.field());
  for (const auto& [m, c] : f.terms()) {
    Scalar t = c;
    for (std::size_t i = 0; i < m.size() && !t.is_zero(); ++i) {
      if (m[i]) t *= coords[i].pow(m[i]);
    }
    acc += t;
  }
  return acc;
}

WPolynomial power_substitute(const WPolynomial& f) {
  if (f.is_zero() || !is_weighted_homogeneous(f)) {
    throw Error(Errc::NotHomogeneous, "the power map needs a weighted-homogeneous polynomial");
  }
  WPolynomial out(Weight::straight(f.variable_count()), f.field());
  for (const auto& [m, c] : f.terms()) {
    Monomial e = m;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] *= static_cast<std::uint32_t>(f.weight()[i]);
    out.add_term(e, c);
  }
  return out;
}

UPolynomial restrict_to_edge(const WPolynomial& f, std::size_t i) {
  if (f.variable_count() != 3) throw Error(Errc::InvalidArgument, "edge restriction needs three variables");
  if (i > 2) throw Error(Errc::InvalidArgument, "edge index must be 0, 1 or 2");
  const std::size_t k = (i + 2) % 3;
  std::vector<Scalar> coeffs;
  for (const auto& [m, c] : f.terms()) {
    if (m[i] != 0) continue;
    if (coeffs.size() <= m[k]) coeffs.resize(m[k] + 1, Scalar::zero(f.field()));
    coeffs[m[k]] += c;
  }
  return UPolynomial(f.field(), std::move(coeffs));
}

}  // namespace wps
