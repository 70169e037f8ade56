#include "wps/hilbert.hpp"

#include "wps/error.hpp"

#include <numeric>

namespace wps {

namespace {

constexpr std::int64_t kMaxTerms = 1'000'000;

void trim(std::vector<BigInt>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Multiplies v in place by (1 - t^a), keeping the length.
void times_one_minus(std::vector<BigInt>& v, std::int64_t a) {
  for (std::size_t n = v.size(); n-- > static_cast<std::size_t>(a);) v[n] -= v[n - static_cast<std::size_t>(a)];
}

std::string term(const BigInt& c, std::int64_t k, bool first) {
  std::string out;
  BigInt mag = c < 0 ? BigInt(-c) : c;
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (k == 0 || mag != 1) out += mag.str();
  if (k >= 1) out += "t";
  if (k >= 2) out += "^" + std::to_string(k);
  return out;
}

}  // namespace

void validate_series(const HilbertSeries& s) {
  for (auto a : s.denominators) {
    if (a < 1) throw Error(Errc::InvalidArgument, "denominator exponents must be positive");
  }
}

std::vector<BigInt> expand(const HilbertSeries& s, std::int64_t n) {
  validate_series(s);
  if (n < 0) throw Error(Errc::InvalidArgument, "expansion order must be non-negative");
  if (n >= kMaxTerms) throw Error(Errc::TooLarge, "expansion order too large");
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t k = 0; k < s.numerator.size() && k < c.size(); ++k) c[k] = s.numerator[k];
  // Dividing by (1 - t^a) is a prefix sum with stride a.
  for (auto a : s.denominators) {
    for (std::size_t k = static_cast<std::size_t>(a); k < c.size(); ++k) c[k] += c[k - static_cast<std::size_t>(a)];
  }
  return c;
}

HilbertSeries complete_intersection_series(const std::vector<std::int64_t>& a,
                                           const std::vector<std::int64_t>& relation_degrees) {
  std::int64_t total = 0;
  for (auto d : relation_degrees) {
    if (d < 1) throw Error(Errc::InvalidArgument, "relation degrees must be positive");
    total += d;
  }
  if (total >= kMaxTerms) throw Error(Errc::TooLarge, "relation degrees too large");
  std::vector<BigInt> num(static_cast<std::size_t>(total) + 1, 0);
  num[0] = 1;
  for (auto d : relation_degrees) times_one_minus(num, d);
  trim(num);
  HilbertSeries s{num, a};
  validate_series(s);
  return s;
}

std::string format_numerator(const std::vector<BigInt>& numerator) {
  std::string out;
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    if (numerator[k] == 0) continue;
    out += term(numerator[k], static_cast<std::int64_t>(k), out.empty());
  }
  return out.empty() ? "0" : out;
}

std::string format_series(const HilbertSeries& s) {
  std::string out = "(" + format_numerator(s.numerator) + ") /";
  if (s.denominators.empty()) return out + " 1";
  out += " ";
  for (auto a : s.denominators) out += a == 1 ? "(1-t)" : "(1-t^" + std::to_string(a) + ")";
  return out;
}

EllSequence::EllSequence(std::int64_t genus, std::int64_t divisor_degree, std::map<std::int64_t, std::int64_t> overrides)
    : g_(genus), deg_(divisor_degree), overrides_(std::move(overrides)) {
  if (g_ < 0) throw Error(Errc::InvalidArgument, "genus must be non-negative");
  if (deg_ < 1) throw Error(Errc::InvalidArgument, "divisor degree must be positive");
  for (const auto& [n, v] : overrides_) {
    if (n < 1 || n * deg_ > 2 * g_ - 2) {
      throw Error(Errc::InvalidOverride, "l(" + std::to_string(n) + "D) is fixed by Riemann-Roch; no override allowed");
    }
    if (v < 1) throw Error(Errc::InvalidOverride, "override for n = " + std::to_string(n) + " must be at least 1");
  }
}

std::int64_t EllSequence::operator()(std::int64_t n) const {
  if (n < 0) throw Error(Errc::InvalidArgument, "l(nD) needs n >= 0");
  if (n == 0) return 1;
  if (n * deg_ > 2 * g_ - 2) return n * deg_ + 1 - g_;
  auto it = overrides_.find(n);
  if (it == overrides_.end()) {
    throw Error(Errc::AmbiguousLowDegree, "l(" + std::to_string(n) + "D) depends on the divisor; supply an override");
  }
  return it->second;
}

EllSequence EllSequence::scaled(std::int64_t k) const {
  if (k < 1) throw Error(Errc::InvalidArgument, "scale must be positive");
  std::map<std::int64_t, std::int64_t> o;
  for (std::int64_t n = 1; n * k * deg_ <= 2 * g_ - 2; ++n) {
    auto it = overrides_.find(n * k);
    if (it != overrides_.end()) o[n] = it->second;
  }
  return EllSequence(g_, deg_ * k, o);
}

std::int64_t ell(const EllSequence& e, std::int64_t n) { return e(n); }

std::vector<BigInt> numerator_from_sequence(const CoefficientSource& coeffs, const std::vector<std::int64_t>& a,
                                            std::int64_t max_degree) {
  if (max_degree < 0) throw Error(Errc::InvalidArgument, "max degree must be non-negative");
  std::int64_t horizon = max_degree;
  for (auto x : a) {
    if (x < 1) throw Error(Errc::InvalidArgument, "denominator exponents must be positive");
    horizon += x;
  }
  if (horizon >= kMaxTerms) throw Error(Errc::TooLarge, "probe horizon too large");
  std::vector<BigInt> v;
  for (std::int64_t n = 0; n <= horizon; ++n) v.push_back(coeffs(n));
  for (auto x : a) times_one_minus(v, x);
  for (std::int64_t n = max_degree + 1; n <= horizon; ++n) {
    if (v[static_cast<std::size_t>(n)] != 0) {
      throw Error(Errc::NumeratorNotPolynomial, "numerator has a nonzero t^" + std::to_string(n) +
                                                    " coefficient beyond degree " + std::to_string(max_degree));
    }
  }
  v.resize(static_cast<std::size_t>(max_degree) + 1);
  trim(v);
  return v;
}

std::vector<std::int64_t> relation_degrees(const std::vector<BigInt>& numerator) {
  std::vector<std::int64_t> out;
  for (std::size_t k = 1; k < numerator.size(); ++k) {
    if (numerator[k] > 0) break;
    for (BigInt c = numerator[k]; c < 0; ++c) out.push_back(static_cast<std::int64_t>(k));
  }
  return out;
}

GeneratorDiscovery discover_generators(const CoefficientSource& ell, std::int64_t max_n) {
  GeneratorDiscovery g;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    auto products = expand(HilbertSeries{{1}, g.generator_degrees}, n).back();
    BigInt l = ell(n);
    DiscoveryRow row{n, l.convert_to<std::int64_t>(), products.convert_to<std::int64_t>(), 0};
    row.surplus = row.ell - row.products;
    g.rows.push_back(row);
    if (row.surplus < 0) {
      g.first_relation_degree = n;
      break;
    }
    for (std::int64_t k = 0; k < row.surplus; ++k) g.generator_degrees.push_back(n);
  }
  return g;
}

std::vector<EmbeddingRow> embedding_report(const EllSequence& e, const std::vector<std::int64_t>& ks,
                                           const std::map<std::int64_t, std::vector<std::int64_t>>& weights,
                                           std::int64_t max_degree) {
  std::vector<EmbeddingRow> rows;
  for (auto k : ks) {
    EllSequence seq = e.scaled(k);
    CoefficientSource src = [&](std::int64_t n) { return BigInt(seq(n)); };
    EmbeddingRow row;
    row.k = k;
    auto it = weights.find(k);
    if (it != weights.end()) {
      row.weights = it->second;
    } else {
      row.weights = discover_generators(src, max_degree).generator_degrees;
    }
    row.numerator = numerator_from_sequence(src, row.weights, max_degree);
    row.relation_degrees = relation_degrees(row.numerator);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace wps
