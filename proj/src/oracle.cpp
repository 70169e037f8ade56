#include "wps/oracle.hpp"

#include "wps/cli/parse.hpp"
#include "wps/error.hpp"
#include "wps/prime_field.hpp"
#include "wps/truncation.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <thread>

namespace wps {

namespace {

using json = nlohmann::json;
using Residues = std::vector<std::uint64_t>;

std::uint64_t checked_power(std::uint64_t p, std::size_t n, std::uint64_t limit) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= p;
    if (total > limit) {
      throw Error(Errc::TooLarge, "p^" + std::to_string(n) + " exceeds " + std::to_string(limit));
    }
  }
  return total;
}

// table[l][i] = l^{a_i} mod p
std::vector<Residues> power_table(const Weight& a, std::uint64_t p) {
  std::vector<Residues> t(p, Residues(a.size(), 0));
  for (std::uint64_t l = 1; l < p; ++l) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      t[l][i] = PrimeFieldElem(static_cast<long long>(l), p).pow(static_cast<std::uint64_t>(a[i])).residue();
    }
  }
  return t;
}

WPoint to_point(const Residues& v, const Weight& a, std::uint64_t p) {
  std::vector<Scalar> coords;
  for (auto r : v) coords.emplace_back(PrimeFieldElem(static_cast<long long>(r), p));
  return WPoint(std::move(coords), a);
}

// Calls visit(v) for every nonzero v in F_p^n, lexicographically.
void for_each_vector(std::size_t n, std::uint64_t p, const std::function<void(const Residues&)>& visit) {
  Residues v(n, 0);
  while (true) {
    std::size_t i = n;
    while (i > 0 && ++v[i - 1] == p) v[--i] = 0;
    if (i == 0) return;
    visit(v);
  }
}

json weight_json(const Weight& a) { return a.entries(); }

json point_json(const WPoint& x) {
  json arr = json::array();
  for (const auto& c : x.coords()) arr.push_back(c.to_string());
  return arr;
}

json monomial_json(const Monomial& m) { return m; }

}  // namespace

std::vector<WPoint> enumerate_wps_points(const Weight& a, std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  checked_power(p, a.size(), 10'000'000);
  const auto table = power_table(a, p);
  std::vector<WPoint> out;
  Residues scaled(a.size());
  for_each_vector(a.size(), p, [&](const Residues& v) {
    for (std::uint64_t l = 2; l < p; ++l) {
      for (std::size_t i = 0; i < v.size(); ++i) scaled[i] = table[l][i] * v[i] % p;
      if (scaled < v) return;
    }
    out.push_back(to_point(v, a, p));
  });
  return out;
}

bool closure_equal(const WPoint& x, const WPoint& y) {
  if (!(x.weight() == y.weight()) || !(x.field() == y.field())) throw Error(Errc::Mismatch, "points of different spaces");
  if (!x.field().is_prime()) throw Error(Errc::Unsupported, "closure equality is scanned over F_p only");
  const std::uint64_t p = x.field().characteristic();
  const Weight& a = x.weight();
  const auto L = static_cast<std::uint64_t>(a.lcm());
  if (L % p == 0) throw Error(Errc::PrimeUnsuitable, "p divides a weight; mu_N is not cyclic of order N");
  const std::uint64_t N = (p - 1) * L;
  const std::uint64_t g = primitive_root(p);
  std::vector<std::uint64_t> dlog(p, 0);
  std::uint64_t acc = 1;
  for (std::uint64_t e = 0; e + 1 < p; ++e) {
    dlog[acc] = e;
    acc = acc * g % p;
  }
  // zeta generates mu_N with zeta^L = g; lambda = zeta^k gives
  // lambda^{a_i} = g^{e_i} iff k a_i = L e_i (mod N).
  std::vector<std::pair<std::uint64_t, std::uint64_t>> constraints;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool xz = x[i].is_zero();
    if (xz != y[i].is_zero()) return false;
    if (xz) continue;
    Scalar ratio = y[i] / x[i];
    constraints.emplace_back(static_cast<std::uint64_t>(a[i]) % N, L * dlog[ratio.as_prime()->residue()] % N);
  }
  for (std::uint64_t k = 0; k < N; ++k) {
    bool ok = std::all_of(constraints.begin(), constraints.end(),
                          [&](const auto& c) { return (k * c.first) % N == c.second; });
    if (ok) return true;
  }
  return false;
}

PointEqualityReport verify_point_equality(const Weight& a, std::uint64_t p) {
  checked_power(p, a.size(), 1'000'000);
  const auto points = enumerate_wps_points(a, p);
  PointEqualityReport r;
  r.points = static_cast<std::int64_t>(points.size());
  for (const auto& x : points) {
    for (const auto& y : points) {
      ++r.pairs;
      bool truth = closure_equal(x, y);
      if (truth) ++r.equal_pairs;
      if (eq_geometric(x, y) != truth) {
        ++r.mismatch_count;
        if (r.mismatches.size() < 20) r.mismatches.emplace_back(x, y);
      }
    }
  }
  return r;
}

OrbitStabilizerReport verify_orbit_stabilizer(const Weight& a, std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  require_roots_of_unity(a, p);
  checked_power(p, a.size(), 1'000'000);
  OrbitStabilizerReport r;
  r.group_order = a.product();
  const Weight straight = Weight::straight(a.size());
  for_each_vector(a.size(), p, [&](const Residues& v) {
    // One representative per line: first nonzero coordinate equal to 1.
    auto first = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
    if (*first != 1) return;
    ++r.points;
    WPoint y = to_point(v, straight, p);
    auto product = static_cast<std::int64_t>(orbit(y, a, p).size()) * stabilizer_order(y, a, p);
    if (product != r.group_order) r.violations.push_back(y);
  });
  return r;
}

VeroneseReport verify_veronese(const Weight& a, std::int64_t d, std::int64_t cap) {
  VeroneseReport r;
  r.cap = cap;
  r.generators = veronese_generators(a, d, cap);

  auto degree = [&](const Monomial& m) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) s += a[i] * m[i];
    return s;
  };
  auto leq = [](const Monomial& g, const Monomial& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (g[i] > m[i]) return false;
    }
    return true;
  };

  // Box enumeration of every exponent vector with degree <= cap.
  std::vector<Monomial> box;
  Monomial cur(a.size(), 0);
  std::function<void(std::size_t, std::int64_t)> fill = [&](std::size_t i, std::int64_t used) {
    if (i == a.size()) {
      box.push_back(cur);
      return;
    }
    for (std::int64_t e = 0; used + e * a[i] <= cap; ++e) {
      cur[i] = static_cast<std::uint32_t>(e);
      fill(i + 1, used + e * a[i]);
    }
    cur[i] = 0;
  };
  fill(0, 0);

  for (const auto& g : r.generators) {
    bool bad = degree(g) % d != 0 || degree(g) == 0;
    // Decomposable if a proper nonzero sub-monomial also has degree = 0 mod d.
    for (const auto& m : box) {
      if (bad) break;
      if (m != g && degree(m) > 0 && degree(m) % d == 0 && leq(m, g)) bad = true;
    }
    if (bad) r.bad_generators.push_back(g);
  }

  std::map<Monomial, bool> memo;
  std::function<bool(const Monomial&)> factors = [&](const Monomial& m) -> bool {
    if (std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; })) return true;
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& g : r.generators) {
      if (!leq(g, m)) continue;
      Monomial rest = m;
      for (std::size_t i = 0; i < m.size(); ++i) rest[i] -= g[i];
      if (factors(rest)) {
        ok = true;
        break;
      }
    }
    memo.emplace(m, ok);
    return ok;
  };
  for (const auto& m : box) {
    auto deg = degree(m);
    if (deg == 0 || deg % d != 0) continue;
    ++r.monomials_checked;
    if (!factors(m)) r.unfactored.push_back(m);
  }
  return r;
}

CurveScan scan_curve_points(const PlaneCurve& c, std::uint64_t p) {
  const Field field = Field::prime(p);
  const WPolynomial f = c.poly().reduce(field);
  std::vector<WPolynomial> partials;
  for (std::size_t i = 0; i < f.variable_count(); ++i) partials.push_back(partial(f, i));
  CurveScan scan;
  for (const auto& x : enumerate_wps_points(c.weight(), p)) {
    ++scan.total_points;
    if (!evaluate(f, x.coords()).is_zero()) continue;
    scan.points.push_back(x);
    bool singular = std::all_of(partials.begin(), partials.end(),
                                [&](const WPolynomial& g) { return evaluate(g, x.coords()).is_zero(); });
    if (singular) scan.singular_points.push_back(x);
  }
  return scan;
}

std::vector<ManifestEntry> parse_manifest(std::string_view text) {
  std::vector<ManifestEntry> entries;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string line(text.substr(start, end == text.npos ? text.npos : end - start));
    start = end == text.npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::map<std::string, std::string> kv;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos >= line.size()) break;
      std::size_t stop = pos;
      while (stop < line.size() && !std::isspace(static_cast<unsigned char>(line[stop]))) ++stop;
      std::string token = line.substr(pos, stop - pos);
      pos = stop;
      auto eq = token.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw Error(Errc::InvalidArgument, "manifest line " + std::to_string(line_no) + ": expected key=value, got '" +
                                               token + "'");
      }
      kv[token.substr(0, eq)] = token.substr(eq + 1);
    }
    if (kv.empty()) continue;
    auto need = [&](const std::string& key) {
      auto it = kv.find(key);
      if (it == kv.end()) {
        throw Error(Errc::InvalidArgument, "manifest line " + std::to_string(line_no) + ": missing " + key);
      }
      return it->second;
    };
    auto number = [&](const std::string& key) {
      std::string s = need(key);
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw Error(Errc::InvalidArgument, "manifest line " + std::to_string(line_no) + ": bad number for " + key);
      }
      return v;
    };
    ManifestEntry e;
    e.line = line_no;
    e.verify = need("verify");
    static const char* verifiers[] = {"wps_points", "point_equality", "orbit_stabilizer", "veronese", "curve_points"};
    if (std::find(std::begin(verifiers), std::end(verifiers), e.verify) == std::end(verifiers)) {
      throw Error(Errc::InvalidArgument, "manifest line " + std::to_string(line_no) + ": unknown verifier " + e.verify);
    }
    e.weights = Weight::parse(need("weights"));
    auto p = number("p");
    if (p < 2) throw Error(Errc::NotPrime, "manifest line " + std::to_string(line_no) + ": p must be prime");
    e.p = static_cast<std::uint64_t>(p);
    if (kv.count("d")) e.d = number("d");
    if (kv.count("cap")) e.cap = number("cap");
    if (kv.count("poly")) e.poly = kv["poly"];
    if (kv.count("expect")) e.expect = number("expect");
    if (kv.count("expect_singular")) e.expect_singular = number("expect_singular");
    for (const auto& [key, value] : kv) {
      static const char* known[] = {"verify", "weights", "p", "d", "cap", "poly", "expect", "expect_singular"};
      if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
        throw Error(Errc::InvalidArgument, "manifest line " + std::to_string(line_no) + ": unknown key " + key);
      }
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

OracleOutcome run_oracle(const ManifestEntry& entry) {
  OracleOutcome out{entry, false, "", ""};
  json j;
  j["verify"] = entry.verify;
  j["weights"] = weight_json(entry.weights);
  j["p"] = entry.p;
  j["line"] = entry.line;
  auto expect_ok = [&](std::int64_t got, const std::optional<std::int64_t>& want) { return !want || *want == got; };

  if (entry.verify == "wps_points") {
    auto pts = enumerate_wps_points(entry.weights, entry.p);
    auto n = static_cast<std::int64_t>(pts.size());
    j["points"] = n;
    if (entry.expect) j["expect"] = *entry.expect;
    out.pass = expect_ok(n, entry.expect);
    out.summary = std::to_string(n) + " points";
  } else if (entry.verify == "point_equality") {
    auto r = verify_point_equality(entry.weights, entry.p);
    j["points"] = r.points;
    j["pairs"] = r.pairs;
    j["equal_pairs"] = r.equal_pairs;
    j["mismatch_count"] = r.mismatch_count;
    json mm = json::array();
    for (const auto& [x, y] : r.mismatches) mm.push_back({point_json(x), point_json(y)});
    j["mismatches"] = mm;
    out.pass = r.mismatch_count == 0;
    out.summary = std::to_string(r.pairs) + " pairs, " + std::to_string(r.mismatch_count) + " mismatches";
  } else if (entry.verify == "orbit_stabilizer") {
    auto r = verify_orbit_stabilizer(entry.weights, entry.p);
    j["points"] = r.points;
    j["group_order"] = r.group_order;
    json v = json::array();
    for (const auto& y : r.violations) v.push_back(point_json(y));
    j["violations"] = v;
    out.pass = r.violations.empty();
    out.summary = std::to_string(r.points) + " points, " + std::to_string(r.violations.size()) + " violations";
  } else if (entry.verify == "veronese") {
    if (!entry.d) throw Error(Errc::InvalidArgument, "veronese needs d=");
    std::int64_t cap = entry.cap ? *entry.cap : default_veronese_bound(entry.weights, *entry.d);
    auto r = verify_veronese(entry.weights, *entry.d, cap);
    j["d"] = *entry.d;
    j["cap"] = cap;
    json gens = json::array();
    for (const auto& g : r.generators) gens.push_back(monomial_json(g));
    j["generators"] = gens;
    j["monomials_checked"] = r.monomials_checked;
    json unf = json::array();
    for (const auto& m : r.unfactored) unf.push_back(monomial_json(m));
    j["unfactored"] = unf;
    json bad = json::array();
    for (const auto& m : r.bad_generators) bad.push_back(monomial_json(m));
    j["bad_generators"] = bad;
    out.pass = r.unfactored.empty() && r.bad_generators.empty();
    out.summary = std::to_string(r.generators.size()) + " generators, " + std::to_string(r.monomials_checked) +
                  " monomials checked";
  } else if (entry.verify == "curve_points") {
    if (!entry.poly) throw Error(Errc::InvalidArgument, "curve_points needs poly=");
    PlaneCurve c(parse_polynomial(*entry.poly, entry.weights, Field::rationals()));
    auto scan = scan_curve_points(c, entry.p);
    j["poly"] = c.poly().to_string();
    j["total_points"] = scan.total_points;
    j["on_curve"] = static_cast<std::int64_t>(scan.points.size());
    j["singular"] = static_cast<std::int64_t>(scan.singular_points.size());
    json pts = json::array();
    for (const auto& x : scan.points) pts.push_back(point_json(x));
    j["points"] = pts;
    out.pass = expect_ok(static_cast<std::int64_t>(scan.points.size()), entry.expect) &&
               expect_ok(static_cast<std::int64_t>(scan.singular_points.size()), entry.expect_singular);
    out.summary = std::to_string(scan.points.size()) + " points on curve, " +
                  std::to_string(scan.singular_points.size()) + " singular";
  } else {
    throw Error(Errc::InvalidArgument, "unknown verifier '" + entry.verify + "'");
  }
  j["pass"] = out.pass;
  j["summary"] = out.summary;
  out.json = j.dump();
  return out;
}

std::vector<OracleOutcome> run_manifest(const std::vector<ManifestEntry>& entries, unsigned jobs) {
  std::vector<std::optional<OracleOutcome>> slots(entries.size());
  std::vector<std::optional<Error>> failures(entries.size());
  auto work = [&](std::size_t k) {
    try {
      slots[k] = run_oracle(entries[k]);
    } catch (const Error& e) {
      failures[k] = e;
    }
  };
  jobs = std::max(1U, jobs);
  if (jobs == 1) {
    for (std::size_t k = 0; k < entries.size(); ++k) work(k);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t k = w; k < entries.size(); k += jobs) work(k);
      });
    }
    for (auto& t : pool) t.join();
  }
  std::vector<OracleOutcome> out;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (failures[k]) throw *failures[k];
    out.push_back(std::move(*slots[k]));
  }
  return out;
}

}  // namespace wps
