#pragma once

#include "wps/curves.hpp"
#include "wps/geometry.hpp"
#include "wps/weights.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wps {

// Brute-force verifiers. None of them consult the closed formulas or
// predicates they are checking; ground truth comes from the definitions.

// One representative per F_p^* orbit, the lexicographically least member,
// listed in increasing order. TooLarge beyond 10^7 vectors.
std::vector<WPoint> enumerate_wps_points(const Weight& a, std::uint64_t p);

// Equality over the algebraic closure by scanning lambda in the cyclic group
// mu_N, N = (p-1) lcm(a), of the closure. PrimeUnsuitable if p | lcm(a).
bool closure_equal(const WPoint& x, const WPoint& y);

struct PointEqualityReport {
  std::int64_t points = 0;
  std::int64_t pairs = 0;
  std::int64_t equal_pairs = 0;
  std::vector<std::pair<WPoint, WPoint>> mismatches;  // first 20
  std::int64_t mismatch_count = 0;
};

// eq_geometric against closure_equal on every ordered pair of F_p-orbit
// representatives. TooLarge when p^{n+1} > 10^6.
PointEqualityReport verify_point_equality(const Weight& a, std::uint64_t p);

struct OrbitStabilizerReport {
  std::int64_t points = 0;
  std::int64_t group_order = 0;
  std::vector<WPoint> violations;
};

// |orbit(y)| * |stab(y)| = prod a_i for every y in P^n(F_p).
OrbitStabilizerReport verify_orbit_stabilizer(const Weight& a, std::uint64_t p);

struct VeroneseReport {
  std::int64_t cap = 0;
  std::vector<Monomial> generators;
  std::int64_t monomials_checked = 0;
  std::vector<Monomial> unfactored;    // submonoid elements not products of generators
  std::vector<Monomial> bad_generators;  // wrong degree or decomposable
};

// Every monomial of degree kd <= cap (found by box enumeration) factors
// through veronese_generators(a, d, cap).
VeroneseReport verify_veronese(const Weight& a, std::int64_t d, std::int64_t cap);

struct CurveScan {
  std::int64_t total_points = 0;
  std::vector<WPoint> points;
  std::vector<WPoint> singular_points;
};

// F_p-points of P(a) on the curve, and those where all partials vanish.
CurveScan scan_curve_points(const PlaneCurve& c, std::uint64_t p);

struct ManifestEntry {
  std::string verify;
  Weight weights;
  std::uint64_t p = 0;
  std::optional<std::int64_t> d;
  std::optional<std::int64_t> cap;
  std::optional<std::string> poly;
  std::optional<std::int64_t> expect;  // pinned point count for enumeration scans
  std::optional<std::int64_t> expect_singular;
  std::size_t line = 0;
};

// Lines "verify=<name> weights=<a> p=<prime> [d=] [cap=] [poly=] [expect=]
// [expect_singular=]"; '#' starts a comment. Throws InvalidArgument with the
// line number on malformed input.
std::vector<ManifestEntry> parse_manifest(std::string_view text);

struct OracleOutcome {
  ManifestEntry entry;
  bool pass = false;
  std::string summary;
  std::string json;  // serialized details
};

OracleOutcome run_oracle(const ManifestEntry& entry);

// Runs every entry, in parallel when jobs > 1; results keep manifest order.
std::vector<OracleOutcome> run_manifest(const std::vector<ManifestEntry>& entries, unsigned jobs = 1);

}  // namespace wps
