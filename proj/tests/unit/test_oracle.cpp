#include "wps/cli/parse.hpp"
#include "wps/error.hpp"
#include "wps/oracle.hpp"

#include <doctest.h>

using namespace wps;

TEST_CASE("point counts of small weighted projective spaces") {
  CHECK(enumerate_wps_points(Weight({1, 1}), 2).size() == 3);
  CHECK(enumerate_wps_points(Weight({1, 1}), 5).size() == 6);
  CHECK(enumerate_wps_points(Weight({1, 1, 1}), 3).size() == 13);
  CHECK(enumerate_wps_points(Weight({1, 1, 2}), 3).size() == 14);
  CHECK(enumerate_wps_points(Weight({1, 1, 2}), 5).size() == 32);
  CHECK(enumerate_wps_points(Weight({1, 2, 3}), 7).size() == 60);
}

TEST_CASE("point equality oracle") {
  auto r = verify_point_equality(Weight({1, 1, 2}), 5);
  CHECK(r.mismatch_count == 0);
  CHECK(r.points == 32);
  auto r2 = verify_point_equality(Weight({1, 2, 2}), 3);
  CHECK(r2.mismatch_count > 0);  // binomial test over-identifies without well-formedness
}

TEST_CASE("orbit-stabilizer oracle") {
  auto r = verify_orbit_stabilizer(Weight({1, 2, 3}), 7);
  CHECK(r.group_order == 6);
  CHECK(r.points == 57);
  CHECK(r.violations.empty());
  CHECK_THROWS_AS(verify_orbit_stabilizer(Weight({1, 2, 3}), 5), Error);
}

TEST_CASE("veronese oracle") {
  auto r = verify_veronese(Weight({6, 10, 15}), 5, 120);
  CHECK(r.unfactored.empty());
  CHECK(r.bad_generators.empty());
  CHECK(r.generators.size() == 3);
  CHECK(r.monomials_checked > 0);
}

TEST_CASE("curve point scan") {
  PlaneCurve c(parse_polynomial("x^5 + y^3 + z^2", Weight({12, 20, 30}), Field::rationals()));
  auto s = scan_curve_points(c, 7);
  CHECK(s.total_points == 146);
  CHECK(s.points.size() == 20);
  CHECK(s.singular_points.empty());
  CHECK(s.points.front().to_string() == "|0:3:1|");
}

TEST_CASE("manifest parsing") {
  auto entries = parse_manifest(
      "# comment\n"
      "verify=wps_points weights=1,2,3 p=7 expect=60\n"
      "\n"
      "verify=veronese weights=6,10,15 p=2 d=5 cap=60  # trailing comment\n");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].expect == 60);
  CHECK(entries[0].line == 2);
  CHECK(entries[1].d == 5);
  CHECK(entries[1].cap == 60);
  CHECK_THROWS_AS(parse_manifest("verify=wps_points weights=1,2 p=7 bogus=1\n"), Error);
  CHECK_THROWS_AS(parse_manifest("verify=nope weights=1,2 p=7\n"), Error);
  auto out = run_manifest(entries, 2);
  REQUIRE(out.size() == 2);
  CHECK(out[0].pass);
  CHECK(out[1].pass);
}
