#include "wps/error.hpp"
#include "wps/weights.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace wps;

namespace {

std::vector<Weight> chain(const WellFormResult& r) {
  std::vector<Weight> out;
  for (const auto& s : r.trace.steps) out.push_back(s.after);
  return out;
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("weight parsing and validation") {
  CHECK(Weight::parse("12,20,30") == Weight({12, 20, 30}));
  CHECK(Weight::parse(" 1, 2 ,3 ") == Weight({1, 2, 3}));
  CHECK(Weight({12, 20, 30}).to_string() == "(12,20,30)");
  CHECK(Weight({12, 20, 30}).to_csv() == "12,20,30");
  CHECK(Weight({4, 6, 10}).lcm() == 60);
  CHECK(Weight({2, 3, 5}).product() == 30);
  for (const char* bad : {"", "1", "1,,2", "0,1", "1,-2", "a,b", "1,2,", "1,2000000000"}) {
    CAPTURE(bad);
    CHECK(code_of([&] { (void)Weight::parse(bad); }) == Errc::InvalidWeight);
  }
}

TEST_CASE("well-formedness") {
  CHECK(is_well_formed(Weight({1, 1, 1})));
  CHECK(is_well_formed(Weight({1, 2, 3})));
  CHECK(is_well_formed(Weight({2, 3, 5})));
  CHECK_FALSE(is_well_formed(Weight({1, 2, 2})));
  CHECK_FALSE(is_well_formed(Weight({6, 10, 15})));
  CHECK_FALSE(is_well_formed(Weight({2, 2})));
  // with two entries every single entry must be 1
  CHECK(is_well_formed(Weight({1, 1})));
  CHECK_FALSE(is_well_formed(Weight({1, 5})));
  CHECK(well_form(Weight({2, 3})).weight == Weight({1, 1}));
}

TEST_CASE("regrade examples") {
  CHECK(apply_reduction(Weight({6, 10, 15}), 5, ReductionCase::II, 0) == Weight({6, 2, 3}));
  CHECK(apply_reduction(Weight({3, 1, 3}), 3, ReductionCase::II, 1) == Weight({1, 1, 1}));
  CHECK(apply_reduction(Weight({12, 20, 30}), 2, ReductionCase::I, std::nullopt) == Weight({6, 10, 15}));
  CHECK(code_of([] { (void)apply_reduction(Weight({6, 10, 15}), 2, ReductionCase::I, std::nullopt); }) ==
        Errc::BadCase);
  // gcd(d, a_j) must be 1
  CHECK(code_of([] { (void)apply_reduction(Weight({2, 4, 6}), 2, ReductionCase::II, 0); }) == Errc::BadCase);
  CHECK(code_of([] { (void)apply_reduction(Weight({6, 10, 15}), 5, ReductionCase::II, std::nullopt); }) ==
        Errc::BadCase);
}

TEST_CASE("default policy exhausts case I then scans spared indices upward") {
  auto r = well_form(Weight({12, 20, 30}));
  CHECK(r.weight == Weight({1, 1, 1}));
  REQUIRE(r.trace.steps.size() == 4);
  CHECK(r.trace.steps[0].kind == ReductionCase::I);
  CHECK(r.trace.steps[0].d == 2);
  CHECK(chain(r) == std::vector<Weight>{Weight({6, 10, 15}), Weight({6, 2, 3}), Weight({2, 2, 1}),
                                        Weight({1, 1, 1})});
  CHECK(r.trace.steps[1].spared == 0);
  CHECK(r.trace.steps[2].spared == 1);
  CHECK(r.trace.steps[3].spared == 2);
}

TEST_CASE("prime steps split composite divisors") {
  auto whole = well_form(Weight({4, 6, 6}));
  WellFormOptions o;
  o.prime_steps = true;
  auto primes = well_form(Weight({4, 6, 6}), o);
  CHECK(whole.weight == primes.weight);
  for (const auto& s : primes.trace.steps) {
    CAPTURE(s.d);
    bool prime = s.d >= 2;
    for (std::int64_t q = 2; q * q <= s.d; ++q) prime = prime && s.d % q != 0;
    CHECK(prime);
  }
  CHECK(primes.trace.steps.size() >= whole.trace.steps.size());
}

TEST_CASE("explicit plan reproduces the worked chain") {
  WellFormOptions o;
  o.plan = parse_plan("2,5@0,2@2,3@1");
  auto r = well_form(Weight({12, 20, 30}), o);
  CHECK(r.weight == Weight({1, 1, 1}));
  CHECK(chain(r) == std::vector<Weight>{Weight({6, 10, 15}), Weight({6, 2, 3}), Weight({3, 1, 3}),
                                        Weight({1, 1, 1})});
  CHECK(code_of([] { (void)parse_plan("2,x@1"); }) == Errc::InvalidArgument);
  WellFormOptions partial;
  partial.plan = parse_plan("2");
  CHECK(code_of([&] { (void)well_form(Weight({12, 20, 30}), partial); }) == Errc::InvalidArgument);
  WellFormOptions wrong;
  wrong.plan = parse_plan("3");
  CHECK(code_of([&] { (void)well_form(Weight({12, 20, 30}), wrong); }) == Errc::BadCase);
}

TEST_CASE("well_form property: result well-formed, steps replay, product shrinks") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::int64_t> dist(1, 60);
  for (int k = 0; k < 300; ++k) {
    std::vector<std::int64_t> e(2 + k % 3);
    for (auto& x : e) x = dist(rng);
    Weight a(e);
    for (bool prime_steps : {false, true}) {
      WellFormOptions o;
      o.prime_steps = prime_steps;
      auto r = well_form(a, o);
      CAPTURE(a.to_string());
      CHECK(is_well_formed(r.weight));
      Weight cur = a;
      bool seen_case_two = false;
      for (const auto& s : r.trace.steps) {
        CHECK(s.before == cur);
        CHECK(s.after == apply_reduction(cur, s.d, s.kind, s.spared));
        CHECK(s.after.product() < s.before.product());
        if (s.kind == ReductionCase::II) {
          seen_case_two = true;
          CHECK(std::gcd(s.d, cur[*s.spared]) == 1);
        } else {
          CHECK_FALSE(seen_case_two);
        }
        cur = s.after;
      }
      CHECK(cur == r.weight);
    }
  }
}
