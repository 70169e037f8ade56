#include "wps/error.hpp"
#include "wps/hilbert.hpp"

#include <doctest.h>

#include <random>

using namespace wps;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

std::vector<BigInt> sparse(const std::map<int, int>& m) {
  std::vector<BigInt> out(m.rbegin()->first + 1, 0);
  for (auto [k, v] : m) out[k] = v;
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

TEST_CASE("expansion of the elliptic series") {
  HilbertSeries s{ints({1, 0, 0, 0, 0, 0, -1}), {1, 2, 3}};
  auto c = expand(s, 10);
  CHECK(c == ints({1, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
  CHECK(format_series(s) == "(1 - t^6) / (1-t)(1-t^2)(1-t^3)");
  CHECK(format_numerator(ints({1, 0, -2, 0, 1})) == "1 - 2t^2 + t^4");
}

TEST_CASE("partition counts") {
  // 1 / prod_{k=1..5} (1 - t^k): partitions into parts of size <= 5
  auto c = expand(HilbertSeries{{1}, {1, 2, 3, 4, 5}}, 12);
  CHECK(c == ints({1, 1, 2, 3, 5, 7, 10, 13, 18, 23, 30, 37, 47}));
}

TEST_CASE("series validation") {
  CHECK(code_of([] { validate_series(HilbertSeries{{1}, {0, 1}}); }) == Errc::InvalidArgument);
  CHECK(code_of([] { (void)expand(HilbertSeries{{1}, {1}}, -1); }) == Errc::InvalidArgument);
  CHECK(code_of([] { (void)expand(HilbertSeries{{1}, {1}}, 2'000'000); }) == Errc::TooLarge);
}

TEST_CASE("complete intersections") {
  auto s = complete_intersection_series({1, 2, 3}, {6});
  CHECK(s.numerator == ints({1, 0, 0, 0, 0, 0, -1}));
  auto q = complete_intersection_series({1, 1, 1, 1}, {2, 2});
  CHECK(q.numerator == ints({1, 0, -2, 0, 1}));
}

TEST_CASE("l(nD) sequences") {
  EllSequence e1(1, 1);
  CHECK(e1(0) == 1);
  CHECK(e1(1) == 1);
  CHECK(e1(5) == 5);
  EllSequence e3(3, 1, {{1, 1}, {2, 1}, {3, 1}, {4, 2}});
  std::vector<std::int64_t> got;
  for (int n = 0; n <= 6; ++n) got.push_back(e3(n));
  CHECK(got == std::vector<std::int64_t>{1, 1, 1, 1, 2, 3, 4});
  CHECK(code_of([] { (void)EllSequence(3, 1)(2); }) == Errc::AmbiguousLowDegree);
  CHECK(code_of([] { (void)EllSequence(3, 1, {{5, 1}}); }) == Errc::InvalidOverride);
  CHECK(code_of([] { (void)EllSequence(3, 1, {{2, 0}}); }) == Errc::InvalidOverride);
  CHECK(e1.scaled(3)(2) == 6);
}

TEST_CASE("numerator recovery") {
  EllSequence e1(1, 1);
  auto src = [&](std::int64_t n) { return BigInt(e1(n)); };
  CHECK(numerator_from_sequence(src, {1, 2, 3}, 40) == ints({1, 0, 0, 0, 0, 0, -1}));
  CHECK(code_of([&] { (void)numerator_from_sequence(src, {1}, 40); }) == Errc::NumeratorNotPolynomial);
  CHECK(relation_degrees(ints({1, 0, -2, 0, 1})) == std::vector<std::int64_t>{2, 2});
}

TEST_CASE("elliptic embedding table") {
  EllSequence e(1, 1);
  auto rows = embedding_report(e, {1, 2, 3, 4, 5});
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].weights == std::vector<std::int64_t>{1, 2, 3});
  CHECK(rows[0].numerator == ints({1, 0, 0, 0, 0, 0, -1}));
  CHECK(rows[1].weights == std::vector<std::int64_t>{1, 1, 2});
  CHECK(rows[1].numerator == ints({1, 0, 0, 0, -1}));
  CHECK(rows[2].numerator == ints({1, 0, 0, -1}));
  CHECK(rows[3].numerator == ints({1, 0, -2, 0, 1}));
  CHECK(rows[4].numerator == ints({1, 0, -5, 5, 0, -1}));
}

TEST_CASE("genus 3 quartic identity") {
  HilbertSeries ell{ints({1, -1, 0, 0, 1}), {1, 1}};
  auto n = sparse({{0, 1}, {10, -1}, {11, -1}, {12, -2}, {13, -1}, {14, -1}, {16, 1}, {17, 2},
                   {18, 2}, {19, 2}, {20, 1}, {23, -1}, {24, -1}, {25, -1}});
  HilbertSeries quartic{n, {1, 4, 5, 6, 7}};
  CHECK(expand(ell, 40) == expand(quartic, 40));
  EllSequence e3(3, 1, {{1, 1}, {2, 1}, {3, 1}, {4, 2}});
  auto g = discover_generators([&](std::int64_t k) { return BigInt(e3(k)); }, 12);
  CHECK(g.generator_degrees == std::vector<std::int64_t>{1, 4, 5, 6, 7});
  CHECK(g.first_relation_degree == 10);
}

TEST_CASE("random complete intersections round trip") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::int64_t> w(1, 5);
  for (int k = 0; k < 50; ++k) {
    std::vector<std::int64_t> a{w(rng), w(rng), w(rng), w(rng)};
    std::vector<std::int64_t> rel{w(rng) + 4};
    auto s = complete_intersection_series(a, rel);
    auto c = expand(s, 60);
    auto back = numerator_from_sequence([&](std::int64_t n) { return c.at(n); }, a, 30);
    CHECK(back == s.numerator);
  }
}
