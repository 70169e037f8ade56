#include "wps/cli/parse.hpp"
#include "wps/curves.hpp"
#include "wps/error.hpp"

#include "wps/truncation.hpp"

#include <doctest.h>

#include <random>

using namespace wps;

namespace {

PlaneCurve curve(const char* text, std::vector<std::int64_t> a) {
  return PlaneCurve(parse_polynomial(text, Weight(std::move(a)), Field::rationals()));
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

TEST_CASE("plane curve construction") {
  CHECK(curve("x^6 + y^3 + z^2", {1, 2, 3}).degree() == 6);
  CHECK(code_of([] { (void)curve("x + y^2", {1, 2, 3}); }) == Errc::NotHomogeneous);
  CHECK(code_of([] { (void)PlaneCurve(parse_polynomial("x", Weight({1, 1}), Field::rationals())); }) ==
        Errc::Mismatch);
}

TEST_CASE("sufficient generality") {
  CHECK(sufficiently_general(curve("x^6 + y^3 + z^2", {1, 2, 3})).ok);
  CHECK(sufficiently_general(curve("x^7 + y^2*z + x*z^2", {1, 2, 3})).ok);
  auto bad = sufficiently_general(curve("x^7 + x*y^3 + y^2*z", {1, 2, 3}));
  CHECK_FALSE(bad.ok);
  auto v = bad.violated();
  REQUIRE(v.size() == 1);
  CHECK(v[0].name == "partner-term");
  CHECK(v[0].index == 2);
  CHECK(code_of([] { require_sufficiently_general(curve("x^7 + x*y^3 + y^2*z", {1, 2, 3})); }) ==
        Errc::NotSufficientlyGeneral);
  CHECK(code_of([] { (void)sufficiently_general(curve("x^2 + y + z", {2, 4, 4})); }) == Errc::NotWellFormed);
}

TEST_CASE("vertex membership agrees with evaluation") {
  auto c = curve("x^7 + y^2*z + x*z^2", {1, 2, 3});
  auto v = vertex_membership(c);
  CHECK(v.by_rule == std::array<bool, 3>{false, true, true});
  CHECK(v.by_evaluation == v.by_rule);
}

TEST_CASE("branching index and genus table") {
  Weight a123({1, 2, 3}), a112({1, 1, 2}), a111({1, 1, 1});
  CHECK(branching_index(6, a123) == 18);
  CHECK(branching_index(4, a112) == 4);
  CHECK(branching_index(7, a123) == 28);
  CHECK(genus(6, a123) == 1);
  CHECK(genus(4, a112) == 1);
  CHECK(genus(3, a111) == 1);
  CHECK(genus(7, a123) == 1);
  for (std::int64_t d = 2; d <= 30; ++d) CHECK(genus(d, a111) == (d - 1) * (d - 2) / 2);
  CHECK(straight_genus(6) == 10);
  CHECK(riemann_hurwitz_check(Rational(10), Rational(1), 6, 18));
  CHECK_FALSE(riemann_hurwitz_check(Rational(10), Rational(1), 6, 17));
}

TEST_CASE("genus errors") {
  CHECK(code_of([] { (void)genus(3, Weight({1, 1, 2})); }) == Errc::NonIntegerGenus);
  CHECK(genus_value(3, Weight({1, 1, 2})) == Rational(BigInt(1), BigInt(4)));
  CHECK(code_of([] { (void)genus(1, Weight({1, 1, 1})); }) == Errc::InvalidDegreeWeight);
  CHECK(code_of([] { (void)genus(6, Weight({2, 2, 3})); }) == Errc::InvalidDegreeWeight);
  CHECK(degree_weight_admissible(7, Weight({1, 2, 3})));
  CHECK_FALSE(degree_weight_admissible(5, Weight({2, 3, 7})));
}

TEST_CASE("straight cover and edge checks") {
  auto c = curve("x^7 + y^2*z + x*z^2", {1, 2, 3});
  auto s = straight_cover(c);
  CHECK(s.poly().to_string() == "x^7 + y^4*z^3 + x*z^6");
  CHECK(s.degree() == 7);
  auto e = edge_squarefree_check(c);
  CHECK_FALSE(e.all_squarefree);
  REQUIRE(e.edges.size() == 3);
  CHECK_FALSE(e.edges[0].squarefree);
  CHECK(e.edges[1].squarefree);
  CHECK(edge_squarefree_check(curve("x^6 + y^3 + z^2", {1, 2, 3})).all_squarefree);
}

TEST_CASE("branch census") {
  auto census = branch_census(curve("x^6 + y^3 + z^2", {1, 2, 3}));
  REQUIRE(census.edges.size() == 3);
  for (const auto& e : census.edges) {
    CAPTURE(e.i);
    CHECK(e.squarefree);
  }
  auto c7 = branch_census(curve("x^7 + y^2*z + x*z^2", {1, 2, 3}));
  CHECK(c7.edges[0].count == 0);
  CHECK(c7.edges[0].predicted == 7);
  CHECK(c7.edges[1].count == 6);
  CHECK(c7.edges[1].agrees);
  CHECK_FALSE(c7.edges[2].agrees);
}

TEST_CASE("singular points") {
  auto c = curve("x^6 + y^3 + z^2", {1, 2, 3});
  CHECK_FALSE(is_singular_at(c, {Scalar(Rational(1)), Scalar(Rational(-1)), Scalar(Rational(0))}));
  auto node = curve("x*y*z", {1, 1, 1});
  CHECK(is_singular_at(node, {Scalar(Rational(1)), Scalar(Rational(0)), Scalar(Rational(0))}));
  CHECK_THROWS_AS(is_singular_at(c, {Scalar(Rational(0)), Scalar(Rational(0)), Scalar(Rational(0))}), Error);
}

TEST_CASE("sweep is deterministic and parallel-safe") {
  auto serial = genus_sweep(5, 20, 1);
  auto parallel = genus_sweep(5, 20, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t k = 0; k < serial.size(); ++k) {
    CHECK(serial[k].a == parallel[k].a);
    CHECK(serial[k].d == parallel[k].d);
    CHECK(serial[k].genus == parallel[k].genus);
  }
  CHECK(coprime_triples(3).size() == 13);
}

TEST_CASE("documented curve examples") {
  CHECK(sufficiently_general(curve("x^4 + y^4 + z^2 + x*y*z", {1, 1, 2})).ok);
  auto conic = sufficiently_general(curve("x^2 + y^2", {1, 1, 1}));
  CHECK_FALSE(conic.ok);
  REQUIRE(conic.violated().size() == 1);
  CHECK(conic.violated()[0].name == "pure-power");
  CHECK(conic.violated()[0].index == 2);

  CHECK_FALSE(is_singular_at(curve("x^2 + y^2 + z^2", {1, 1, 1}), {Scalar(Rational(1)), Scalar(Rational(0)),
                                                                      Scalar(Rational(0))}));
  CHECK(is_singular_at(curve("x^2", {1, 1, 1}), {Scalar(Rational(0)), Scalar(Rational(1)), Scalar(Rational(0))}));

  auto c = curve("x^4 + y^4 + z^2 + x*y*z", {1, 1, 2});
  auto e = edge_squarefree_check(c);
  CHECK(e.all_squarefree);
  CHECK(e.edges[2].restriction.to_string() == "1 + lambda^4");
  auto census = branch_census(c);
  for (const auto& edge : census.edges) {
    CHECK(edge.count == 4);
    CHECK(edge.predicted == 4);
  }
  CHECK(straight_cover(curve("x^5 + y^3 + z^2", {12, 20, 30})).poly().to_string() == "x^60 + y^60 + z^60");
  CHECK(riemann_hurwitz_check(Rational(3), Rational(1), 2, 4));
  CHECK(riemann_hurwitz_check(Rational(5), Rational(5), 1, 0));
  CHECK(vertex_membership(curve("x^6 + y^3 + z^2", {1, 2, 3})).by_rule == std::array<bool, 3>{false, false, false});
}

TEST_CASE("vertex membership rule matches evaluation on random general curves") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> coef(-5, 5);
  int tested = 0;
  for (std::int64_t d = 2; d <= 20; ++d) {
    for (const auto& a : {Weight({1, 2, 3}), Weight({1, 1, 2}), Weight({1, 3, 5}), Weight({2, 3, 5})}) {
      if (!degree_weight_admissible(d, a)) continue;
      WPolynomial f(a, Field::rationals());
      for (const auto& m : graded_piece_basis(a, d)) {
        int c = coef(rng);
        f.add_term(m, Scalar(Rational(c == 0 ? 1 : c)));  // every monomial present keeps f general
      }
      PlaneCurve pc(f);
      if (!sufficiently_general(pc).ok) continue;
      auto v = vertex_membership(pc);
      CHECK(v.by_rule == v.by_evaluation);
      ++tested;
    }
  }
  CHECK(tested > 20);
}
