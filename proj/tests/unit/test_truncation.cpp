#include "wps/cli/parse.hpp"
#include "wps/error.hpp"
#include "wps/hilbert.hpp"
#include "wps/truncation.hpp"

#include <doctest.h>

using namespace wps;

TEST_CASE("graded piece basis") {
  auto b = graded_piece_basis(Weight({1, 1, 2}), 2);
  CHECK(b == std::vector<Monomial>{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {0, 0, 1}});
  CHECK(graded_piece_basis(Weight({2, 3}), 1).empty());
  CHECK(graded_piece_basis(Weight({2, 3}), 0) == std::vector<Monomial>{{0, 0}});
  CHECK_THROWS_AS(graded_piece_basis(Weight({1, 1, 1, 1, 1, 1, 1, 1}), 200), Error);
}

TEST_CASE("basis sizes match the generating function") {
  for (auto a : {Weight({1, 2, 3}), Weight({2, 3, 5}), Weight({1, 1, 4, 6})}) {
    auto c = expand(HilbertSeries{{1}, a.entries()}, 40);
    for (std::int64_t n = 0; n <= 40; ++n) {
      CAPTURE(n);
      CHECK(BigInt(graded_piece_basis(a, n).size()) == c[n]);
    }
  }
}

TEST_CASE("veronese generators") {
  CHECK(veronese_generators(Weight({1, 1}), 2) == std::vector<Monomial>{{2, 0}, {1, 1}, {0, 2}});
  auto g = veronese_generators(Weight({6, 10, 15}), 5);
  CHECK(g == std::vector<Monomial>{{0, 1, 0}, {0, 0, 1}, {5, 0, 0}});
  // y, z, x^5 regrade to 2, 3, 6
  std::vector<std::int64_t> degs;
  for (const auto& m : g) degs.push_back(weighted_degree(m, Weight({6, 10, 15})) / 5);
  CHECK(degs == std::vector<std::int64_t>{2, 3, 6});
  CHECK(minimal_veronese_bound(Weight({6, 10, 15}), 5) == 30);
  CHECK_THROWS_AS(veronese_generators(Weight({6, 10, 15}), 5, 29), Error);
  // (1,2,3), d = 2: x^2, y, xz, z^2
  CHECK(veronese_generators(Weight({1, 2, 3}), 2).size() == 4);
}

TEST_CASE("principal ideal transforms") {
  Weight a({6, 10, 15});
  auto f = parse_polynomial("x^5 + y^3 + z^2", a, Field::rationals());
  auto t = transform_principal_ideal(f, 5, ReductionCase::II, 0);
  CHECK(t.tag == "re-expressed");
  CHECK(t.generator.weight() == Weight({6, 2, 3}));
  CHECK(t.generator == parse_polynomial("x + y^3 + z^2", Weight({6, 2, 3}), Field::rationals()));
  CHECK(t.degree == 6);

  auto x = parse_polynomial("x", Weight({1, 2}), Field::rationals());
  auto u = transform_principal_ideal(x, 2, ReductionCase::II, 0);
  CHECK(u.tag == "power-raised");
  CHECK(u.generator == parse_polynomial("x", Weight({1, 1}), Field::rationals()));  // x^2 is the new generator
  CHECK(u.degree == 1);

  auto g = parse_polynomial("x^5 + y^3 + z^2", Weight({12, 20, 30}), Field::rationals());
  auto v = transform_principal_ideal(g, 2, ReductionCase::I, std::nullopt);
  CHECK(v.tag == "unchanged-regraded");
  CHECK(v.degree == 30);
  CHECK(v.generator.weight() == Weight({6, 10, 15}));
}

TEST_CASE("straightening pipeline") {
  auto f = parse_polynomial("x^5 + y^3 + z^2", Weight({12, 20, 30}), Field::rationals());
  WellFormOptions o;
  o.plan = parse_plan("2,5@0,2@2,3@1");
  auto r = straighten_chain(f, o);
  const auto& p = r.presentation;
  CHECK(p.weight == Weight({1, 1, 1}));
  REQUIRE(p.relations.size() == 1);
  CHECK(p.relations[0].to_string({"X", "Y", "Z"}) == "X + Y + Z");
  CHECK(p.relation_degrees == std::vector<std::int64_t>{1});
  CHECK(p.generator_names == std::vector<std::string>{"x^5", "y^3", "z^2"});
  for (std::size_t k = 1; k < r.trace.steps.size(); ++k) CHECK(r.trace.steps[k].ideal_note == "re-expressed");

  auto d = straighten_chain(f);
  CHECK(d.presentation.weight == Weight({1, 1, 1}));
  CHECK(d.presentation.relations[0].to_string({"X", "Y", "Z"}) == "X + Y + Z");
}
