#include "wps/cli/parse.hpp"
#include "wps/error.hpp"
#include "wps/wpoly.hpp"

#include <doctest.h>

#include <random>

using namespace wps;

namespace {

WPolynomial P(const char* text, const Weight& a, const Field& f = Field::rationals()) {
  return parse_polynomial(text, a, f);
}

}  // namespace

TEST_CASE("term order: weighted degree, then reversed lex") {
  Weight a({1, 2, 3});
  TermOrder lt{&a};
  CHECK(lt({1, 0, 0}, {0, 1, 0}));  // degree 1 < 2
  CHECK(lt({1, 1, 0}, {0, 0, 1}));  // same degree 3, z exponent decides
  CHECK(lt({3, 0, 0}, {1, 1, 0}));
  CHECK_FALSE(lt({1, 1, 0}, {1, 1, 0}));
}

TEST_CASE("canonical printing") {
  Weight a({12, 20, 30});
  auto f = P("z^2 + y^3 + x^5", a);
  CHECK(f.to_string() == "x^5 + y^3 + z^2");
  CHECK(weighted_degree(f) == 60);
  CHECK(is_weighted_homogeneous(f) == 60);
  CHECK(P("2/3*x*y", Weight({1, 1})).to_string() == "2/3*x*y");
  CHECK(P("x^2 - x^2", Weight({1, 1})).is_zero());
  CHECK(P("x - 2*y + 3", Weight({1, 1})).to_string() == "3 + x - 2*y");
}

TEST_CASE("homogeneity and graded pieces") {
  Weight a({1, 1, 2});
  CHECK(is_weighted_homogeneous(P("x^4 + y^4 + z^2 + x*y*z", a)) == 4);
  auto g = P("x^4 + z + x", a);
  CHECK_FALSE(is_weighted_homogeneous(g).has_value());
  auto pieces = graded_decompose(g);
  REQUIRE(pieces.size() == 3);
  CHECK(pieces.at(1) == P("x", a));
  CHECK(pieces.at(2) == P("z", a));
  CHECK(pieces.at(4) == P("x^4", a));
  CHECK_THROWS_AS(weighted_degree(P("0", a)), Error);
}

TEST_CASE("arithmetic and errors") {
  Weight a({1, 2});
  auto f = P("x^2 + y", a), g = P("x^2 - y", a);
  CHECK(f * g == P("x^4 - y^2", a));
  CHECK(f + g == P("2*x^2", a));
  CHECK(f.pow(2) == P("x^4 + 2*x^2*y + y^2", a));
  CHECK_THROWS_AS(f + P("x", Weight({1, 1})), Error);
  CHECK_THROWS_AS(f + P("x", a, Field::prime(5)), Error);
  CHECK(P("3*x + 5*y", a, Field::prime(5)) == P("3*x", a, Field::prime(5)));
  CHECK(partial(P("x^3*y", a), 0) == P("3*x^2*y", a));
  CHECK_THROWS_AS(partial(f, 2), Error);
}

TEST_CASE("power substitution keeps the degree") {
  Weight a({1, 1, 2});
  auto f = P("x^4 + y^4 + z^2 + x*y*z", a);
  auto pi = power_substitute(f);
  CHECK(pi.weight() == Weight::straight(3));
  CHECK(pi == P("x^4 + y^4 + z^4 + x*y*z^2", Weight::straight(3)));
  CHECK(is_weighted_homogeneous(pi) == 4);
  CHECK_THROWS_AS(power_substitute(P("x + z", a)), Error);
}

TEST_CASE("scaling law on random samples over F_p") {
  std::mt19937 rng(11);
  const std::uint64_t p = 101;
  Field f = Field::prime(p);
  std::uniform_int_distribution<long long> coef(0, 100);
  int samples = 0;
  for (int k = 0; k < 200; ++k) {
    Weight a({1 + k % 3, 2 + k % 4, 1 + k % 5});
    auto basis_deg = 6 + k % 7;
    WPolynomial poly(a, f);
    for (std::uint32_t i = 0; i <= static_cast<std::uint32_t>(basis_deg); ++i) {
      for (std::uint32_t j = 0; j <= static_cast<std::uint32_t>(basis_deg); ++j) {
        std::int64_t rest = basis_deg - a[0] * i - a[1] * j;
        if (rest < 0 || rest % a[2] != 0) continue;
        poly.add_term({i, j, static_cast<std::uint32_t>(rest / a[2])}, Scalar::from_int(f, coef(rng)));
      }
    }
    if (poly.is_zero()) continue;
    std::vector<Scalar> x{Scalar::from_int(f, coef(rng)), Scalar::from_int(f, coef(rng)),
                          Scalar::from_int(f, coef(rng))};
    Scalar lambda = Scalar::from_int(f, 1 + coef(rng) % 100);
    std::vector<Scalar> y;
    for (std::size_t i = 0; i < 3; ++i) y.push_back(lambda.pow(a[i]) * x[i]);
    CHECK(evaluate(poly, y) == lambda.pow(basis_deg) * evaluate(poly, x));
    ++samples;
  }
  CHECK(samples > 150);
}

TEST_CASE("edge restriction") {
  Weight a({1, 1, 1});
  auto f = P("x^7 + y^4*z^3 + x*z^6", a);
  CHECK(restrict_to_edge(f, 0).to_string() == "lambda^3");
  CHECK(restrict_to_edge(f, 1).to_string() == "lambda + lambda^7");
  CHECK(restrict_to_edge(f, 2).to_string() == "1");
}
