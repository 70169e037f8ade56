#include "wps/cli/parse.hpp"
#include "wps/error.hpp"

#include <doctest.h>

#include <random>

using namespace wps;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvalidArgument;
}

std::size_t position_of(const char* text) {
  try {
    (void)parse_raw(text, 3);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected a parse error");
  return 0;
}

}  // namespace

TEST_CASE("grammar") {
  Weight a({1, 1, 1});
  Field q = Field::rationals();
  CHECK(parse_polynomial("(x+y)^2", a, q).to_string() == "x^2 + 2*x*y + y^2");
  CHECK(parse_polynomial("-x*-y", a, q).to_string() == "x*y");
  CHECK(parse_polynomial("x0^2 + x2", a, q) == parse_polynomial("x^2 + z", a, q));
  CHECK(parse_polynomial("u*v*w", a, q) == parse_polynomial("x*y*z", a, q));
  CHECK(parse_polynomial("1/2*x + 1/2*x", a, q) == parse_polynomial("x", a, q));
}

TEST_CASE("parse errors carry positions and codes") {
  CHECK(code_of([] { (void)parse_raw("x +", 3); }) == Errc::ParseError);
  CHECK(code_of([] { (void)parse_raw("x / y", 3); }) == Errc::ParseError);
  CHECK(code_of([] { (void)parse_raw("2x", 3); }) == Errc::ParseError);
  CHECK(code_of([] { (void)parse_raw("x + q", 3); }) == Errc::UnknownVariable);
  CHECK(code_of([] { (void)parse_raw("x + t", 3); }) == Errc::UnknownVariable);  // mixed families
  CHECK(code_of([] { (void)parse_raw("x5", 3); }) == Errc::UnknownVariable);
  CHECK(code_of([] { (void)parse_raw("x^1000000", 3); }) == Errc::TooLarge);
  CHECK(code_of([] { (void)parse_raw("1/0", 3); }) == Errc::DivisionByZero);
  CHECK(position_of("x + )") == 4);
  CHECK(position_of("x + q") == 4);
}

TEST_CASE("integer univariate and lists") {
  CHECK(parse_integer_univariate("1 - t^6") == std::vector<BigInt>{1, 0, 0, 0, 0, 0, -1});
  CHECK(code_of([] { (void)parse_integer_univariate("1/2*t"); }) == Errc::InvalidArgument);
  CHECK(parse_positive_list("1,4,5") == std::vector<std::int64_t>{1, 4, 5});
  CHECK(code_of([] { (void)parse_positive_list("1,0"); }) == Errc::InvalidWeight);
}

TEST_CASE("printing round trips") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coef(-20, 20), den(1, 6), ex(0, 4);
  for (auto field : {Field::rationals(), Field::prime(11)}) {
    for (int k = 0; k < 200; ++k) {
      Weight a({1, 2, 3});
      WPolynomial f(a, field);
      for (int t = 0; t < 5; ++t) {
        Monomial m{static_cast<std::uint32_t>(ex(rng)), static_cast<std::uint32_t>(ex(rng)),
                   static_cast<std::uint32_t>(ex(rng))};
        f.add_term(m, Scalar::from_rational(field, Rational(BigInt(coef(rng)), BigInt(den(rng)))));
      }
      auto text = f.to_string();
      CAPTURE(text);
      CHECK(parse_polynomial(text, a, field) == f);
    }
  }
}
