#include "tidal/error.hpp"
#include "tidal/laurent.hpp"

#include <doctest.h>

using tidal::LaurentPoly;
using tidal::parse_laurent;

TEST_CASE("laurent: parse and print round trip") {
  for (const char* text : {"0", "1", "v", "v^-1", "-3", "v^-2 + 2v^3", "-v^-1 + v"}) {
    const LaurentPoly p = parse_laurent(text);
    CHECK(parse_laurent(p.to_string()) == p);
  }
  CHECK(parse_laurent("2v^2 - 3 + v^-1") == LaurentPoly(-1, {1, -3, 0, 2}));
  CHECK_THROWS_AS(parse_laurent("v^"), tidal::InvalidArgument);
  CHECK_THROWS_AS(parse_laurent("x + 1"), tidal::InvalidArgument);
}

TEST_CASE("laurent: normalization strips zeros at both ends") {
  const LaurentPoly p(-2, {0, 0, 5, 0});
  CHECK(p.lo() == 0);
  CHECK(p.hi() == 0);
  CHECK(p == LaurentPoly(5));
  CHECK(LaurentPoly(3, {0, 0}).is_zero());
  CHECK(LaurentPoly::monomial(4, 0).is_zero());
}

TEST_CASE("laurent: ring arithmetic") {
  const LaurentPoly two = LaurentPoly::quantum_two();
  CHECK(two * two == parse_laurent("v^-2 + 2 + v^2"));
  CHECK(two.bar_invariant());
  CHECK((two - two).is_zero());
  const LaurentPoly p = parse_laurent("v + 3v^4");
  CHECK(p.bar() == parse_laurent("v^-1 + 3v^-4"));
  CHECK(p.shifted(-1) == parse_laurent("1 + 3v^3"));
  CHECK(p.evaluate_at_one() == 4);
  CHECK(p.in_vZv());
  CHECK_FALSE(p.shifted(-1).in_vZv());
  CHECK(p.shifted(-1).in_Zv());
  CHECK(parse_laurent("v - v^2").nonnegative() == false);
}

TEST_CASE("laurent: add_scaled matches the long form") {
  LaurentPoly acc = parse_laurent("1 + v");
  const LaurentPoly other = parse_laurent("v^-1 - v^2");
  LaurentPoly expected = acc + LaurentPoly::monomial(2, -3) * other;
  acc.add_scaled(other, 2, -3);
  CHECK(acc == expected);
}

TEST_CASE("laurent: symmetric part agrees below zero") {
  const LaurentPoly p = parse_laurent("2v^-3 + v^-1 + 7 + 5v^2");
  const LaurentPoly s = p.nonpositive_symmetric_part();
  CHECK(s.bar_invariant());
  for (int e = -3; e <= 0; ++e) CHECK(s.coeff(e) == p.coeff(e));
}

TEST_CASE("laurent: big coefficients stay exact") {
  LaurentPoly p = LaurentPoly::quantum_two();
  LaurentPoly acc(1);
  for (int i = 0; i < 80; ++i) acc *= p;
  // middle coefficient of (v + v^-1)^80 is binom(80, 40)
  CHECK(acc.coeff(0).str() == "107507208733336176461620");
}
