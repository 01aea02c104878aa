#include <doctest.h>

#include "wedge/parse.hpp"

using namespace wedge;

namespace {
const Characteristic Q{0};
const Characteristic F3{3};
}  // namespace

TEST_CASE("polynomial grammar") {
  CHECK(parse_poly("[x1,x2]*x1^2*x2^2 + 3*x3", Q, false).size() == 3);
  CHECK(parse_poly("x1 - x1", Q, false).is_zero());
  CHECK(parse_poly("2*x1*x2", Q, false) == parse_poly("x1*x2 + x1*x2", Q, false));
  CHECK(parse_poly("(x1 + x2)^2", Q, false) ==
        parse_poly("x1^2 + x1*x2 + x2*x1 + x2^2", Q, false));
  // nested and variadic commutators agree with the left-normed convention
  CHECK(parse_poly("[x1,x2,x3]", Q, false) == parse_poly("[[x1,x2],x3]", Q, false));
  // rational coefficients
  CHECK(parse_poly("1/2*x1 + 1/2*x1", Q, false) == parse_poly("x1", Q, false));
  // coefficients reduce modulo p
  CHECK(parse_poly("4*x1", F3, false) == parse_poly("x1", F3, false));
  CHECK(parse_poly("3*x1", F3, false).is_zero());
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_poly("x1 + ", Q, false), ParseError);
  CHECK_THROWS_AS(parse_poly("x1 ] x2", Q, false), ParseError);
  CHECK_THROWS_AS(parse_poly("y1", Q, false), ParseError);
  CHECK_THROWS_AS(parse_poly("[x1]", Q, false), ParseError);
  CHECK_THROWS_AS(parse_poly("x0", Q, false), ParseError);
  try {
    parse_poly("x1 + @", Q, false);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  // constants are rejected without the unit
  CHECK_THROWS_AS(parse_poly("1 + x1", Q, false), UnitInNonunitary);
  CHECK_NOTHROW(parse_poly("1 + x1", Q, true));
}

TEST_CASE("printing round-trips") {
  for (const char* text : {"x1*x2 - x2*x1", "2*x1^2 + 3*x2", "x1*x2*x1 - 5*x3^4",
                           "1/2*x1 + 2/3*x2^2"}) {
    FreePoly f = parse_poly(text, Q, false);
    CHECK(parse_poly(f.str(), Q, false) == f);
    CHECK(parse_poly(f.str(), Q, false).str() == f.str());  // idempotent printing
  }
  FreePoly g = parse_poly("1 - x1 + x1*x2", Q, true);
  CHECK(parse_poly(g.str(), Q, true) == g);
}

TEST_CASE("grassmann grammar round-trips") {
  for (const char* text : {"e1*e2 + 3*e4", "e1 - e2*e3", "2*e1*e2*e3"}) {
    GrassmannElement x = parse_element(text, Q, false, 0);
    CHECK(parse_element(x.str(), Q, false, 0) == x);
  }
  GrassmannElement u = parse_element("1 + e1*e2", Q, true, 4);
  CHECK(parse_element(u.str(), Q, true, 4) == u);
  CHECK(parse_element("e1*e1", Q, false, 0).is_zero());
}
