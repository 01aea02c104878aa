#include <doctest.h>

#include "wedge/freepoly.hpp"
#include "wedge/parse.hpp"
#include "wedge/random.hpp"
#include "wedge/tspace.hpp"

using namespace wedge;

namespace {
const Characteristic Q{0};
const Characteristic F3{3};

FreePoly poly(const std::string& s, Characteristic ch = Q, bool unitary = false) {
  return parse_poly(s, ch, unitary);
}
}  // namespace

TEST_CASE("commutators") {
  CHECK(poly("[x1,x2]") == poly("x1*x2 - x2*x1"));
  // left-normed variadic expansion has four monomials with alternating signs
  FreePoly c = poly("[x1,x2,x3]");
  CHECK(c == poly("[[x1,x2],x3]"));
  CHECK(c == poly("x1*x2*x3 - x2*x1*x3 - x3*x1*x2 + x3*x2*x1"));
  CHECK(c.size() == 4);
  FreePoly f = poly("x1*x2 + 2*x3");
  CHECK(f.commutator(f).is_zero());
}

TEST_CASE("substitution") {
  FreePoly f = poly("x1*x2");
  std::map<uint32_t, FreePoly> a{{1, poly("x2")}};
  CHECK(f.substitute(a) == poly("x2^2"));
  // substituting the unit into a commutator kills it
  FreePoly c = poly("[x1,x2]", Q, true);
  std::map<uint32_t, FreePoly> b{{2, FreePoly::constant(Scalar::one(Q))}};
  CHECK(c.substitute(b).is_zero());
  // nonunitary images must be constant-free
  FreePoly g = poly("x1");
  std::map<uint32_t, FreePoly> bad{{1, FreePoly::constant(Scalar::one(Q))}};
  CHECK_THROWS_AS(g.substitute(bad), UnitInNonunitary);
}

TEST_CASE("the unital block generators recover the nonunitary ones at x1 -> 1") {
  // x1^p prod [x_{2i},x_{2i+1}] ... under x1 -> 1 becomes w_k up to renaming
  Characteristic ch = F3;
  FreePoly s1gen = FreePoly::variable(1, ch, true).pow(3);
  for (uint32_t i = 1; i <= 2; ++i) {
    FreePoly a = FreePoly::variable(2 * i, ch, true);
    FreePoly b = FreePoly::variable(2 * i + 1, ch, true);
    s1gen = s1gen * (a.commutator(b) * a.pow(2) * b.pow(2));
  }
  std::map<uint32_t, FreePoly> unit_sub{{1, FreePoly::constant(Scalar::one(ch))}};
  FreePoly dropped = s1gen.substitute(unit_sub);
  // rename x_{i+1} -> x_{i-1}: same words as w_2 shifted
  FreePoly w2 = block_product(2, ch, true);
  std::map<uint32_t, FreePoly> shift;
  for (uint32_t v = 1; v <= 4; ++v) shift.emplace(v, FreePoly::variable(v + 1, ch, true));
  CHECK(dropped == w2.substitute(shift));
}

TEST_CASE("evaluation is a homomorphism") {
  Rng rng(31);
  for (uint32_t p : {0u, 3u, 5u}) {
    Characteristic ch{p};
    for (int k = 0; k < 40; ++k) {
      FreePoly f = rng.poly(ch, false, 3, 4, 3);
      FreePoly g = rng.poly(ch, false, 3, 4, 3);
      std::map<uint32_t, GrassmannElement> a;
      for (uint32_t v = 1; v <= 3; ++v) a.emplace(v, rng.element(ch, false, 6));
      CHECK((f * g).evaluate(a) == f.evaluate(a) * g.evaluate(a));
      CHECK((f + g).evaluate(a) == f.evaluate(a) + g.evaluate(a));
    }
  }
}

TEST_CASE("substitute then evaluate equals evaluate composed") {
  Rng rng(37);
  for (int k = 0; k < 30; ++k) {
    FreePoly f = rng.poly(Q, false, 2, 3, 3);
    FreePoly img1 = rng.poly(Q, false, 2, 2, 2);
    std::map<uint32_t, FreePoly> sub{{1, img1}};
    std::map<uint32_t, GrassmannElement> a;
    for (uint32_t v = 1; v <= 2; ++v) a.emplace(v, rng.element(Q, false, 5));
    std::map<uint32_t, GrassmannElement> composed = a;
    composed.at(1) = img1.evaluate(a);
    CHECK(f.substitute(sub).evaluate(a) == f.evaluate(composed));
  }
}

TEST_CASE("evaluation examples") {
  std::map<uint32_t, GrassmannElement> a;
  a.emplace(1, parse_element("e1", Q, false, 0));
  a.emplace(2, parse_element("e2", Q, false, 0));
  CHECK(poly("[x1,x2]").evaluate(a) == parse_element("2*e1*e2", Q, false, 0));
  CHECK_THROWS_AS(poly("x1*x3").evaluate(a), MissingAssignment);
}

TEST_CASE("multidegree and components") {
  FreePoly f = poly("x1*x2*x1");
  MultiDegree md = f.multidegree();
  CHECK(md.multihomogeneous);
  CHECK(md.degrees == std::map<uint32_t, uint32_t>{{1, 2}, {2, 1}});
  CHECK_FALSE(poly("x1 + x1*x2").multidegree().multihomogeneous);
  CHECK_THROWS_AS(FreePoly::zero(Q, false).multidegree(), ZeroPolynomial);

  auto comps = poly("(x1+x2)^2").multihomogeneous_components();
  CHECK(comps.size() == 3);  // x1^2, x1x2 + x2x1, x2^2
  FreePoly sum = FreePoly::zero(Q, false);
  for (const auto& c : comps) sum = sum + c;
  CHECK(sum == poly("(x1+x2)^2"));

  // block products are multihomogeneous of type (p, ..., p)
  FreePoly w2 = block_product(2, F3, false);
  MultiDegree wd = w2.multidegree();
  CHECK(wd.multihomogeneous);
  for (uint32_t v = 1; v <= 4; ++v) CHECK(wd.degrees.at(v) == 3);
}

TEST_CASE("essential split") {
  auto r = poly("x1 + x1*x2").essential_split();
  CHECK_FALSE(r.essential);
  CHECK(r.components.size() == 2);
  auto r2 = poly("x1*x2 - x2*x1").essential_split();
  CHECK(r2.essential);
  CHECK(r2.components.size() == 1);
  auto r3 = poly("x1 + x2 + x1*x2").essential_split();
  CHECK(r3.components.size() == 3);
  // components sum to f, each is essential, and splitting an inessential
  // polynomial strictly decreases the monomial count
  for (const auto& text : {"x1 + x1*x2 + x3*x1", "x1*x2 + x2 + x3 + x1*x3"}) {
    FreePoly f = poly(text);
    auto split = f.essential_split();
    CHECK_FALSE(split.essential);
    FreePoly sum = FreePoly::zero(Q, false);
    for (const auto& comp : split.components) {
      CHECK(comp.essential_split().essential);
      CHECK(comp.size() < f.size());
      sum = sum + comp;
    }
    CHECK(sum == f);
  }
}
