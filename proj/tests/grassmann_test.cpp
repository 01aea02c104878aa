#include <doctest.h>

#include "wedge/grassmann.hpp"
#include "wedge/parse.hpp"
#include "wedge/random.hpp"

using namespace wedge;

namespace {
const Characteristic Q{0};
const Characteristic F3{3};

GrassmannElement elem(const std::string& text, Characteristic ch = Q, bool unitary = false,
                      uint32_t trunc = 0) {
  return parse_element(text, ch, unitary, trunc);
}
}  // namespace

TEST_CASE("blade multiplication") {
  // already ordered
  auto r = blade_mul(Blade{1, 2}, Blade{3});
  CHECK(r.sign == 1);
  CHECK(r.blade == Blade{1, 2, 3});
  // one transposition
  r = blade_mul(Blade{2}, Blade{1});
  CHECK(r.sign == -1);
  CHECK(r.blade == Blade{1, 2});
  // shared index annihilates
  r = blade_mul(Blade{1, 3}, Blade{2, 3});
  CHECK(r.sign == 0);
}

TEST_CASE("anticommutation of generators") {
  CHECK(elem("e1*e2") == -elem("e2*e1"));
  CHECK(elem("e1*e1").is_zero());
  CHECK(elem("[e1,e2]") == elem("2*e1*e2"));
}

TEST_CASE("grading and parts") {
  GrassmannElement x = elem("e1 + e2*e3");
  CHECK(x.even_part() == elem("e2*e3"));
  CHECK(x.odd_part() == elem("e1"));
  CHECK(x.even_part() + x.odd_part() == x);
  GrassmannElement u = parse_element("1 + e1*e2", Q, true, 0);
  CHECK(u.odd_part().is_zero());
}

TEST_CASE("support") {
  CHECK(elem("e1*e3 + e2").support() == std::set<uint32_t>{1, 2, 3});
  CHECK(GrassmannElement::zero(Q, false, 0).support().empty());
}

TEST_CASE("squares and powers") {
  // (e1e2 + e3e4)^2 = 2 e1e2e3e4
  CHECK(elem("e1*e2 + e3*e4").pow(2) == elem("2*e1*e2*e3*e4"));
  // (e1 + e2e3)^2 = 2 e1e2e3 via the binomial collapse
  CHECK(elem("e1 + e2*e3").pow(2) == elem("2*e1*e2*e3"));
  CHECK_THROWS_AS(elem("e1").pow(0), UnitInNonunitary);
}

TEST_CASE("associativity and grading laws on random elements") {
  Rng rng(101);
  for (uint32_t p : {0u, 3u, 5u}) {
    Characteristic ch{p};
    for (int k = 0; k < 100; ++k) {
      GrassmannElement a = rng.element(ch, false, 6);
      GrassmannElement b = rng.element(ch, false, 6);
      GrassmannElement c = rng.element(ch, false, 6);
      CHECK((a * b) * c == a * (b * c));
      GrassmannElement h = rng.graded_element(ch, false, 6, true);
      GrassmannElement u = rng.graded_element(ch, false, 6, true);
      CHECK(h * u == -(u * h));
      CHECK((h * h).is_zero());
      GrassmannElement ev = rng.graded_element(ch, false, 6, false);
      CHECK((ev * ev).odd_part().is_zero());
      CHECK((ev * h).even_part().is_zero());
    }
  }
}

TEST_CASE("even blades are central, single generators are not") {
  GrassmannElement e12 = parse_element("e1*e2", Q, false, 4);
  CHECK(is_central_in_truncation(e12, 4));
  GrassmannElement e1 = parse_element("e1", Q, false, 4);
  CHECK_FALSE(is_central_in_truncation(e1, 4));
  Rng rng(5);
  for (int k = 0; k < 50; ++k) {
    GrassmannElement x = rng.element(Q, false, 4);
    CHECK(e12.commutator(x).is_zero());
  }
}

TEST_CASE("top odd blade is central only in its own truncation") {
  GrassmannElement top3 = parse_element("e1*e2*e3", Q, false, 3);
  CHECK(is_central_in_truncation(top3, 3));
  GrassmannElement top4 = parse_element("e1*e2*e3", Q, false, 4);
  CHECK_FALSE(is_central_in_truncation(top4, 4));
}

TEST_CASE("centrality matches evenness away from the top degree") {
  // whenever every blade omits at least two indices <= n, central <=> even
  Rng rng(17);
  for (int k = 0; k < 80; ++k) {
    GrassmannElement x = rng.element(F3, false, 4);  // degree <= 4 blades
    GrassmannElement padded(F3, false, 6);
    for (const auto& [b, c] : x.terms()) padded.add_term(b, c);
    CHECK(is_central_in_truncation(padded, 6) == padded.odd_part().is_zero());
  }
}

TEST_CASE("p-th powers vanish in G0 at p = 3") {
  Rng rng(23);
  for (int k = 0; k < 200; ++k) {
    GrassmannElement g = rng.element(F3, false, 4, 8);
    CHECK(g.pow(3).is_zero());
  }
  CHECK(generic_element(1, 4, false, F3).pow(3).is_zero());
}

TEST_CASE("n-term elements are nilpotent of index n + 1") {
  Rng rng(29);
  for (uint32_t n = 1; n <= 4; ++n) {
    GrassmannElement u(Q, false, 6);
    while (u.size() < n) u.add_term(rng.blade(6), rng.nonzero_scalar(Q));
    CHECK(u.pow(n + 1).is_zero());
  }
}

TEST_CASE("mixing rules are rejected") {
  CHECK_THROWS_AS(elem("e1", Q) + elem("e1", F3), CharacteristicMismatch);
  CHECK_THROWS_AS(parse_element("e1", Q, false, 3) + parse_element("e1", Q, false, 4),
                  TruncationMismatch);
  CHECK_THROWS_AS(parse_element("e5", Q, false, 4), TruncationMismatch);
  CHECK_THROWS_AS(parse_element("1", Q, false, 4), UnitInNonunitary);
}
