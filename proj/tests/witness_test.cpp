#include <doctest.h>

#include "wedge/parse.hpp"
#include "wedge/random.hpp"
#include "wedge/witness.hpp"

using namespace wedge;

namespace {
const Characteristic Q{0};
const Characteristic F3{3};
}  // namespace

TEST_CASE("pair sums") {
  CHECK(even_pair_sum(0, 2, Q) == parse_element("e1*e2 + e3*e4", Q, false, 0));
  CHECK(even_pair_sum(0, 2, Q).pow(2) == parse_element("2*e1*e2*e3*e4", Q, false, 0));
  GrassmannElement v = even_pair_sum_plus_odd(0, 1, Q);
  CHECK(v == parse_element("e1*e2 + e3", Q, false, 0));
  CHECK(v.pow(2) == parse_element("2*e1*e2*e3", Q, false, 0));
  // offset start
  CHECK(even_pair_sum(3, 1, Q) == parse_element("e7*e8", Q, false, 0));
  // n! vanishes at n = p
  CHECK(even_pair_sum(0, 3, F3).pow(3).is_zero());
  CHECK_FALSE(even_pair_sum(0, 3, Characteristic{5}).pow(3).is_zero());
}

TEST_CASE("family membership") {
  // x1 * [x2,x3] sits in M_{1,3}
  NormalTerm u;
  u.beginning = {{1, 1}};
  u.end = {EndBlock{2, 3, 0, 0}};
  CHECK(in_family(u, 1, 3, F3));
  CHECK_FALSE(in_family(u, 2, 3, F3));  // m must be the top beginning variable
  CHECK_FALSE(in_family(u, 1, 4, F3));  // variables must cover {1..n}
  // exponent bounds for p > 2
  NormalTerm big;
  big.beginning = {{1, 3}};
  big.end = {EndBlock{2, 3, 0, 0}};
  CHECK_FALSE(in_family(big, 1, 3, F3));
  CHECK(in_family(big, 1, 3, Characteristic{5}));
  // pure beginnings only at m = n
  NormalTerm pure;
  pure.beginning = {{1, 1}, {2, 2}};
  pure.end = {};
  CHECK(in_family(pure, 2, 2, F3));
  CHECK_FALSE(in_family(pure, 1, 2, F3));
}

TEST_CASE("family enumeration") {
  // M_{2,2}: pure beginnings x1^a x2^b with 1 <= a, b <= 2
  auto f22 = enumerate_family(2, 2, F3);
  CHECK(f22.size() == 4);
  for (const NormalTerm& t : f22) {
    CHECK(t.lend() == 0);
    CHECK(t.in_beginning(2));
  }
  // descending order
  for (size_t i = 0; i + 1 < f22.size(); ++i) {
    CHECK(term_compare(f22[i], f22[i + 1]) == Ordering::Greater);
  }
  // M_{1,4} is empty: the end would have odd size
  CHECK(enumerate_family(1, 4, F3).empty());
  // m > n is empty
  CHECK(enumerate_family(3, 2, F3).empty());
  // characteristic zero needs an explicit bound
  CHECK_THROWS_AS(enumerate_family(1, 1, Q), ResourceLimit);
  CHECK(enumerate_family(1, 1, Q, 4).size() == 4);
}

TEST_CASE("graded family enumeration") {
  auto fam = enumerate_graded_family(1, 3, {1, 1, 1}, F3);
  // placements of {1,2,3} into beginning (containing 1) with even end:
  // {1,2,3} pure, {1}+[2,3]
  CHECK(fam.size() == 2);
  for (const NormalTerm& t : fam) {
    CHECK(t.in_beginning(1));
    for (uint32_t v = 1; v <= 3; ++v) CHECK(t.degree_of(v) == 1);
  }
  CHECK_THROWS_AS(enumerate_graded_family(1, 2, {3, 1}, F3), NotInMPrime);
}

TEST_CASE("separating assignment for x1*[x2,x3]") {
  NormalTerm u;
  u.beginning = {{1, 1}};
  u.end = {EndBlock{2, 3, 0, 0}};
  WitnessAssignment wa = separating_assignment(u, 1, 3, F3);
  // z = 2(deg - lend) - 1 = 2(3 - 1) - 1 = 3
  CHECK(wa.z == 3);
  GrassmannElement val = expand(u, F3, false).evaluate(wa.images);
  CHECK(val == parse_element("2*e1*e2*e3", F3, false, wa.z));
  // supports are disjoint and tile {1..z}
  std::set<uint32_t> all;
  for (const auto& [v, g] : wa.images) {
    for (uint32_t i : g.support()) {
      CHECK(all.insert(i).second);
    }
  }
  CHECK(all.size() == wa.z);
  CHECK_THROWS_AS(separating_assignment(u, 2, 3, F3), NotInM);
}

TEST_CASE("support accounting of the separating assignment") {
  Characteristic ch = F3;
  for (uint32_t n = 1; n <= 3; ++n) {
    for (uint32_t m = 1; m <= n; ++m) {
      for (const NormalTerm& u : enumerate_family(m, n, ch)) {
        WitnessAssignment wa = separating_assignment(u, m, n, ch);
        CHECK(wa.images.at(m).support().size() == 2 * u.degree_of(m) - 1);
        for (const auto& [v, e] : u.beginning) {
          if (v != m) CHECK(wa.images.at(v).support().size() == 2 * e);
        }
        for (const EndBlock& b : u.end) {
          CHECK(wa.images.at(b.lo).support().size() == 2 * b.lo_exp + 1);
          CHECK(wa.images.at(b.hi).support().size() == 2 * b.hi_exp + 1);
        }
      }
    }
  }
}

TEST_CASE("unital separating assignment") {
  // u = x1 [x2,x3], type (1,1,1): value (1 + e1) * 2 e2 e3
  NormalTerm u;
  u.beginning = {{1, 1}};
  u.end = {EndBlock{2, 3, 0, 0}};
  WitnessAssignment wa = unital_separating_assignment(u, 1, 3, {1, 1, 1}, F3);
  CHECK(wa.z == 3);
  GrassmannElement val = expand(u, F3, true).evaluate(wa.images);
  CHECK(val == parse_element("2*e2*e3 + 2*e1*e2*e3", F3, true, 0));
  CHECK(val.odd_part() == parse_element("2*e1*e2*e3", F3, true, 0));
  // g_l = 1 for beginning variables other than m kills members with x_l in
  // the end: v = x2 [x1,x3] under the witness of u' = x2 x1 ... use family
  auto fam = enumerate_graded_family(2, 3, {1, 1, 1}, F3);
  REQUIRE(fam.size() == 2);
  WitnessAssignment top = unital_separating_assignment(fam[0], 2, 3, {1, 1, 1}, F3);
  CHECK(expand(fam[1], F3, true).evaluate(top.images).is_zero());
  // r_m divisible by p is rejected
  CHECK_THROWS_AS(unital_separating_assignment(u, 1, 3, {3, 1, 1}, F3), NotInMPrime);
}
