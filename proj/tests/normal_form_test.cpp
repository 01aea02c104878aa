#include <doctest.h>

#include "wedge/normal_form.hpp"
#include "wedge/parse.hpp"
#include "wedge/random.hpp"

using namespace wedge;

namespace {
const Characteristic Q{0};
const Characteristic F3{3};
const Characteristic F5{5};

NormalForm nf(const std::string& s, Characteristic ch = Q,
              ReductionMode mode = ReductionMode::TripleCommutator) {
  return normalize(parse_poly(s, ch, false), mode);
}

NormalTerm term(std::vector<std::pair<uint32_t, uint32_t>> beg, std::vector<EndBlock> end) {
  NormalTerm t;
  t.beginning = std::move(beg);
  t.end = std::move(end);
  return t;
}
}  // namespace

TEST_CASE("transposition spawns a commutator") {
  NormalForm r = nf("x2*x1");
  CHECK(r.terms.size() == 2);
  CHECK(r.terms.at(term({{1, 1}, {2, 1}}, {})) == Scalar::one(Q));
  CHECK(r.terms.at(term({}, {EndBlock{1, 2, 0, 0}})) == -Scalar::one(Q));
  CHECK(r.str() == "x1*x2 - [x1,x2]");
}

TEST_CASE("commutators with composite arguments split") {
  NormalForm r = nf("[x1,x2*x3]");
  CHECK(r.terms.size() == 2);
  CHECK(r.terms.at(term({{2, 1}}, {EndBlock{1, 3, 0, 0}})) == Scalar::one(Q));
  CHECK(r.terms.at(term({{3, 1}}, {EndBlock{1, 2, 0, 0}})) == Scalar::one(Q));
}

TEST_CASE("p-th powers vanish modulo the identities of G0") {
  CHECK(nf("x1^3", F3, ReductionMode::TripleCommutatorAndPthPowers).is_zero());
  CHECK_FALSE(nf("x1^3", F3).is_zero());
  CHECK_FALSE(nf("x1^2", F3, ReductionMode::TripleCommutatorAndPthPowers).is_zero());
  // a block exponent at p dies too: [x1,x2] x1^3 contains x1^3
  NormalForm r = normalize(parse_poly("[x1,x2]*x1^3", F3, false),
                           ReductionMode::TripleCommutatorAndPthPowers);
  CHECK(r.is_zero());
  CHECK_THROWS_AS(nf("x1", Q, ReductionMode::TripleCommutatorAndPthPowers),
                  CharacteristicMismatch);
}

TEST_CASE("repeated commutator entries annihilate") {
  // [x1,x2][x1,x3] ~ 0 modulo T^(3)
  CHECK(nf("[x1,x2]*[x1,x3]").is_zero());
  CHECK(nf("[x1,x2]*[x3,x2]").is_zero());
  CHECK(nf("[x1,x2]*[x1,x2]").is_zero());
}

TEST_CASE("entry sorting tracks the permutation parity") {
  // [x3,x4][x1,x2] = +[x1,x2][x3,x4] (even permutation of entries)
  NormalForm a = nf("[x3,x4]*[x1,x2]");
  CHECK(a.terms.at(term({}, {EndBlock{1, 2, 0, 0}, EndBlock{3, 4, 0, 0}})) == Scalar::one(Q));
  // [x1,x3][x2,x4] ~ -[x1,x2][x3,x4]
  NormalForm b = nf("[x1,x3]*[x2,x4]");
  CHECK(b.terms.at(term({}, {EndBlock{1, 2, 0, 0}, EndBlock{3, 4, 0, 0}})) == -Scalar::one(Q));
}

TEST_CASE("stray powers of end variables attach to their blocks") {
  NormalForm r = nf("[x1,x2]*x1*x2");
  CHECK(r.terms.size() == 1);
  CHECK(r.terms.begin()->first == term({}, {EndBlock{1, 2, 1, 1}}));
}

TEST_CASE("unitary input carries its constant separately") {
  NormalForm r = normalize(parse_poly("2 + x2*x1", Q, true), ReductionMode::TripleCommutator);
  CHECK(r.constant == Scalar::of_int(2, Q));
  CHECK(r.terms.size() == 2);
  FreePoly back = expand(r);
  CHECK(back.coeff(Word{}) == Scalar::of_int(2, Q));
}

TEST_CASE("expansion of normal terms") {
  CHECK(expand(term({{1, 2}}, {}), Q, false) == parse_poly("x1^2", Q, false));
  CHECK(expand(term({}, {EndBlock{1, 2, 0, 0}}), Q, false) ==
        parse_poly("x1*x2 - x2*x1", Q, false));
  CHECK(expand(term({{3, 1}}, {EndBlock{1, 2, 1, 1}}), Q, false) ==
        parse_poly("x3*(x1*x2 - x2*x1)*x1*x2", Q, false));
}

TEST_CASE("term order") {
  NormalTerm deg3 = term({{1, 3}}, {});
  NormalTerm deg5 = term({{1, 5}}, {});
  CHECK(term_compare(deg3, deg5) == Ordering::Greater);
  CHECK(term_compare(deg5, deg3) == Ordering::Less);
  CHECK(term_compare(deg3, deg3) == Ordering::Equal);
  // same degree: fewer blocks wins
  NormalTerm one_block = term({{1, 2}}, {EndBlock{2, 3, 0, 0}});
  NormalTerm two_blocks = term({}, {EndBlock{1, 2, 0, 0}, EndBlock{3, 4, 0, 0}});
  CHECK(one_block.total_degree() == two_blocks.total_degree());
  CHECK(term_compare(one_block, two_blocks) == Ordering::Greater);
  // first variable with smaller degree wins
  NormalTerm a = term({{1, 1}, {2, 2}}, {});
  NormalTerm b = term({{1, 2}, {2, 1}}, {});
  CHECK(term_compare(a, b) == Ordering::Greater);
  // placement condition: end beats beginning at the first difference,
  // and some larger variable has the reverse placement
  NormalTerm u = term({{1, 1}, {4, 1}}, {EndBlock{2, 3, 0, 0}});
  NormalTerm v = term({{1, 1}, {2, 1}}, {EndBlock{3, 4, 0, 0}});
  CompareDetail d = term_compare_detail(u, v);
  CHECK(d.ord == Ordering::Greater);
  CHECK(d.condition == 4);
  CHECK(d.index == 2);
  CHECK((u.in_beginning(4) && v.in_end(4)));
}

TEST_CASE("classification") {
  CHECK(classify(term({{1, 2}}, {EndBlock{3, 4, 0, 0}}), Characteristic{5}, false).space ==
        Classification::R);
  CHECK(classify(term({{1, 2}}, {EndBlock{3, 4, 0, 0}}), Characteristic{5}, true).space ==
        Classification::R1);
  auto s = classify(term({}, {EndBlock{1, 2, 1, 1}}), F3, false);
  CHECK(s.space == Classification::S);
  CHECK(s.certified);
  // x1^p * [x2,x3] x2^{p-1} x3^{p-1} is unital-central for p = 3
  auto s1 = classify(term({{1, 3}}, {EndBlock{2, 3, 2, 2}}), F3, true);
  CHECK(s1.space == Classification::S1);
  // beginning degree not divisible by p stays in R1
  auto r1 = classify(term({{1, 4}}, {EndBlock{2, 3, 2, 2}}), F3, true);
  CHECK(r1.space == Classification::R1);
  // pure end with an exponent >= p is not certified by the bounded rewriting
  auto un = classify(term({}, {EndBlock{1, 2, 3, 0}}), F3, false);
  CHECK(un.space == Classification::S);
  CHECK_FALSE(un.certified);
}

TEST_CASE("normal forms print in the polynomial grammar") {
  Rng rng(53);
  for (int k = 0; k < 40; ++k) {
    FreePoly f = rng.poly(Q, false, 3, 4, 3);
    NormalForm r = normalize(f, ReductionMode::TripleCommutator);
    if (r.is_zero()) continue;
    // the printed combination re-parses to the expanded polynomial
    CHECK(parse_poly(r.str(), Q, false) == expand(r));
  }
}

TEST_CASE("normal form output satisfies the structural invariants") {
  Rng rng(41);
  for (int k = 0; k < 100; ++k) {
    Characteristic ch{k % 2 ? 3u : 0u};
    FreePoly f = rng.poly(ch, false, 4, 5, 4);
    NormalForm r = normalize(f, ReductionMode::TripleCommutator);
    for (const auto& [t, c] : r.terms) {
      CHECK(t.valid());
      CHECK_FALSE(c.is_zero());
    }
  }
}

TEST_CASE("normalization is idempotent") {
  Rng rng(43);
  for (int k = 0; k < 60; ++k) {
    Characteristic ch{k % 2 ? 5u : 0u};
    FreePoly f = rng.poly(ch, false, 3, 5, 3);
    NormalForm once = normalize(f, ReductionMode::TripleCommutator);
    NormalForm twice = normalize(expand(once), ReductionMode::TripleCommutator);
    CHECK(once.terms == twice.terms);
  }
}

TEST_CASE("p-th power reduction is sound for evaluations in G0") {
  // the dropped terms lie in the identities of G0 (not of G), so the two
  // modes agree pointwise in G0 only
  Rng rng(59);
  for (int k = 0; k < 40; ++k) {
    FreePoly f = rng.poly(F3, false, 3, 6, 3);
    NormalForm nf_xp = normalize(f, ReductionMode::TripleCommutatorAndPthPowers);
    for (int s = 0; s < 15; ++s) {
      std::map<uint32_t, GrassmannElement> a;
      for (uint32_t v = 1; v <= 3; ++v) a.emplace(v, rng.element(F3, false, 6));
      CHECK(f.evaluate(a) == evaluate_normal_form(nf_xp, a));
    }
  }
}

TEST_CASE("normalization agrees with the input under evaluation") {
  Rng rng(47);
  for (uint32_t p : {0u, 3u, 5u}) {
    Characteristic ch{p};
    for (int k = 0; k < 25; ++k) {
      FreePoly f = rng.poly(ch, false, 4, 6, 3);
      NormalForm r = normalize(f, ReductionMode::TripleCommutator);
      for (int s = 0; s < 20; ++s) {
        bool unitary_alg = s % 2;
        std::map<uint32_t, GrassmannElement> a;
        for (uint32_t v = 1; v <= 4; ++v) {
          GrassmannElement g = rng.element(ch, unitary_alg, 6);
          if (unitary_alg && rng.next(2)) {
            g = g + GrassmannElement::unit(ch, 6).scale(rng.scalar(ch));
          }
          a.emplace(v, g);
        }
        CHECK(f.evaluate(a) == evaluate_normal_form(r, a));
      }
    }
  }
}
