#include <doctest.h>

#include "wedge/central.hpp"
#include "wedge/parse.hpp"
#include "wedge/tspace.hpp"

using namespace wedge;

namespace {
const Characteristic Q{0};
const Characteristic F3{3};

FreePoly poly(const std::string& s, Characteristic ch = Q, bool unitary = false) {
  return parse_poly(s, ch, unitary);
}
}  // namespace

TEST_CASE("builtin generator sets") {
  GeneratorSet s0 = builtin_generators(BuiltinSet::S, Q, 2);
  REQUIRE(s0.generators.size() == 1);
  CHECK(s0.generators[0] == poly("[x1,x2]"));

  GeneratorSet cpg0 = builtin_generators(BuiltinSet::CPG0, F3, 2);
  // [x1,x2], x1^3, x2 x1^3, [x1,x2][x3,x4], w_1, w_2
  REQUIRE(cpg0.generators.size() == 6);
  CHECK(cpg0.generators[0] == poly("[x1,x2]", F3));
  CHECK(cpg0.generators[1] == poly("x1^3", F3));
  CHECK(cpg0.generators[2] == poly("x2*x1^3", F3));
  CHECK(cpg0.generators[3] == poly("[x1,x2]*[x3,x4]", F3));
  CHECK(cpg0.generators[4] == poly("[x1,x2]*x1^2*x2^2", F3));
  CHECK(cpg0.generators[5] == block_product(2, F3, false));

  GeneratorSet t3 = builtin_generators(BuiltinSet::T3, Q, 0);
  CHECK(t3.closure == Closure::TIdeal);
  CHECK(t3.generators[0] == poly("[[x1,x2],x3]"));

  GeneratorSet cpg = builtin_generators(BuiltinSet::CPG, F3, 1);
  CHECK(cpg.unitary);
  CHECK(cpg.generators.back() == poly("x3^3*[x1,x2]*x1^2*x2^2", F3, true));
}

TEST_CASE("words of a type") {
  auto w = words_of_type({2, 1});
  REQUIRE(w.size() == 3);
  CHECK(w[0] == Word{1, 1, 2});
  CHECK(w[1] == Word{1, 2, 1});
  CHECK(w[2] == Word{2, 1, 1});
}

TEST_CASE("span examples") {
  GeneratorSet S = builtin_generators(BuiltinSet::S, Q, 1);
  TSpaceBasis b = span_at_type(S, {1, 1});
  REQUIRE(b.dimension() == 1);
  CHECK(b.row_poly(0) == poly("x1*x2 - x2*x1"));

  // T3 at the multilinear type (1,1,1): brute-force oracle over the six
  // permutation words. The ideal instances span the subspace with zero sum
  // over each cyclic class intersected with ... compute the rank directly.
  TSpaceBasis t3 = span_at_type(builtin_generators(BuiltinSet::T3, Q, 0), {1, 1, 1});
  CHECK(t3.dimension() == 2);  // [[a,b],c] spans a 2-dimensional multilinear space
  for (size_t r = 0; r < t3.dimension(); ++r) {
    CHECK(generic_evaluation(t3.row_poly(r), false, 6).is_zero());
  }

  // [x1,x2] x1 x2 lands in S + T^(3) at type (2,2), p = 3; the S rows alone
  // do not reach it (a cyclic-sum obstruction), so the T^(3) part of the
  // certified congruence is genuinely needed at this type.
  GeneratorSet S3 = builtin_generators(BuiltinSet::S, F3, 1);
  GeneratorSet T33 = builtin_generators(BuiltinSet::T3, F3, 0);
  FreePoly block11 = poly("[x1,x2]*x1*x2", F3);
  TSpaceBasis b22 = span_at_type(S3, {2, 2});
  CHECK(member(block11, b22) == Membership::NoAtThisCap);
  TSpaceBasis b22full = span_at_type(std::vector<GeneratorSet>{S3, T33}, {2, 2});
  CHECK(member(block11, b22full) == Membership::Yes);
}

TEST_CASE("membership examples") {
  GeneratorSet S = builtin_generators(BuiltinSet::S, F3, 1);
  TSpaceBasis b = span_at_type(S, {1, 1});
  CHECK(member(poly("[x1,x2]", F3), b) == Membership::Yes);
  CHECK(member(poly("x1*x2", F3), b) == Membership::NoAtThisCap);

  GeneratorSet cpg0 = builtin_generators(BuiltinSet::CPG0, F3, 1);
  CHECK(member(block_product(1, F3, false), span_at_type(cpg0, {3, 3})) == Membership::Yes);
  CHECK(member(poly("x2*x1^3", F3), span_at_type(cpg0, {3, 1})) == Membership::Yes);
  CHECK(member(poly("[x1,x2]*[x3,x4]", F3), span_at_type(cpg0, {1, 1, 1, 1})) ==
        Membership::Yes);

  CHECK_THROWS_AS(member(poly("x1 + x1*x2"), b), TypeMismatch);
  CHECK_THROWS_AS(member(poly("x1*x2*x3"), b), TypeMismatch);
}

TEST_CASE("monotonicity in the cap") {
  GeneratorSet S = builtin_generators(BuiltinSet::S, F3, 1);
  TSpaceBasis small = span_at_type(S, {2, 2}, 2);
  TSpaceBasis big = span_at_type(S, {2, 2}, 4);
  CHECK(big.dimension() >= small.dimension());
  for (size_t r = 0; r < small.dimension(); ++r) {
    CHECK(member(small.row_poly(r), big) == Membership::Yes);
  }
}

TEST_CASE("span rows evaluate centrally") {
  // rows from S are central or identities; rows from TG0 are identities
  GeneratorSet S = builtin_generators(BuiltinSet::S, F3, 1);
  GeneratorSet TG0 = builtin_generators(BuiltinSet::TG0, F3, 0);
  for (const std::vector<uint32_t>& type :
       {std::vector<uint32_t>{1, 1}, {2, 1}, {2, 2}, {1, 1, 1}}) {
    TSpaceBasis bs = span_at_type(S, type);
    uint32_t total = 0;
    for (uint32_t r : type) total += r;
    uint32_t trunc = std::max(2 * total, total + 2);
    for (size_t r = 0; r < bs.dimension(); ++r) {
      VerdictResult v = classify_polynomial(bs.row_poly(r), false, trunc);
      CHECK(v.verdict != Verdict::Neither);
    }
    TSpaceBasis bt = span_at_type(TG0, type);
    for (size_t r = 0; r < bt.dimension(); ++r) {
      CHECK(classify_polynomial(bt.row_poly(r), false, trunc).verdict == Verdict::Identity);
    }
    TSpaceBasis bc = span_at_type(builtin_generators(BuiltinSet::CPG0, F3, 1), type);
    for (size_t r = 0; r < bc.dimension(); ++r) {
      CHECK(classify_polynomial(bc.row_poly(r), false, trunc).verdict != Verdict::Neither);
    }
  }
}

TEST_CASE("certified classifications are confirmed by bounded membership") {
  // pure-end terms within the exponent bounds classify as S and must land
  // in the span of S + T3 at their own multidegree; the unital S1 class
  // lands in S1 + T3 likewise
  GeneratorSet S = builtin_generators(BuiltinSet::S, F3, 1);
  GeneratorSet T3g = builtin_generators(BuiltinSet::T3, F3, 0);
  for (uint32_t b1 = 0; b1 <= 2; ++b1) {
    for (uint32_t b2 = 0; b2 <= 2; ++b2) {
      NormalTerm u;
      u.end = {EndBlock{1, 2, b1, b2}};
      auto cl = classify(u, F3, false);
      REQUIRE(cl.space == Classification::S);
      REQUIRE(cl.certified);
      FreePoly f = expand(u, F3, false);
      std::vector<uint32_t> type{b1 + 1, b2 + 1};
      CHECK(member(f, span_at_type(std::vector<GeneratorSet>{S, T3g}, type)) ==
            Membership::Yes);
    }
  }
  NormalTerm two_blocks;
  two_blocks.end = {EndBlock{1, 2, 0, 0}, EndBlock{3, 4, 0, 0}};
  CHECK(member(expand(two_blocks, F3, false),
               span_at_type(std::vector<GeneratorSet>{S, T3g}, {1, 1, 1, 1})) ==
        Membership::Yes);
  // unital case: beginning degrees divisible by p
  GeneratorSet S1 = builtin_generators(BuiltinSet::S1, F3, 1);
  GeneratorSet T3u = with_unitarity(T3g, true);
  NormalTerm s1term;
  s1term.beginning = {{1, 3}};
  s1term.end = {EndBlock{2, 3, 1, 0}};
  auto cl1 = classify(s1term, F3, true);
  REQUIRE(cl1.space == Classification::S1);
  REQUIRE(cl1.certified);
  CHECK(member(expand(s1term, F3, true),
               span_at_type(std::vector<GeneratorSet>{S1, T3u}, {3, 2, 1})) ==
        Membership::Yes);
}

TEST_CASE("unital span rows are central in the unitary algebra") {
  GeneratorSet S1 = builtin_generators(BuiltinSet::S1, F3, 1);
  for (const std::vector<uint32_t>& type : {std::vector<uint32_t>{3}, {1, 1}, {3, 1}}) {
    TSpaceBasis b = span_at_type(S1, type);
    uint32_t total = 0;
    for (uint32_t r : type) total += r;
    uint32_t trunc = std::max(2 * total, total + 2);
    for (size_t r = 0; r < b.dimension(); ++r) {
      CHECK(classify_polynomial(b.row_poly(r), true, trunc).verdict != Verdict::Neither);
    }
  }
  // the S1 span at type (3) reaches x1^3 itself
  TSpaceBasis b3 = span_at_type(S1, {3});
  CHECK(member(poly("x1^3", F3, true), b3) == Membership::Yes);
}

TEST_CASE("resource limits are reported") {
  GeneratorSet t3 = builtin_generators(BuiltinSet::T3, Q, 0);
  CHECK_THROWS_AS(span_at_type(std::vector<GeneratorSet>{t3}, {2, 2, 2}, 0, 5), ResourceLimit);
}
