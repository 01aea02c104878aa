#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wedge/freepoly.hpp"

namespace wedge {

/// One commutator block [x_lo, x_hi] * x_lo^lo_exp * x_hi^hi_exp with lo < hi.
struct EndBlock {
  uint32_t lo = 0, hi = 0;
  uint32_t lo_exp = 0, hi_exp = 0;

  friend auto operator<=>(const EndBlock&, const EndBlock&) = default;
};

/// Canonical spanning term modulo the triple-commutator T-ideal: an ordered
/// power product (the beginning) followed by commutator blocks (the end).
/// The beginning variables are strictly increasing and disjoint from the end
/// variables; the full end variable sequence lo1 < hi1 < lo2 < hi2 < ... is
/// strictly increasing. Not both parts may be empty.
struct NormalTerm {
  std::vector<std::pair<uint32_t, uint32_t>> beginning;  // (variable, exponent >= 1)
  std::vector<EndBlock> end;

  uint32_t lbeg() const { return static_cast<uint32_t>(beginning.size()); }
  uint32_t lend() const { return static_cast<uint32_t>(end.size()); }
  uint32_t total_degree() const;
  uint32_t degree_of(uint32_t var) const;
  bool in_beginning(uint32_t var) const;
  bool in_end(uint32_t var) const;
  uint32_t max_variable() const;
  bool valid() const;

  std::string str() const;

  friend auto operator<=>(const NormalTerm&, const NormalTerm&) = default;
};

enum class Ordering { Less, Equal, Greater };

/// Total order on normal terms: lower total degree is greater; then fewer
/// end blocks is greater; then the first variable with strictly smaller
/// per-variable degree decides; then the first variable placed in the end of
/// one term and the beginning of the other decides (end side is greater).
/// Throws Incomparable for distinct terms none of the conditions separates
/// (impossible for valid terms; kept as a guard).
Ordering term_compare(const NormalTerm& u, const NormalTerm& v);

/// term_compare plus which condition (1-4) decided and, for conditions 3/4,
/// the deciding variable index.
struct CompareDetail {
  Ordering ord = Ordering::Equal;
  int condition = 0;
  uint32_t index = 0;
};
CompareDetail term_compare_detail(const NormalTerm& u, const NormalTerm& v);

enum class ReductionMode {
  TripleCommutator,             // reduce modulo T^(3) only
  TripleCommutatorAndPthPowers  // additionally drop p-th powers (mod T(G0))
};

/// Linear combination of normal terms, understood modulo the congruence the
/// mode records. For unitary input the coefficient of the unit word rides in
/// `constant`.
struct NormalForm {
  std::map<NormalTerm, Scalar> terms;
  Scalar constant;
  ReductionMode mode = ReductionMode::TripleCommutator;
  Characteristic ch;
  bool unitary = false;

  bool is_zero() const { return terms.empty() && constant.is_zero(); }
  std::string str() const;
};

/// Rewrite f into a combination of normal terms modulo T^(3) (and modulo
/// p-th powers in the second mode). Strategy: bubble out-of-order adjacent
/// letters with xy = yx + [x,y], divert spawned commutators (central modulo
/// T^(3)) into a side list, kill terms whose commutator entries repeat a
/// variable, then sort entries into increasing blocks with the sign given by
/// the permutation parity and attach leftover powers of end variables to
/// their blocks.
NormalForm normalize(const FreePoly& f, ReductionMode mode);

/// Literal expansion of a normal term into the free algebra.
FreePoly expand(const NormalTerm& t, Characteristic ch, bool unitary);
FreePoly expand(const NormalForm& nf);

/// Evaluate the combination directly (powers and blocks memoized across
/// terms); agrees with expand(nf).evaluate(assignment).
GrassmannElement evaluate_normal_form(const NormalForm& nf,
                                      const std::map<uint32_t, GrassmannElement>& assignment);

/// Decomposition classes: terms with a beginning (R / R1) versus terms
/// certified inside the central T-space (S / S1).
struct Classification {
  enum Space { R, S, R1, S1 } space;
  /// True when membership follows from the certified rewriting facts
  /// (exponent bounds respected); false marks the uncertified leftover case
  /// of a pure-end term with an exponent >= p.
  bool certified = true;

  std::string str() const;
};

Classification classify(const NormalTerm& u, Characteristic ch, bool unitary);

}  // namespace wedge
