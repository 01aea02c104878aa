#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wedge/freepoly.hpp"

namespace wedge {

/// Evaluation pattern of one multihomogeneous type under the generic
/// substitution x_i -> sum of indeterminate-weighted blades: per variable, a
/// count of odd blades (0 or 1 -- two odd blades on one variable cancel), a
/// count of distinct even blades, and in the unitary algebra a multiplicity
/// for the unit. Two generic-coefficient monomials with the same pattern
/// impose proportional linear conditions, so these patterns are exactly the
/// constraint rows of the generic evaluation.
struct EvalPattern {
  std::vector<uint8_t> odd;    // per variable, 0 or 1
  std::vector<uint32_t> even;  // per variable, number of distinct even blades
  std::vector<uint32_t> unit;  // per variable, unit multiplicity (unitary only)

  /// Smallest generator count that realizes the pattern (odd blades as
  /// single generators, even blades as pairs).
  uint32_t min_support() const;
  bool odd_total() const;  // the landing blade has odd length
  std::string str() const;
};

/// All patterns for the given degree vector realizable within the
/// truncation. type[i] is the degree of x_{i+1}; zero entries are skipped.
std::vector<EvalPattern> enumerate_patterns(const std::vector<uint32_t>& type, bool unitary,
                                            uint32_t truncation);

/// Signed placement count of the pattern against one word: the coefficient
/// (up to a global sign shared by the whole row) of a realizing monomial in
/// the generic evaluation of the word.
Scalar pattern_entry(const EvalPattern& pat, const Word& w, const std::vector<uint32_t>& type,
                     Characteristic ch);

/// Pattern value against a multihomogeneous polynomial of the given type.
Scalar pattern_value(const EvalPattern& pat, const FreePoly& f,
                     const std::vector<uint32_t>& type);

enum class Verdict { Identity, CentralNonIdentity, Neither };

std::string verdict_str(Verdict v);

struct VerdictResult {
  Verdict verdict = Verdict::Identity;
  /// For Neither: a concrete assignment whose image has nonzero odd part,
  /// when one with small field constants exists.
  std::optional<std::map<uint32_t, GrassmannElement>> falsifier;
  std::string note;
};

/// Identity / central / neither, decided by generic evaluation in
/// G0(truncation) or G(truncation) over an infinite field of the
/// polynomial's characteristic. Works per multihomogeneous component.
/// Requires truncation >= total degree + 2; 2 * total degree captures every
/// pattern of the untruncated algebra.
VerdictResult classify_polynomial(const FreePoly& f, bool unitary_algebra, uint32_t truncation);

/// Literal symbolic route: f evaluated at generic elements (indeterminate
/// coefficients on every blade). Exponential in the truncation; used to
/// cross-check the pattern system at small sizes.
GrassmannElement generic_evaluation(const FreePoly& f, bool unitary_algebra, uint32_t truncation);

}  // namespace wedge
