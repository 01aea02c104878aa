#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wedge/freepoly.hpp"

namespace wedge {

enum class Closure { TSpace, TIdeal };

/// Named generator family whose substitution closure is taken.
struct GeneratorSet {
  std::string name;
  std::vector<FreePoly> generators;
  Closure closure = Closure::TSpace;
  bool unitary = false;
  Characteristic ch;
};

/// The generator families the theorems speak about:
///   S    nonunitary central T-space generators: [x1,x2] (+ the block
///        products w_n for p > 2)
///   S1   unitary variant: adds x1^p and the x1^p-prefixed block products
///   T3   the T-ideal generated by [[x1,x2],x3]
///   TG0  identities of G0: T3 plus the T-ideal of x1^p when p > 2
///   CPG0 central polynomials of G0 (T-space form)
///   CPG  central polynomials of G (T-space form)
/// block_bound caps n in the w_n-style families.
enum class BuiltinSet { S, S1, T3, TG0, CPG0, CPG };

GeneratorSet builtin_generators(BuiltinSet which, Characteristic p, uint32_t block_bound);

/// w_n = prod_{k=1}^{n} [x_{2k-1}, x_{2k}] x_{2k-1}^{p-1} x_{2k}^{p-1}.
FreePoly block_product(uint32_t n, Characteristic p, bool unitary);

/// Exact row-reduced span of substitution instances of the generators at a
/// fixed multidegree. Columns are the words of that type in degree-lex
/// order; rows are in reduced echelon form.
struct TSpaceBasis {
  std::vector<uint32_t> type;
  Characteristic ch;
  bool unitary = false;
  uint32_t cap = 0;
  std::vector<Word> columns;
  std::vector<std::vector<Scalar>> rows;
  std::vector<std::string> provenance;  // one entry per pivot row
  size_t instances_seen = 0;

  size_t dimension() const { return rows.size(); }
  FreePoly row_poly(size_t r) const;
  std::string str() const;
};

/// Enumerate monomial substitution instances (words over the type's
/// variables, plus the unit word in unitary mode; for T-ideals with left and
/// right monomial multipliers) landing exactly on the target type, and
/// row-reduce them. Monotone in the cap. `budget` bounds the number of
/// instances expanded before ResourceLimit.
TSpaceBasis span_at_type(const GeneratorSet& gens, const std::vector<uint32_t>& type,
                         uint32_t cap = 0, size_t budget = 2000000);

/// Span of a sum of generator sets (for example S + T(G0)); the sets must
/// agree on characteristic and unitarity but may differ in closure.
TSpaceBasis span_at_type(const std::vector<GeneratorSet>& sets,
                         const std::vector<uint32_t>& type, uint32_t cap = 0,
                         size_t budget = 2000000);

/// Rebuild the generators with the other unitarity flag (same words); lets
/// the nonunitary T3 ideal participate in unitary spans.
GeneratorSet with_unitarity(const GeneratorSet& gs, bool unitary);

enum class Membership { Yes, NoAtThisCap };

/// Exact linear solvability of f against the basis rows. Yes is absolute;
/// No is relative to the substitution cap.
Membership member(const FreePoly& f, const TSpaceBasis& basis);

/// Exact kernel computation: all multihomogeneous polynomials of the type
/// whose generic evaluation in the truncated algebra has zero odd part
/// (central-or-identity candidates of the truncation). Truncation
/// 2 * total degree realizes every pattern of the untruncated algebra.
TSpaceBasis central_search(const std::vector<uint32_t>& type, Characteristic p, bool unitary,
                           uint32_t truncation);

/// Same reduced row echelon form.
bool same_row_space(const TSpaceBasis& a, const TSpaceBasis& b);

/// All words of the given multidegree, in degree-lex order.
std::vector<Word> words_of_type(const std::vector<uint32_t>& type);

}  // namespace wedge
