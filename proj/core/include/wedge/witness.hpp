#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wedge/grassmann.hpp"
#include "wedge/normal_form.hpp"

namespace wedge {

/// w = sum_{j=N+1}^{N+n} e_{2j-1} e_{2j}: n disjoint even pairs. Satisfies
/// w^n = n! e_{2N+1}...e_{2N+2n} and w^m for m < n is supported strictly
/// inside s(w).
GrassmannElement even_pair_sum(uint32_t N, uint32_t n, Characteristic ch, bool unitary = false,
                               uint32_t truncation = 0);

/// v = w + e_{2N+2n+1}: the pair sum plus one lone odd generator. Satisfies
/// v^{n+1} = (n+1)! e_{2N+1}...e_{2N+2n+1}.
GrassmannElement even_pair_sum_plus_odd(uint32_t N, uint32_t n, Characteristic ch,
                                        bool unitary = false, uint32_t truncation = 0);

/// Membership test for the nonunitary separating family M_{m,n}: x_m is the
/// largest beginning variable, the beginning and end variables partition
/// {1..n} with the end of even size, and for p > 2 every beginning exponent
/// lies in [1, p-1] and every block exponent in [0, p-1].
bool in_family(const NormalTerm& u, uint32_t m, uint32_t n, Characteristic ch);

/// Membership test for the unital family M'_{m,n}(r): nonempty beginning
/// containing x_m, per-variable degrees equal to r, and (p > 2) r_m not
/// divisible by p.
bool in_graded_family(const NormalTerm& u, uint32_t m, uint32_t n,
                      const std::vector<uint32_t>& type, Characteristic ch);

/// Exhaustive enumeration of M_{m,n}, sorted descending in the term order.
/// For p = 0 the exponent bounds must be supplied via max_exponent.
std::vector<NormalTerm> enumerate_family(uint32_t m, uint32_t n, Characteristic ch,
                                         uint32_t max_exponent = 0, size_t limit = 200000);

/// Exhaustive enumeration of M'_{m,n}(r), sorted descending.
std::vector<NormalTerm> enumerate_graded_family(uint32_t m, uint32_t n,
                                                const std::vector<uint32_t>& type,
                                                Characteristic ch, size_t limit = 200000);

struct WitnessAssignment {
  std::map<uint32_t, GrassmannElement> images;
  uint32_t z = 0;  // generator count of the ambient truncated algebra
};

/// Separating substitution for u in M_{m,n}: pairwise disjoint supports
/// tiling {1..z} with z = 2(deg u - lend u) - 1, such that u evaluates to a
/// nonzero multiple of e_1...e_z, every strictly smaller family member
/// vanishes, and (p > 2) [g_m, g] g_m^{p-1} = 0 for all g.
WitnessAssignment separating_assignment(const NormalTerm& u, uint32_t m, uint32_t n,
                                        Characteristic ch);

/// Separating substitution for u in M'_{m,n}(r) in the unitary algebra:
/// g_m = 1 + e_m, other beginning variables 1, end variables 1 + e_j;
/// z = 2 lend(u) + 1. The value is (1 + r_m e_m) 2^s prod e_{j}e_{j'}.
WitnessAssignment unital_separating_assignment(const NormalTerm& u, uint32_t m, uint32_t n,
                                               const std::vector<uint32_t>& type,
                                               Characteristic ch);

}  // namespace wedge
