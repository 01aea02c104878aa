#pragma once

#include <cstdint>
#include <random>

#include "wedge/freepoly.hpp"
#include "wedge/grassmann.hpp"

namespace wedge {

/// Deterministic RNG wrapper so suite output is reproducible per seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next(uint64_t bound) {  // uniform in [0, bound)
    return std::uniform_int_distribution<uint64_t>(0, bound - 1)(eng_);
  }
  long long next_int(long long lo, long long hi) {  // inclusive
    return std::uniform_int_distribution<long long>(lo, hi)(eng_);
  }

  Scalar scalar(Characteristic ch, long long coeff_bound = 5) {
    if (ch.is_zero()) return Scalar::of_int(next_int(-coeff_bound, coeff_bound), ch);
    return Scalar::of_int(next_int(0, ch.value() - 1), ch);
  }

  /// Nonzero scalar.
  Scalar nonzero_scalar(Characteristic ch, long long coeff_bound = 5) {
    for (;;) {
      Scalar s = scalar(ch, coeff_bound);
      if (!s.is_zero()) return s;
    }
  }

  Blade blade(uint32_t truncation, bool allow_unit = false) {
    for (;;) {
      Blade b;
      for (uint32_t i = 1; i <= truncation; ++i) {
        if (next(2)) b.indices.push_back(i);
      }
      if (!b.indices.empty() || allow_unit) return b;
    }
  }

  GrassmannElement element(Characteristic ch, bool unitary, uint32_t truncation,
                           uint32_t max_terms = 4, long long coeff_bound = 3) {
    GrassmannElement g(ch, unitary, truncation);
    uint64_t terms = 1 + next(max_terms);
    for (uint64_t k = 0; k < terms; ++k) {
      g.add_term(blade(truncation, unitary), scalar(ch, coeff_bound));
    }
    return g;
  }

  /// Even (resp. odd) element: sum of even-length (odd-length) blades.
  GrassmannElement graded_element(Characteristic ch, bool unitary, uint32_t truncation, bool odd,
                                  uint32_t max_terms = 4, long long coeff_bound = 3) {
    GrassmannElement g(ch, unitary, truncation);
    uint64_t terms = 1 + next(max_terms);
    for (uint64_t k = 0; k < terms; ++k) {
      Blade b = blade(truncation);
      if (b.odd() != odd) continue;
      g.add_term(b, scalar(ch, coeff_bound));
    }
    return g;
  }

  Word word(uint32_t nvars, uint32_t degree) {
    Word w;
    for (uint32_t k = 0; k < degree; ++k) {
      w.letters.push_back(1 + static_cast<uint32_t>(next(nvars)));
    }
    return w;
  }

  FreePoly poly(Characteristic ch, bool unitary, uint32_t nvars, uint32_t max_degree,
                uint32_t max_terms, long long coeff_bound = 5) {
    FreePoly f(ch, unitary);
    uint64_t terms = 1 + next(max_terms);
    for (uint64_t k = 0; k < terms; ++k) {
      auto deg = static_cast<uint32_t>(1 + next(max_degree));
      f.add_term(word(nvars, deg), scalar(ch, coeff_bound));
    }
    return f;
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace wedge
