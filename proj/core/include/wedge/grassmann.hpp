#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "wedge/blade.hpp"
#include "wedge/scalar.hpp"

namespace wedge {

/// Element of the truncated Grassmann algebra G(n) (unitary) or G0(n)
/// (nonunitary): a sparse Scalar-linear combination of blades. Immutable
/// value semantics; truncation 0 means "no generator bound".
class GrassmannElement {
 public:
  GrassmannElement() = default;
  GrassmannElement(Characteristic ch, bool unitary, uint32_t truncation)
      : ch_(ch), unitary_(unitary), truncation_(truncation) {}

  static GrassmannElement zero(Characteristic ch, bool unitary, uint32_t truncation) {
    return GrassmannElement(ch, unitary, truncation);
  }
  static GrassmannElement unit(Characteristic ch, uint32_t truncation);
  static GrassmannElement term(Blade b, Scalar c, bool unitary, uint32_t truncation);

  Characteristic characteristic() const { return ch_; }
  bool unitary() const { return unitary_; }
  uint32_t truncation() const { return truncation_; }
  const std::map<Blade, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  /// Coefficient of a blade (zero scalar if absent).
  Scalar coeff(const Blade& b) const;

  GrassmannElement operator+(const GrassmannElement& o) const;
  GrassmannElement operator-(const GrassmannElement& o) const;
  GrassmannElement operator*(const GrassmannElement& o) const;
  GrassmannElement operator-() const;
  GrassmannElement scale(const Scalar& c) const;
  GrassmannElement pow(uint32_t m) const;

  /// xy - yx.
  GrassmannElement commutator(const GrassmannElement& o) const;

  /// Even-length blades (and the unit); complements odd_part.
  GrassmannElement even_part() const;
  GrassmannElement odd_part() const;

  /// Union of blade index sets over all terms; empty for zero.
  std::set<uint32_t> support() const;

  /// Substitute base scalars for symbolic coefficients.
  GrassmannElement substitute_scalars(const std::map<Indet, Scalar>& values) const;

  bool operator==(const GrassmannElement& o) const;
  bool operator!=(const GrassmannElement& o) const { return !(*this == o); }

  std::string str() const;

  /// Accumulate c * b into this element (in-place helper for builders).
  void add_term(const Blade& b, const Scalar& c);

 private:
  void check_compatible(const GrassmannElement& o) const;
  void check_blade(const Blade& b) const;

  std::map<Blade, Scalar> terms_;
  Characteristic ch_;
  bool unitary_ = false;
  uint32_t truncation_ = 0;
};

/// True iff [x, e_i] = 0 for every generator index i <= n.
bool is_central_in_truncation(const GrassmannElement& x, uint32_t n);

/// All blades over generators 1..n (without the unit unless requested).
std::vector<Blade> enumerate_blades(uint32_t n, bool include_unit);

/// x_var as a generic element: sum over all blades of G(n)/G0(n) with fresh
/// commuting indeterminates (var, blade mask) as coefficients.
GrassmannElement generic_element(uint32_t var, uint32_t truncation, bool unitary,
                                 Characteristic ch);

}  // namespace wedge
