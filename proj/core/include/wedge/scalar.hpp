#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wedge/errors.hpp"

namespace wedge {

/// Field characteristic: 0 (rationals) or an odd prime p >= 3.
/// Characteristic 2 is rejected outright: the Grassmann algebra is
/// commutative there and nothing downstream is meaningful.
class Characteristic {
 public:
  Characteristic() : p_(0) {}
  explicit Characteristic(uint32_t p);

  uint32_t value() const { return p_; }
  bool is_zero() const { return p_ == 0; }
  bool is_prime() const { return p_ != 0; }

  friend bool operator==(Characteristic a, Characteristic b) = default;

 private:
  uint32_t p_;
};

/// Commuting indeterminate, identified by (free variable index, blade mask).
/// Used for generic coefficients c_{i,J} in symbolic Grassmann substitutions;
/// the mask of the empty blade (the unit slot) is 0.
struct Indet {
  uint32_t var = 0;
  uint64_t blade_mask = 0;

  friend auto operator<=>(const Indet&, const Indet&) = default;
};

/// Monomial in commuting indeterminates: sorted (indet, exponent>=1) pairs.
using Mono = std::vector<std::pair<Indet, uint32_t>>;

class Scalar;

/// Sparse commuting polynomial over the base field. Values are base scalars
/// (never symbolic); no zero coefficients are stored.
struct SymPoly {
  std::map<Mono, Scalar> terms;
};

/// Exact scalar: a rational, a residue mod an odd prime, or a sparse
/// polynomial in commuting indeterminates over one of those. Immutable value
/// type; arithmetic never mixes characteristics.
class Scalar {
 public:
  Scalar() : p_(0), v_(mpq_class(0)) {}

  static Scalar zero(Characteristic c);
  static Scalar one(Characteristic c);
  static Scalar of_int(long long v, Characteristic c);
  static Scalar rational(long long num, long long den);
  static Scalar rational(mpq_class q);
  static Scalar residue(unsigned long long r, Characteristic c);
  static Scalar indeterminate(Indet id, Characteristic c);

  Characteristic characteristic() const { return Characteristic(p_); }
  bool is_zero() const;
  bool is_one() const;
  bool is_symbolic() const { return v_.index() == 2; }

  /// Base payloads; only valid for the matching tag.
  const mpq_class& rat() const { return std::get<mpq_class>(v_); }
  uint64_t res() const { return std::get<uint64_t>(v_); }
  const SymPoly& poly() const { return *std::get<std::shared_ptr<const SymPoly>>(v_); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Multiplicative inverse. Throws DivisionByZero on zero and NotInvertible
  /// for symbolic scalars that are not constant.
  Scalar inverse() const;

  /// Ring homomorphism substituting base scalars for indeterminates.
  /// Indeterminates absent from `values` are kept symbolic.
  Scalar substitute(const std::map<Indet, Scalar>& values) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  friend struct SymPoly;
  static void check_same(const Scalar& a, const Scalar& b);
  static Scalar make_poly(SymPoly p, Characteristic c);
  SymPoly as_poly() const;

  uint32_t p_;  // characteristic
  std::variant<mpq_class, uint64_t, std::shared_ptr<const SymPoly>> v_;
};

/// n! reduced into the field (0 in characteristic p whenever n >= p).
Scalar factorial_in_field(uint32_t n, Characteristic c);

/// Binomial coefficient reduced into the field.
Scalar binomial_in_field(uint32_t n, uint32_t k, Characteristic c);

std::string indet_str(const Indet& id);

}  // namespace wedge
