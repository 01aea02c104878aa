#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace wedge {

/// Basis product e_{i1}...e_{im} with strictly increasing indices i >= 1.
/// The empty sequence is the unit and only appears in unitary contexts.
/// Indices are not bounded by machine width.
struct Blade {
  std::vector<uint32_t> indices;

  Blade() = default;
  Blade(std::initializer_list<uint32_t> l) : indices(l) {}
  explicit Blade(std::vector<uint32_t> l) : indices(std::move(l)) {}

  static Blade unit() { return Blade{}; }
  static Blade single(uint32_t i) { return Blade{i}; }

  bool is_unit() const { return indices.empty(); }
  uint32_t degree() const { return static_cast<uint32_t>(indices.size()); }
  bool odd() const { return degree() % 2 == 1; }
  uint32_t max_index() const { return indices.empty() ? 0 : indices.back(); }

  /// Strictly increasing positive indices.
  bool valid() const;

  /// Bitmask over indices 1..64; throws ResourceLimit above that.
  uint64_t mask() const;

  std::string str() const;

  friend auto operator<=>(const Blade&, const Blade&) = default;
};

/// Result of multiplying two blades: sign 0 means the product vanished
/// (shared index), otherwise sign is +1/-1 and blade the merged index set.
struct BladeProduct {
  int sign = 0;
  Blade blade;
};

/// Merge product with transposition counting: e_i e_j = -e_j e_i, e_i^2 = 0.
BladeProduct blade_mul(const Blade& a, const Blade& b);

}  // namespace wedge
