#include "wedge/blade.hpp"

#include <sstream>

#include "wedge/errors.hpp"

namespace wedge {

bool Blade::valid() const {
  uint32_t prev = 0;
  for (uint32_t i : indices) {
    if (i == 0 || i <= prev) return false;
    prev = i;
  }
  return true;
}

uint64_t Blade::mask() const {
  uint64_t m = 0;
  for (uint32_t i : indices) {
    if (i > 64) throw ResourceLimit("blade index " + std::to_string(i) + " exceeds mask width");
    m |= uint64_t{1} << (i - 1);
  }
  return m;
}

std::string Blade::str() const {
  if (indices.empty()) return "1";
  std::ostringstream os;
  for (size_t k = 0; k < indices.size(); ++k) {
    if (k) os << "*";
    os << "e" << indices[k];
  }
  return os.str();
}

BladeProduct blade_mul(const Blade& a, const Blade& b) {
  BladeProduct out;
  out.blade.indices.reserve(a.indices.size() + b.indices.size());
  size_t i = 0, j = 0;
  // Transpositions needed to interleave b into a: each b-index passes over
  // every remaining a-index that is larger.
  uint64_t transpositions = 0;
  while (i < a.indices.size() && j < b.indices.size()) {
    if (a.indices[i] < b.indices[j]) {
      out.blade.indices.push_back(a.indices[i++]);
    } else if (a.indices[i] > b.indices[j]) {
      transpositions += a.indices.size() - i;
      out.blade.indices.push_back(b.indices[j++]);
    } else {
      return BladeProduct{};  // shared index, e_i^2 = 0
    }
  }
  for (; i < a.indices.size(); ++i) out.blade.indices.push_back(a.indices[i]);
  for (; j < b.indices.size(); ++j) out.blade.indices.push_back(b.indices[j]);
  out.sign = (transpositions % 2 == 0) ? 1 : -1;
  return out;
}

}  // namespace wedge
