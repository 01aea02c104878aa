#include "wedge/grassmann.hpp"

#include <sstream>

#include "wedge/errors.hpp"

namespace wedge {

GrassmannElement GrassmannElement::unit(Characteristic ch, uint32_t truncation) {
  GrassmannElement g(ch, true, truncation);
  g.terms_.emplace(Blade::unit(), Scalar::one(ch));
  return g;
}

GrassmannElement GrassmannElement::term(Blade b, Scalar c, bool unitary, uint32_t truncation) {
  GrassmannElement g(c.characteristic(), unitary, truncation);
  g.add_term(b, c);
  return g;
}

void GrassmannElement::check_blade(const Blade& b) const {
  if (!b.valid()) throw Error("malformed blade: " + b.str());
  if (b.is_unit() && !unitary_) {
    throw UnitInNonunitary("the unit blade is not an element of G0");
  }
  if (truncation_ > 0 && b.max_index() > truncation_) {
    throw TruncationMismatch("blade " + b.str() + " exceeds truncation " +
                             std::to_string(truncation_));
  }
}

void GrassmannElement::add_term(const Blade& b, const Scalar& c) {
  if (c.is_zero()) return;
  check_blade(b);
  auto it = terms_.find(b);
  if (it == terms_.end()) {
    terms_.emplace(b, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar GrassmannElement::coeff(const Blade& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Scalar::zero(ch_) : it->second;
}

void GrassmannElement::check_compatible(const GrassmannElement& o) const {
  if (!(ch_ == o.ch_)) throw CharacteristicMismatch("mixed characteristics in Grassmann arithmetic");
  if (unitary_ != o.unitary_) {
    throw UnitInNonunitary("mixed unitary and nonunitary Grassmann elements");
  }
  if (truncation_ != o.truncation_) {
    throw TruncationMismatch("mixed truncations " + std::to_string(truncation_) + " and " +
                             std::to_string(o.truncation_));
  }
}

GrassmannElement GrassmannElement::operator+(const GrassmannElement& o) const {
  check_compatible(o);
  GrassmannElement out = *this;
  for (const auto& [b, c] : o.terms_) out.add_term(b, c);
  return out;
}

GrassmannElement GrassmannElement::operator-() const {
  GrassmannElement out(ch_, unitary_, truncation_);
  for (const auto& [b, c] : terms_) out.terms_.emplace(b, -c);
  return out;
}

GrassmannElement GrassmannElement::operator-(const GrassmannElement& o) const {
  return *this + (-o);
}

GrassmannElement GrassmannElement::operator*(const GrassmannElement& o) const {
  check_compatible(o);
  GrassmannElement out(ch_, unitary_, truncation_);
  for (const auto& [ba, ca] : terms_) {
    for (const auto& [bb, cb] : o.terms_) {
      BladeProduct p = blade_mul(ba, bb);
      if (p.sign == 0) continue;
      Scalar c = ca * cb;
      if (p.sign < 0) c = -c;
      out.add_term(p.blade, c);
    }
  }
  return out;
}

GrassmannElement GrassmannElement::scale(const Scalar& c) const {
  GrassmannElement out(ch_, unitary_, truncation_);
  if (c.is_zero()) return out;
  for (const auto& [b, k] : terms_) {
    Scalar v = k * c;
    if (!v.is_zero()) out.terms_.emplace(b, v);
  }
  return out;
}

GrassmannElement GrassmannElement::pow(uint32_t m) const {
  if (m == 0) {
    if (!unitary_) throw UnitInNonunitary("x^0 needs the unit");
    return unit(ch_, truncation_);
  }
  GrassmannElement acc = *this;
  for (uint32_t k = 1; k < m; ++k) acc = acc * *this;
  return acc;
}

GrassmannElement GrassmannElement::commutator(const GrassmannElement& o) const {
  return *this * o - o * *this;
}

GrassmannElement GrassmannElement::even_part() const {
  GrassmannElement out(ch_, unitary_, truncation_);
  for (const auto& [b, c] : terms_) {
    if (!b.odd()) out.terms_.emplace(b, c);
  }
  return out;
}

GrassmannElement GrassmannElement::odd_part() const {
  GrassmannElement out(ch_, unitary_, truncation_);
  for (const auto& [b, c] : terms_) {
    if (b.odd()) out.terms_.emplace(b, c);
  }
  return out;
}

std::set<uint32_t> GrassmannElement::support() const {
  std::set<uint32_t> s;
  for (const auto& [b, c] : terms_) s.insert(b.indices.begin(), b.indices.end());
  return s;
}

GrassmannElement GrassmannElement::substitute_scalars(const std::map<Indet, Scalar>& values) const {
  GrassmannElement out(ch_, unitary_, truncation_);
  for (const auto& [b, c] : terms_) out.add_term(b, c.substitute(values));
  return out;
}

bool GrassmannElement::operator==(const GrassmannElement& o) const {
  return ch_ == o.ch_ && unitary_ == o.unitary_ && truncation_ == o.truncation_ &&
         terms_ == o.terms_;
}

std::string GrassmannElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    std::string cs = c.str();
    bool negated = !c.is_symbolic() && cs.size() > 0 && cs[0] == '-';
    if (first) {
      if (negated) os << "-", cs = cs.substr(1);
    } else {
      os << (negated ? " - " : " + ");
      if (negated) cs = cs.substr(1);
    }
    first = false;
    bool trivial_coeff = (cs == "1");
    if (b.is_unit()) {
      os << cs;
    } else if (trivial_coeff) {
      os << b.str();
    } else if (c.is_symbolic()) {
      os << "(" << cs << ")*" << b.str();
    } else {
      os << cs << "*" << b.str();
    }
  }
  return os.str();
}

bool is_central_in_truncation(const GrassmannElement& x, uint32_t n) {
  if (x.truncation() > 0 && x.truncation() > n) {
    throw TruncationMismatch("element lives in a larger truncation than the test bound");
  }
  for (uint32_t i = 1; i <= n; ++i) {
    GrassmannElement ei = GrassmannElement::term(
        Blade::single(i), Scalar::one(x.characteristic()), x.unitary(), x.truncation());
    if (!x.commutator(ei).is_zero()) return false;
  }
  return true;
}

std::vector<Blade> enumerate_blades(uint32_t n, bool include_unit) {
  if (n > 24) throw ResourceLimit("refusing to enumerate 2^" + std::to_string(n) + " blades");
  std::vector<Blade> out;
  uint32_t total = uint32_t{1} << n;
  for (uint32_t mask = include_unit ? 0 : 1; mask < total; ++mask) {
    Blade b;
    for (uint32_t i = 0; i < n; ++i) {
      if (mask >> i & 1) b.indices.push_back(i + 1);
    }
    out.push_back(std::move(b));
  }
  return out;
}

GrassmannElement generic_element(uint32_t var, uint32_t truncation, bool unitary,
                                 Characteristic ch) {
  GrassmannElement g(ch, unitary, truncation);
  for (const Blade& b : enumerate_blades(truncation, unitary)) {
    g.add_term(b, Scalar::indeterminate(Indet{var, b.mask()}, ch));
  }
  return g;
}

}  // namespace wedge
