#include "wedge/freepoly.hpp"

#include <algorithm>
#include <sstream>

#include "wedge/errors.hpp"

namespace wedge {

uint32_t Word::degree_of(uint32_t var) const {
  return static_cast<uint32_t>(std::count(letters.begin(), letters.end(), var));
}

Word Word::concat(const Word& o) const {
  Word w = *this;
  w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
  return w;
}

std::string Word::str() const {
  if (letters.empty()) return "1";
  std::ostringstream os;
  for (size_t k = 0; k < letters.size();) {
    size_t j = k;
    while (j < letters.size() && letters[j] == letters[k]) ++j;
    if (k) os << "*";
    os << "x" << letters[k];
    if (j - k > 1) os << "^" << (j - k);
    k = j;
  }
  return os.str();
}

FreePoly FreePoly::variable(uint32_t i, Characteristic ch, bool unitary) {
  FreePoly f(ch, unitary);
  f.terms_.emplace(Word{i}, Scalar::one(ch));
  return f;
}

FreePoly FreePoly::monomial(Word w, Scalar c, bool unitary) {
  FreePoly f(c.characteristic(), unitary);
  f.add_term(w, c);
  return f;
}

FreePoly FreePoly::constant(Scalar c) {
  FreePoly f(c.characteristic(), true);
  f.add_term(Word{}, c);
  return f;
}

Scalar FreePoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(ch_) : it->second;
}

void FreePoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  if (w.is_unit() && !unitary_) {
    throw UnitInNonunitary("the unit word is not an element of k0<X>");
  }
  for (uint32_t l : w.letters) {
    if (l == 0) throw Error("variable indices start at 1");
  }
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void FreePoly::check_compatible(const FreePoly& o) const {
  if (!(ch_ == o.ch_)) throw CharacteristicMismatch("mixed characteristics in free algebra");
  if (unitary_ != o.unitary_) throw UnitInNonunitary("mixed unitary and nonunitary polynomials");
}

FreePoly FreePoly::operator+(const FreePoly& o) const {
  check_compatible(o);
  FreePoly out = *this;
  for (const auto& [w, c] : o.terms_) out.add_term(w, c);
  return out;
}

FreePoly FreePoly::operator-() const {
  FreePoly out(ch_, unitary_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

FreePoly FreePoly::operator-(const FreePoly& o) const { return *this + (-o); }

FreePoly FreePoly::operator*(const FreePoly& o) const {
  check_compatible(o);
  FreePoly out(ch_, unitary_);
  for (const auto& [wa, ca] : terms_) {
    for (const auto& [wb, cb] : o.terms_) {
      out.add_term(wa.concat(wb), ca * cb);
    }
  }
  return out;
}

FreePoly FreePoly::scale(const Scalar& c) const {
  FreePoly out(ch_, unitary_);
  if (c.is_zero()) return out;
  for (const auto& [w, k] : terms_) {
    Scalar v = k * c;
    if (!v.is_zero()) out.terms_.emplace(w, v);
  }
  return out;
}

FreePoly FreePoly::pow(uint32_t m) const {
  if (m == 0) {
    if (!unitary_) throw UnitInNonunitary("f^0 needs the unit");
    return constant(Scalar::one(ch_));
  }
  FreePoly acc = *this;
  for (uint32_t k = 1; k < m; ++k) acc = acc * *this;
  return acc;
}

FreePoly FreePoly::commutator(const FreePoly& o) const { return *this * o - o * *this; }

FreePoly FreePoly::left_normed_commutator(const std::vector<FreePoly>& args) {
  if (args.empty()) throw Error("left-normed commutator of no arguments");
  FreePoly acc = args[0];
  for (size_t k = 1; k < args.size(); ++k) acc = acc.commutator(args[k]);
  return acc;
}

FreePoly FreePoly::substitute(const std::map<uint32_t, FreePoly>& assignment) const {
  for (const auto& [v, img] : assignment) {
    if (!(img.characteristic() == ch_)) {
      throw CharacteristicMismatch("substitution image has wrong characteristic");
    }
    if (!unitary_) {
      if (img.unitary() || img.coeff(Word{}).is_zero() == false) {
        throw UnitInNonunitary("nonunitary substitution image must be constant-free");
      }
    }
  }
  FreePoly out(ch_, unitary_);
  for (const auto& [w, c] : terms_) {
    FreePoly acc = unitary_ ? constant(Scalar::one(ch_)) : FreePoly(ch_, unitary_);
    bool acc_is_one = true;
    for (uint32_t l : w.letters) {
      auto it = assignment.find(l);
      const FreePoly img = (it != assignment.end()) ? it->second : variable(l, ch_, unitary_);
      acc = acc_is_one && !unitary_ ? img : acc * img;
      acc_is_one = false;
    }
    if (w.is_unit()) {
      out.add_term(w, c);
    } else {
      for (const auto& [wi, ci] : acc.terms_) out.add_term(wi, ci * c);
    }
  }
  return out;
}

GrassmannElement FreePoly::evaluate(const std::map<uint32_t, GrassmannElement>& assignment) const {
  Characteristic ch = ch_;
  bool unit_alg = unitary_;
  uint32_t trunc = 0;
  bool have_meta = false;
  for (const auto& [v, g] : assignment) {
    if (!(g.characteristic() == ch)) {
      throw CharacteristicMismatch("assignment element has wrong characteristic");
    }
    if (!have_meta) {
      unit_alg = g.unitary();
      trunc = g.truncation();
      have_meta = true;
    } else {
      if (g.unitary() != unit_alg) throw UnitInNonunitary("assignment mixes G and G0 elements");
      if (g.truncation() != trunc) throw TruncationMismatch("assignment mixes truncations");
    }
  }
  if (unitary_ && !unit_alg) {
    throw UnitInNonunitary("unitary polynomial needs a unitary target algebra");
  }
  GrassmannElement out(ch, unit_alg, trunc);
  for (const auto& [w, c] : terms_) {
    if (w.is_unit()) {
      out = out + GrassmannElement::unit(ch, trunc).scale(c);
      continue;
    }
    GrassmannElement acc(ch, unit_alg, trunc);
    bool first = true;
    for (uint32_t l : w.letters) {
      auto it = assignment.find(l);
      if (it == assignment.end()) {
        throw MissingAssignment("no image for x" + std::to_string(l));
      }
      acc = first ? it->second : acc * it->second;
      first = false;
    }
    out = out + acc.scale(c);
  }
  return out;
}

std::set<uint32_t> FreePoly::variables() const {
  std::set<uint32_t> vars;
  for (const auto& [w, c] : terms_) vars.insert(w.letters.begin(), w.letters.end());
  return vars;
}

uint32_t FreePoly::total_degree() const {
  uint32_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.degree());
  return d;
}

namespace {
std::map<uint32_t, uint32_t> word_degrees(const Word& w) {
  std::map<uint32_t, uint32_t> d;
  for (uint32_t l : w.letters) ++d[l];
  return d;
}
}  // namespace

MultiDegree FreePoly::multidegree() const {
  if (terms_.empty()) throw ZeroPolynomial("multidegree of the zero polynomial");
  MultiDegree md;
  md.degrees = word_degrees(terms_.begin()->first);
  md.multihomogeneous = true;
  for (const auto& [w, c] : terms_) {
    if (word_degrees(w) != md.degrees) {
      md.multihomogeneous = false;
      break;
    }
  }
  return md;
}

std::vector<FreePoly> FreePoly::multihomogeneous_components() const {
  std::map<std::map<uint32_t, uint32_t>, FreePoly> comps;
  for (const auto& [w, c] : terms_) {
    auto key = word_degrees(w);
    auto it = comps.find(key);
    if (it == comps.end()) it = comps.emplace(key, FreePoly(ch_, unitary_)).first;
    it->second.add_term(w, c);
  }
  std::vector<FreePoly> out;
  out.reserve(comps.size());
  for (auto& [k, f] : comps) out.push_back(std::move(f));
  return out;
}

FreePoly::EssentialSplit FreePoly::essential_split() const {
  EssentialSplit out;
  if (terms_.empty()) {
    out.essential = true;
    return out;
  }
  // find a variable occurring in some but not all monomials
  for (uint32_t v : variables()) {
    bool in_all = true, in_some = false;
    for (const auto& [w, c] : terms_) {
      bool has = w.degree_of(v) > 0;
      in_all = in_all && has;
      in_some = in_some || has;
    }
    if (in_some && !in_all) {
      FreePoly f0(ch_, unitary_), f1(ch_, unitary_);
      for (const auto& [w, c] : terms_) {
        (w.degree_of(v) == 0 ? f0 : f1).add_term(w, c);
      }
      for (const FreePoly& part : {f0, f1}) {
        EssentialSplit sub = part.essential_split();
        for (auto& comp : sub.components) out.components.push_back(std::move(comp));
      }
      out.essential = false;
      return out;
    }
  }
  out.components.push_back(*this);
  out.essential = true;
  return out;
}

bool FreePoly::operator==(const FreePoly& o) const {
  return ch_ == o.ch_ && unitary_ == o.unitary_ && terms_ == o.terms_;
}

std::string FreePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string cs = c.str();
    bool negated = !c.is_symbolic() && !cs.empty() && cs[0] == '-';
    if (first) {
      if (negated) os << "-", cs = cs.substr(1);
    } else {
      os << (negated ? " - " : " + ");
      if (negated) cs = cs.substr(1);
    }
    first = false;
    bool trivial = (cs == "1");
    if (w.is_unit()) {
      os << cs;
    } else if (trivial) {
      os << w.str();
    } else if (c.is_symbolic()) {
      os << "(" << cs << ")*" << w.str();
    } else {
      os << cs << "*" << w.str();
    }
  }
  return os.str();
}

}  // namespace wedge
