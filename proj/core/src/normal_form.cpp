#include "wedge/normal_form.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "wedge/errors.hpp"

namespace wedge {

uint32_t NormalTerm::total_degree() const {
  uint32_t d = 0;
  for (const auto& [v, e] : beginning) d += e;
  for (const EndBlock& b : end) d += b.lo_exp + b.hi_exp + 2;
  return d;
}

uint32_t NormalTerm::degree_of(uint32_t var) const {
  for (const auto& [v, e] : beginning) {
    if (v == var) return e;
  }
  for (const EndBlock& b : end) {
    if (b.lo == var) return b.lo_exp + 1;
    if (b.hi == var) return b.hi_exp + 1;
  }
  return 0;
}

bool NormalTerm::in_beginning(uint32_t var) const {
  for (const auto& [v, e] : beginning) {
    if (v == var) return true;
  }
  return false;
}

bool NormalTerm::in_end(uint32_t var) const {
  for (const EndBlock& b : end) {
    if (b.lo == var || b.hi == var) return true;
  }
  return false;
}

uint32_t NormalTerm::max_variable() const {
  uint32_t m = 0;
  if (!beginning.empty()) m = beginning.back().first;
  if (!end.empty()) m = std::max(m, end.back().hi);
  return m;
}

bool NormalTerm::valid() const {
  if (beginning.empty() && end.empty()) return false;
  uint32_t prev = 0;
  for (const auto& [v, e] : beginning) {
    if (v == 0 || v <= prev || e == 0) return false;
    prev = v;
  }
  prev = 0;
  for (const EndBlock& b : end) {
    if (b.lo == 0 || b.lo <= prev || b.hi <= b.lo) return false;
    prev = b.hi;
  }
  for (const auto& [v, e] : beginning) {
    if (in_end(v)) return false;
  }
  return true;
}

std::string NormalTerm::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : beginning) {
    if (!first) os << "*";
    os << "x" << v;
    if (e > 1) os << "^" << e;
    first = false;
  }
  for (const EndBlock& b : end) {
    if (!first) os << "*";
    os << "[x" << b.lo << ",x" << b.hi << "]";
    if (b.lo_exp > 0) os << "*x" << b.lo << (b.lo_exp > 1 ? "^" + std::to_string(b.lo_exp) : "");
    if (b.hi_exp > 0) os << "*x" << b.hi << (b.hi_exp > 1 ? "^" + std::to_string(b.hi_exp) : "");
    first = false;
  }
  return os.str();
}

CompareDetail term_compare_detail(const NormalTerm& u, const NormalTerm& v) {
  if (u == v) return {Ordering::Equal, 0, 0};
  uint32_t du = u.total_degree(), dv = v.total_degree();
  if (du != dv) return {du < dv ? Ordering::Greater : Ordering::Less, 1, 0};
  if (u.lend() != v.lend()) {
    return {u.lend() < v.lend() ? Ordering::Greater : Ordering::Less, 2, 0};
  }
  uint32_t top = std::max(u.max_variable(), v.max_variable());
  for (uint32_t i = 1; i <= top; ++i) {
    uint32_t a = u.degree_of(i), b = v.degree_of(i);
    if (a != b) return {a < b ? Ordering::Greater : Ordering::Less, 3, i};
  }
  for (uint32_t i = 1; i <= top; ++i) {
    bool bu = u.in_beginning(i), bv = v.in_beginning(i);
    if (bu != bv) return {bu ? Ordering::Less : Ordering::Greater, 4, i};
  }
  throw Incomparable("terms share all order data but are distinct: " + u.str() + " vs " + v.str());
}

Ordering term_compare(const NormalTerm& u, const NormalTerm& v) {
  return term_compare_detail(u, v).ord;
}

namespace {

struct WorkItem {
  Scalar coeff;
  std::vector<uint32_t> letters;
  std::vector<std::pair<uint32_t, uint32_t>> comms;  // (lo, hi) in spawn order
};

// Sign of the permutation taking `entries` to sorted order; 0 on repeats.
int sort_parity(std::vector<uint32_t>& entries) {
  int sign = 1;
  for (size_t i = 0; i + 1 < entries.size(); ++i) {
    for (size_t j = 0; j + 1 < entries.size() - i; ++j) {
      if (entries[j] == entries[j + 1]) return 0;
      if (entries[j] > entries[j + 1]) {
        std::swap(entries[j], entries[j + 1]);
        sign = -sign;
      }
    }
  }
  return sign;
}

}  // namespace

NormalForm normalize(const FreePoly& f, ReductionMode mode) {
  NormalForm out;
  out.mode = mode;
  out.ch = f.characteristic();
  out.unitary = f.unitary();
  out.constant = Scalar::zero(out.ch);
  uint32_t p = out.ch.value();
  if (mode == ReductionMode::TripleCommutatorAndPthPowers && p == 0) {
    throw CharacteristicMismatch("p-th power reduction needs a prime characteristic");
  }

  std::deque<WorkItem> work;
  for (const auto& [w, c] : f.terms()) {
    if (w.is_unit()) {
      out.constant += c;
      continue;
    }
    work.push_back(WorkItem{c, w.letters, {}});
  }

  auto emit = [&](WorkItem item) {
    // Commutator entries: a repeated variable makes the term vanish modulo
    // T^(3); otherwise sorting the entries only changes the sign by the
    // permutation parity, and consecutive pairs of the sorted sequence are
    // the blocks.
    std::vector<uint32_t> entries;
    entries.reserve(item.comms.size() * 2);
    for (const auto& [lo, hi] : item.comms) {
      entries.push_back(lo);
      entries.push_back(hi);
    }
    std::vector<uint32_t> sorted = entries;
    int sign = sort_parity(sorted);
    if (sign == 0) return;
    Scalar c = sign < 0 ? -item.coeff : item.coeff;

    NormalTerm t;
    for (size_t k = 0; k < sorted.size(); k += 2) {
      t.end.push_back(EndBlock{sorted[k], sorted[k + 1], 0, 0});
    }
    // letters are sorted now; attach powers of end variables to their block
    for (size_t k = 0; k < item.letters.size();) {
      size_t j = k;
      while (j < item.letters.size() && item.letters[j] == item.letters[k]) ++j;
      uint32_t var = item.letters[k];
      auto exp = static_cast<uint32_t>(j - k);
      bool attached = false;
      for (EndBlock& b : t.end) {
        if (b.lo == var) {
          b.lo_exp += exp;
          attached = true;
          break;
        }
        if (b.hi == var) {
          b.hi_exp += exp;
          attached = true;
          break;
        }
      }
      if (!attached) t.beginning.emplace_back(var, exp);
      k = j;
    }
    if (mode == ReductionMode::TripleCommutatorAndPthPowers) {
      for (const auto& [v, e] : t.beginning) {
        if (e >= p) return;  // contains x^p, an identity of G0
      }
      for (const EndBlock& b : t.end) {
        if (b.lo_exp >= p || b.hi_exp >= p) return;
      }
    }
    auto it = out.terms.find(t);
    if (it == out.terms.end()) {
      out.terms.emplace(std::move(t), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) out.terms.erase(it);
    }
  };

  while (!work.empty()) {
    WorkItem item = std::move(work.front());
    work.pop_front();
    // first adjacent out-of-order pair
    size_t k = 0;
    bool found = false;
    for (; k + 1 < item.letters.size(); ++k) {
      if (item.letters[k] > item.letters[k + 1]) {
        found = true;
        break;
      }
    }
    if (!found) {
      emit(std::move(item));
      continue;
    }
    uint32_t a = item.letters[k], b = item.letters[k + 1];  // a > b
    // x_a x_b = x_b x_a + [x_a, x_b] and [x_a, x_b] = -[x_b, x_a] is central
    // modulo T^(3), so it leaves the word and joins the side list.
    WorkItem swapped = item;
    std::swap(swapped.letters[k], swapped.letters[k + 1]);
    work.push_back(std::move(swapped));

    WorkItem spawned;
    spawned.coeff = -item.coeff;
    spawned.letters = item.letters;
    spawned.letters.erase(spawned.letters.begin() + static_cast<long>(k),
                          spawned.letters.begin() + static_cast<long>(k) + 2);
    spawned.comms = item.comms;
    spawned.comms.emplace_back(b, a);
    work.push_back(std::move(spawned));
  }
  return out;
}

FreePoly expand(const NormalTerm& t, Characteristic ch, bool unitary) {
  std::vector<FreePoly> factors;
  Word w;
  for (const auto& [v, e] : t.beginning) {
    for (uint32_t k = 0; k < e; ++k) w.letters.push_back(v);
  }
  if (!w.letters.empty()) {
    factors.push_back(FreePoly::monomial(w, Scalar::one(ch), unitary));
  }
  for (const EndBlock& b : t.end) {
    FreePoly xl = FreePoly::variable(b.lo, ch, unitary);
    FreePoly xh = FreePoly::variable(b.hi, ch, unitary);
    FreePoly block = xl.commutator(xh);
    for (uint32_t k = 0; k < b.lo_exp; ++k) block = block * xl;
    for (uint32_t k = 0; k < b.hi_exp; ++k) block = block * xh;
    factors.push_back(std::move(block));
  }
  if (factors.empty()) throw Error("cannot expand a term with empty beginning and end");
  FreePoly acc = factors[0];
  for (size_t k = 1; k < factors.size(); ++k) acc = acc * factors[k];
  return acc;
}

FreePoly expand(const NormalForm& nf) {
  FreePoly acc(nf.ch, nf.unitary);
  if (!nf.constant.is_zero()) acc.add_term(Word{}, nf.constant);
  for (const auto& [t, c] : nf.terms) {
    acc = acc + expand(t, nf.ch, nf.unitary).scale(c);
  }
  return acc;
}

GrassmannElement evaluate_normal_form(const NormalForm& nf,
                                      const std::map<uint32_t, GrassmannElement>& assignment) {
  if (assignment.empty()) {
    if (!nf.terms.empty()) throw MissingAssignment("empty assignment");
    GrassmannElement out(nf.ch, nf.unitary, 0);
    if (!nf.constant.is_zero()) out = GrassmannElement::unit(nf.ch, 0).scale(nf.constant);
    return out;
  }
  const GrassmannElement& probe = assignment.begin()->second;
  Characteristic ch = probe.characteristic();
  bool unit_alg = probe.unitary();
  uint32_t trunc = probe.truncation();
  GrassmannElement out(ch, unit_alg, trunc);
  if (!nf.constant.is_zero()) {
    out = GrassmannElement::unit(ch, trunc).scale(nf.constant);
  }
  auto image = [&](uint32_t v) -> const GrassmannElement& {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw MissingAssignment("no image for x" + std::to_string(v));
    return it->second;
  };
  std::map<std::pair<uint32_t, uint32_t>, GrassmannElement> powers;
  auto power = [&](uint32_t v, uint32_t e) -> const GrassmannElement& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) {
      it = powers.emplace(key, image(v).pow(e)).first;
    }
    return it->second;
  };
  std::map<EndBlock, GrassmannElement> blocks;
  auto block = [&](const EndBlock& b) -> const GrassmannElement& {
    auto it = blocks.find(b);
    if (it == blocks.end()) {
      GrassmannElement val = image(b.lo).commutator(image(b.hi));
      if (b.lo_exp > 0) val = val * power(b.lo, b.lo_exp);
      if (b.hi_exp > 0) val = val * power(b.hi, b.hi_exp);
      it = blocks.emplace(b, std::move(val)).first;
    }
    return it->second;
  };
  for (const auto& [t, c] : nf.terms) {
    GrassmannElement acc(ch, unit_alg, trunc);
    bool first = true;
    for (const auto& [v, e] : t.beginning) {
      acc = first ? power(v, e) : acc * power(v, e);
      first = false;
    }
    for (const EndBlock& b : t.end) {
      acc = first ? block(b) : acc * block(b);
      first = false;
    }
    out = out + acc.scale(c);
  }
  return out;
}

std::string NormalForm::str() const {
  if (is_zero()) return "0";
  // print greatest-first in the term order
  std::vector<std::pair<const NormalTerm*, const Scalar*>> sorted;
  sorted.reserve(terms.size());
  for (const auto& [t, c] : terms) sorted.emplace_back(&t, &c);
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return term_compare(*a.first, *b.first) == Ordering::Greater;
  });
  std::ostringstream os;
  bool first = true;
  if (!constant.is_zero()) {
    os << constant.str();
    first = false;
  }
  for (const auto& [tp, cp] : sorted) {
    const NormalTerm& t = *tp;
    const Scalar& c = *cp;
    std::string cs = c.str();
    bool negated = !c.is_symbolic() && !cs.empty() && cs[0] == '-';
    if (first) {
      if (negated) os << "-", cs = cs.substr(1);
    } else {
      os << (negated ? " - " : " + ");
      if (negated) cs = cs.substr(1);
    }
    first = false;
    if (cs == "1") {
      os << t.str();
    } else {
      os << cs << "*" << t.str();
    }
  }
  return os.str();
}

std::string Classification::str() const {
  const char* name = space == R ? "R" : space == S ? "S" : space == R1 ? "R1" : "S1";
  return certified ? name : std::string(name) + " (uncertified: exponent >= p)";
}

Classification classify(const NormalTerm& u, Characteristic ch, bool unitary) {
  uint32_t p = ch.value();
  auto end_bounded = [&] {
    if (p == 0) return true;
    for (const EndBlock& b : u.end) {
      if (b.lo_exp > p - 1 || b.hi_exp > p - 1) return false;
    }
    return true;
  };
  if (!unitary) {
    if (u.lbeg() > 0) return {Classification::R, true};
    return {Classification::S, end_bounded()};
  }
  if (u.lbeg() > 0) {
    bool all_multiples = p > 0;
    if (p > 0) {
      for (const auto& [v, e] : u.beginning) {
        if (e % p != 0) {
          all_multiples = false;
          break;
        }
      }
    }
    if (!all_multiples) return {Classification::R1, true};
    // every beginning variable has degree divisible by p: absorbed into the
    // unital central T-space
    return {Classification::S1, true};
  }
  return {Classification::S1, end_bounded()};
}

}  // namespace wedge
