#include "wedge/witness.hpp"

#include <algorithm>
#include <functional>

#include "wedge/errors.hpp"

namespace wedge {

GrassmannElement even_pair_sum(uint32_t N, uint32_t n, Characteristic ch, bool unitary,
                               uint32_t truncation) {
  GrassmannElement w = GrassmannElement::zero(ch, unitary, truncation);
  for (uint32_t j = N + 1; j <= N + n; ++j) {
    w.add_term(Blade{2 * j - 1, 2 * j}, Scalar::one(ch));
  }
  return w;
}

GrassmannElement even_pair_sum_plus_odd(uint32_t N, uint32_t n, Characteristic ch, bool unitary,
                                        uint32_t truncation) {
  GrassmannElement v = even_pair_sum(N, n, ch, unitary, truncation);
  v.add_term(Blade::single(2 * N + 2 * n + 1), Scalar::one(ch));
  return v;
}

bool in_family(const NormalTerm& u, uint32_t m, uint32_t n, Characteristic ch) {
  if (!u.valid() || m == 0 || m > n) return false;
  if (u.lbeg() == 0) return false;
  if (u.beginning.back().first != m) return false;  // x_m is the largest beginning variable
  // beginning and end variables partition {1..n}
  uint32_t covered = 0;
  for (const auto& [v, e] : u.beginning) {
    if (v > n) return false;
    ++covered;
  }
  for (const EndBlock& b : u.end) {
    if (b.hi > n) return false;
    covered += 2;
  }
  if (covered != n) return false;
  if (u.lend() == 0 && m != n) return false;  // pure beginnings exist only for m = n
  uint32_t p = ch.value();
  if (p > 2) {
    for (const auto& [v, e] : u.beginning) {
      if (e < 1 || e > p - 1) return false;
    }
    for (const EndBlock& b : u.end) {
      if (b.lo_exp > p - 1 || b.hi_exp > p - 1) return false;
    }
  }
  return true;
}

bool in_graded_family(const NormalTerm& u, uint32_t m, uint32_t n,
                      const std::vector<uint32_t>& type, Characteristic ch) {
  if (!u.valid() || m == 0 || m > n || type.size() != n) return false;
  if (u.lbeg() == 0 || !u.in_beginning(m)) return false;
  uint32_t p = ch.value();
  if (p > 2 && type[m - 1] % p == 0) return false;
  if (u.max_variable() > n) return false;
  for (uint32_t i = 1; i <= n; ++i) {
    if (u.degree_of(i) != type[i - 1]) return false;
  }
  return true;
}

namespace {

void sort_descending(std::vector<NormalTerm>& terms) {
  std::sort(terms.begin(), terms.end(), [](const NormalTerm& a, const NormalTerm& b) {
    return term_compare(a, b) == Ordering::Greater;
  });
}

// All ways to pick exponents from [lo, hi] for `count` slots.
void exponent_tuples(uint32_t count, uint32_t lo, uint32_t hi,
                     const std::function<void(const std::vector<uint32_t>&)>& emit) {
  std::vector<uint32_t> cur(count, lo);
  if (count == 0) {
    emit(cur);
    return;
  }
  while (true) {
    emit(cur);
    size_t k = count;
    while (k > 0) {
      if (cur[k - 1] < hi) {
        ++cur[k - 1];
        for (size_t j = k; j < count; ++j) cur[j] = lo;
        break;
      }
      --k;
    }
    if (k == 0) break;
  }
}

}  // namespace

std::vector<NormalTerm> enumerate_family(uint32_t m, uint32_t n, Characteristic ch,
                                         uint32_t max_exponent, size_t limit) {
  uint32_t p = ch.value();
  uint32_t max_alpha = p > 2 ? p - 1 : max_exponent;
  if (max_alpha == 0) {
    throw ResourceLimit("characteristic 0 family enumeration needs an exponent bound");
  }
  std::vector<NormalTerm> out;
  if (m == 0 || m > n) return out;
  // beginning variable sets: subsets of {1..m-1}, plus m itself; the rest is
  // the end and must have even size (or be empty, which forces m = n).
  uint32_t below = m - 1;
  for (uint32_t mask = 0; mask < (1u << below); ++mask) {
    std::vector<uint32_t> beg_vars;
    for (uint32_t i = 1; i <= below; ++i) {
      if (mask >> (i - 1) & 1) beg_vars.push_back(i);
    }
    beg_vars.push_back(m);
    std::vector<uint32_t> end_vars;
    for (uint32_t i = 1; i <= n; ++i) {
      if (!std::binary_search(beg_vars.begin(), beg_vars.end(), i)) end_vars.push_back(i);
    }
    if (end_vars.size() % 2 != 0) continue;
    if (end_vars.empty() && m != n) continue;
    uint32_t s = static_cast<uint32_t>(end_vars.size() / 2);
    exponent_tuples(
        static_cast<uint32_t>(beg_vars.size()), 1, max_alpha,
        [&](const std::vector<uint32_t>& alphas) {
          exponent_tuples(2 * s, 0, max_alpha, [&](const std::vector<uint32_t>& betas) {
            NormalTerm t;
            for (size_t k = 0; k < beg_vars.size(); ++k) t.beginning.emplace_back(beg_vars[k], alphas[k]);
            for (uint32_t k = 0; k < s; ++k) {
              t.end.push_back(EndBlock{end_vars[2 * k], end_vars[2 * k + 1], betas[2 * k], betas[2 * k + 1]});
            }
            if (out.size() >= limit) throw ResourceLimit("family enumeration exceeded " + std::to_string(limit));
            out.push_back(std::move(t));
          });
        });
  }
  sort_descending(out);
  return out;
}

std::vector<NormalTerm> enumerate_graded_family(uint32_t m, uint32_t n,
                                                const std::vector<uint32_t>& type,
                                                Characteristic ch, size_t limit) {
  std::vector<NormalTerm> out;
  if (m == 0 || m > n || type.size() != n) return out;
  for (uint32_t r : type) {
    if (r == 0) return out;  // every variable must occur
  }
  uint32_t p = ch.value();
  if (p > 2 && type[m - 1] % p == 0) {
    throw NotInMPrime("degree of x_m must not be divisible by p");
  }
  // choose the beginning set: any subset containing m whose complement has
  // even size; exponents are forced by the degree vector
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> (m - 1) & 1)) continue;
    std::vector<uint32_t> beg_vars, end_vars;
    for (uint32_t i = 1; i <= n; ++i) {
      (mask >> (i - 1) & 1 ? beg_vars : end_vars).push_back(i);
    }
    if (end_vars.size() % 2 != 0) continue;
    NormalTerm t;
    for (uint32_t v : beg_vars) t.beginning.emplace_back(v, type[v - 1]);
    for (size_t k = 0; k < end_vars.size(); k += 2) {
      t.end.push_back(EndBlock{end_vars[k], end_vars[k + 1], type[end_vars[k] - 1] - 1,
                               type[end_vars[k + 1] - 1] - 1});
    }
    if (out.size() >= limit) throw ResourceLimit("family enumeration exceeded " + std::to_string(limit));
    out.push_back(std::move(t));
  }
  sort_descending(out);
  return out;
}

WitnessAssignment separating_assignment(const NormalTerm& u, uint32_t m, uint32_t n,
                                        Characteristic ch) {
  if (!in_family(u, m, n, ch)) {
    throw NotInM("term is not a member of the family: " + u.str());
  }
  WitnessAssignment wa;
  // per-variable layout: even pair count plus an optional lone odd
  // generator, on contiguous ranges tiling {1..z} in variable order
  struct Layout {
    uint32_t pairs;
    bool lone;
  };
  std::vector<Layout> layout(n);
  uint32_t z = 0;
  for (uint32_t v = 1; v <= n; ++v) {
    Layout& l = layout[v - 1];
    if (u.in_beginning(v)) {
      uint32_t alpha = u.degree_of(v);
      l = (v == m) ? Layout{alpha - 1, true}   // support 2*alpha - 1
                   : Layout{alpha, false};     // support 2*alpha
    } else {
      l = Layout{u.degree_of(v) - 1, true};  // support 2*beta + 1
    }
    z += 2 * l.pairs + (l.lone ? 1 : 0);
  }
  wa.z = z;
  uint32_t next = 1;
  for (uint32_t v = 1; v <= n; ++v) {
    const Layout& l = layout[v - 1];
    GrassmannElement g = GrassmannElement::zero(ch, false, z);
    for (uint32_t k = 0; k < l.pairs; ++k) {
      g.add_term(Blade{next, next + 1}, Scalar::one(ch));
      next += 2;
    }
    if (l.lone) {
      g.add_term(Blade::single(next), Scalar::one(ch));
      next += 1;
    }
    wa.images.emplace(v, g);
  }
  return wa;
}

WitnessAssignment unital_separating_assignment(const NormalTerm& u, uint32_t m, uint32_t n,
                                               const std::vector<uint32_t>& type,
                                               Characteristic ch) {
  if (!in_graded_family(u, m, n, type, ch)) {
    throw NotInMPrime("term is not a member of the graded family: " + u.str());
  }
  WitnessAssignment wa;
  wa.z = 2 * u.lend() + 1;
  for (uint32_t v = 1; v <= n; ++v) {
    GrassmannElement g = GrassmannElement::unit(ch, 0);
    if ((v == m) || u.in_end(v)) {
      g.add_term(Blade::single(v), Scalar::one(ch));
    }
    wa.images.emplace(v, g);
  }
  return wa;
}

}  // namespace wedge
