#include "wedge/tspace.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "wedge/central.hpp"
#include "wedge/errors.hpp"

namespace wedge {

FreePoly block_product(uint32_t n, Characteristic p, bool unitary) {
  if (p.is_zero()) throw CharacteristicMismatch("block products are defined for p > 2");
  uint32_t e = p.value() - 1;
  FreePoly acc(p, unitary);
  bool first = true;
  for (uint32_t k = 1; k <= n; ++k) {
    FreePoly a = FreePoly::variable(2 * k - 1, p, unitary);
    FreePoly b = FreePoly::variable(2 * k, p, unitary);
    FreePoly block = a.commutator(b) * a.pow(e) * b.pow(e);
    acc = first ? block : acc * block;
    first = false;
  }
  return acc;
}

namespace {

FreePoly var(uint32_t i, Characteristic ch, bool unitary) {
  return FreePoly::variable(i, ch, unitary);
}

/// x1^p * prod_{i=1}^{k} [x_{2i}, x_{2i+1}] x_{2i}^{p-1} x_{2i+1}^{p-1}.
FreePoly unital_block_product(uint32_t k, Characteristic p) {
  uint32_t e = p.value() - 1;
  FreePoly acc = var(1, p, true).pow(p.value());
  for (uint32_t i = 1; i <= k; ++i) {
    FreePoly a = var(2 * i, p, true);
    FreePoly b = var(2 * i + 1, p, true);
    acc = acc * (a.commutator(b) * a.pow(e) * b.pow(e));
  }
  return acc;
}

}  // namespace

GeneratorSet builtin_generators(BuiltinSet which, Characteristic p, uint32_t block_bound) {
  GeneratorSet gs;
  gs.ch = p;
  bool prime = p.is_prime();
  switch (which) {
    case BuiltinSet::S: {
      gs.name = "S";
      gs.closure = Closure::TSpace;
      gs.unitary = false;
      gs.generators.push_back(var(1, p, false).commutator(var(2, p, false)));
      if (prime) {
        for (uint32_t n = 1; n <= block_bound; ++n) {
          gs.generators.push_back(block_product(n, p, false));
        }
      }
      break;
    }
    case BuiltinSet::S1: {
      gs.name = "S1";
      gs.closure = Closure::TSpace;
      gs.unitary = true;
      gs.generators.push_back(var(1, p, true).commutator(var(2, p, true)));
      if (prime) {
        gs.generators.push_back(var(1, p, true).pow(p.value()));
        for (uint32_t k = 1; k <= block_bound; ++k) {
          gs.generators.push_back(unital_block_product(k, p));
        }
      }
      break;
    }
    case BuiltinSet::T3: {
      gs.name = "T3";
      gs.closure = Closure::TIdeal;
      gs.unitary = false;
      gs.generators.push_back(
          var(1, p, false).commutator(var(2, p, false)).commutator(var(3, p, false)));
      break;
    }
    case BuiltinSet::TG0: {
      gs.name = "TG0";
      gs.closure = Closure::TIdeal;
      gs.unitary = false;
      gs.generators.push_back(
          var(1, p, false).commutator(var(2, p, false)).commutator(var(3, p, false)));
      if (prime) gs.generators.push_back(var(1, p, false).pow(p.value()));
      break;
    }
    case BuiltinSet::CPG0: {
      gs.name = "CPG0";
      gs.closure = Closure::TSpace;
      gs.unitary = false;
      FreePoly c12 = var(1, p, false).commutator(var(2, p, false));
      FreePoly c34 = var(3, p, false).commutator(var(4, p, false));
      gs.generators.push_back(c12);
      if (prime) {
        gs.generators.push_back(var(1, p, false).pow(p.value()));
        gs.generators.push_back(var(2, p, false) * var(1, p, false).pow(p.value()));
      }
      gs.generators.push_back(c12 * c34);
      if (prime) {
        for (uint32_t n = 1; n <= block_bound; ++n) {
          gs.generators.push_back(block_product(n, p, false));
        }
      }
      break;
    }
    case BuiltinSet::CPG: {
      gs.name = "CPG";
      gs.closure = Closure::TSpace;
      gs.unitary = true;
      FreePoly c12 = var(1, p, true).commutator(var(2, p, true));
      FreePoly c34 = var(3, p, true).commutator(var(4, p, true));
      gs.generators.push_back(c12);
      if (prime) gs.generators.push_back(var(1, p, true).pow(p.value()));
      gs.generators.push_back(c12 * c34);
      if (prime) {
        for (uint32_t n = 1; n <= block_bound; ++n) {
          gs.generators.push_back(var(2 * n + 1, p, true).pow(p.value()) *
                                  block_product(n, p, true));
        }
      }
      break;
    }
  }
  return gs;
}

std::vector<Word> words_of_type(const std::vector<uint32_t>& type) {
  std::vector<Word> out;
  std::vector<uint32_t> remaining = type;
  uint32_t total = 0;
  for (uint32_t r : type) total += r;
  Word cur;
  std::function<void()> rec = [&] {
    if (cur.letters.size() == total) {
      out.push_back(cur);
      return;
    }
    for (uint32_t v = 1; v <= type.size(); ++v) {
      if (remaining[v - 1] == 0) continue;
      --remaining[v - 1];
      cur.letters.push_back(v);
      rec();
      cur.letters.pop_back();
      ++remaining[v - 1];
    }
  };
  rec();
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return WordOrder{}(a, b);
  });
  return out;
}

namespace {

/// Streaming reduced-echelon accumulator over the word columns.
class Echelon {
 public:
  Echelon(Characteristic ch, size_t cols) : ch_(ch), cols_(cols) {}

  /// Reduce `row` against the pivots; if a remainder survives, normalize it,
  /// back-substitute into earlier rows and record it. Returns true if rank grew.
  bool insert(std::vector<Scalar> row, std::string provenance) {
    size_t lead = reduce(row);
    if (lead == cols_) return false;
    Scalar inv = row[lead].inverse();
    for (size_t j = lead; j < cols_; ++j) row[j] = row[j] * inv;
    for (size_t r = 0; r < rows_.size(); ++r) {
      Scalar c = rows_[r][lead];
      if (c.is_zero()) continue;
      for (size_t j = lead; j < cols_; ++j) rows_[r][j] -= c * row[j];
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(row));
    pivots_.insert(pivots_.begin() + static_cast<long>(pos), lead);
    provenance_.insert(provenance_.begin() + static_cast<long>(pos), std::move(provenance));
    return true;
  }

  /// Remainder leading column, cols_ if fully reduced to zero.
  size_t reduce(std::vector<Scalar>& row) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      Scalar c = row[pivots_[r]];
      if (c.is_zero()) continue;
      for (size_t j = pivots_[r]; j < cols_; ++j) row[j] -= c * rows_[r][j];
    }
    for (size_t j = 0; j < cols_; ++j) {
      if (!row[j].is_zero()) return j;
    }
    return cols_;
  }

  size_t rank() const { return rows_.size(); }
  std::vector<std::vector<Scalar>> take_rows() { return std::move(rows_); }
  std::vector<std::string> take_provenance() { return std::move(provenance_); }

 private:
  Characteristic ch_;
  size_t cols_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<size_t> pivots_;
  std::vector<std::string> provenance_;
};

bool all_zero(const std::vector<uint32_t>& v) {
  return std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; });
}

/// Enumerate (m_1,...,m_k) with sum_i deg_i * m_i = target, each m_i a
/// multidegree vector; m_i = 0 is allowed only where units_ok[i] holds.
void image_degree_splits(const std::vector<uint32_t>& target,
                         const std::vector<uint32_t>& gen_degrees,
                         const std::vector<bool>& units_ok, uint32_t cap,
                         const std::function<void(const std::vector<std::vector<uint32_t>>&)>& emit) {
  size_t k = gen_degrees.size(), t = target.size();
  std::vector<std::vector<uint32_t>> split(k, std::vector<uint32_t>(t, 0));
  std::vector<uint32_t> left = target;
  // enumerate m_i coordinate by coordinate
  std::function<void(size_t)> rec_var = [&](size_t slot) {
    if (slot == k) {
      if (all_zero(left)) emit(split);
      return;
    }
    uint32_t d = gen_degrees[slot];
    // enumerate vectors m with d*m <= left (coordinatewise)
    std::function<void(size_t)> rec_coord = [&](size_t c) {
      if (c == t) {
        uint32_t len = 0;
        for (uint32_t x : split[slot]) len += x;
        if (len == 0 && !units_ok[slot]) return;
        if (cap > 0 && len > cap) return;
        rec_var(slot + 1);
        return;
      }
      uint32_t maxm = d == 0 ? 0 : left[c] / d;
      for (uint32_t mval = 0; mval <= maxm; ++mval) {
        split[slot][c] = mval;
        left[c] -= d * mval;
        rec_coord(c + 1);
        left[c] += d * mval;
        split[slot][c] = 0;
      }
    };
    rec_coord(0);
  };
  rec_var(0);
}

}  // namespace

FreePoly TSpaceBasis::row_poly(size_t r) const {
  FreePoly f(ch, unitary);
  for (size_t j = 0; j < columns.size(); ++j) {
    if (!rows[r][j].is_zero()) f.add_term(columns[j], rows[r][j]);
  }
  return f;
}

std::string TSpaceBasis::str() const {
  std::ostringstream os;
  for (size_t r = 0; r < rows.size(); ++r) {
    os << row_poly(r).str() << "\n";
  }
  return os.str();
}

TSpaceBasis span_at_type(const std::vector<GeneratorSet>& sets,
                         const std::vector<uint32_t>& type, uint32_t cap, size_t budget) {
  if (sets.empty()) throw Error("span_at_type needs at least one generator set");
  TSpaceBasis basis;
  basis.type = type;
  basis.ch = sets.front().ch;
  basis.unitary = sets.front().unitary;
  for (const GeneratorSet& gs : sets) {
    if (!(gs.ch == basis.ch)) throw CharacteristicMismatch("generator sets mix characteristics");
    if (gs.unitary != basis.unitary) throw UnitInNonunitary("generator sets mix unitarity");
  }
  uint32_t total = 0;
  for (uint32_t r : type) total += r;
  basis.cap = cap == 0 ? total : cap;
  basis.columns = words_of_type(type);
  std::map<Word, size_t, WordOrder> col_index;
  for (size_t j = 0; j < basis.columns.size(); ++j) col_index.emplace(basis.columns[j], j);

  Echelon ech(basis.ch, basis.columns.size());
  size_t seen = 0;
  size_t max_rank = basis.columns.size();

  auto consider = [&](const FreePoly& instance, const std::string& prov) {
    if (instance.is_zero()) return;
    if (++seen > budget) {
      throw ResourceLimit("span_at_type exceeded its instance budget of " +
                          std::to_string(budget) + " (rank so far " +
                          std::to_string(ech.rank()) + ")");
    }
    std::vector<Scalar> row(basis.columns.size(), Scalar::zero(basis.ch));
    for (const auto& [w, c] : instance.terms()) {
      auto it = col_index.find(w);
      if (it == col_index.end()) {
        throw TypeMismatch("substitution instance left the target type: " + w.str());
      }
      row[it->second] = c;
    }
    ech.insert(std::move(row), prov);
  };

  for (const GeneratorSet& gens : sets) {
    for (const FreePoly& g : gens.generators) {
      if (g.is_zero()) continue;
      if (ech.rank() == max_rank) break;  // already spans the whole type component
      MultiDegree md = g.multidegree();
      std::vector<uint32_t> gvars;
      std::vector<uint32_t> gdegs;
      for (const auto& [v, d] : md.degrees) {
        gvars.push_back(v);
        gdegs.push_back(d);
      }
      bool tideal = gens.closure == Closure::TIdeal;
      // T-ideal: two extra slots of degree 1 for the left/right monomial
      // multipliers, which may always be void.
      std::vector<uint32_t> slot_degs = gdegs;
      std::vector<bool> units_ok(gdegs.size(), gens.unitary);
      if (tideal) {
        slot_degs.insert(slot_degs.begin(), 1);
        slot_degs.push_back(1);
        units_ok.insert(units_ok.begin(), true);
        units_ok.push_back(true);
      }
      image_degree_splits(
          type, slot_degs, units_ok, basis.cap,
          [&](const std::vector<std::vector<uint32_t>>& split) {
            if (ech.rank() == max_rank) return;
            size_t k = slot_degs.size();
            std::vector<std::vector<Word>> choices(k);
            for (size_t s = 0; s < k; ++s) {
              choices[s] = all_zero(split[s]) ? std::vector<Word>{Word{}}
                                              : words_of_type(split[s]);
            }
            std::vector<size_t> pick(k, 0);
            std::function<void(size_t)> rec = [&](size_t s) {
              if (s == k) {
                std::map<uint32_t, FreePoly> assignment;
                for (size_t q = 0; q < gvars.size(); ++q) {
                  const Word& img = choices[tideal ? q + 1 : q][pick[tideal ? q + 1 : q]];
                  assignment.emplace(
                      gvars[q], img.is_unit()
                                    ? FreePoly::constant(Scalar::one(basis.ch))
                                    : FreePoly::monomial(img, Scalar::one(basis.ch),
                                                         gens.unitary));
                }
                FreePoly inst = g.substitute(assignment);
                if (inst.is_zero()) return;
                std::ostringstream prov;
                prov << gens.name << ": " << g.str() << " <-";
                for (size_t q = 0; q < gvars.size(); ++q) {
                  prov << " x" << gvars[q] << "="
                       << choices[tideal ? q + 1 : q][pick[tideal ? q + 1 : q]].str();
                }
                if (tideal) {
                  const Word& lw = choices[0][pick[0]];
                  const Word& rw = choices[k - 1][pick[k - 1]];
                  if (!lw.is_unit()) {
                    inst = FreePoly::monomial(lw, Scalar::one(basis.ch), gens.unitary) * inst;
                  }
                  if (!rw.is_unit()) {
                    inst = inst * FreePoly::monomial(rw, Scalar::one(basis.ch), gens.unitary);
                  }
                  prov << " left=" << lw.str() << " right=" << rw.str();
                }
                consider(inst, prov.str());
                return;
              }
              for (pick[s] = 0; pick[s] < choices[s].size(); ++pick[s]) rec(s + 1);
            };
            rec(0);
          });
    }
  }
  basis.rows = ech.take_rows();
  basis.provenance = ech.take_provenance();
  basis.instances_seen = seen;
  return basis;
}

TSpaceBasis span_at_type(const GeneratorSet& gens, const std::vector<uint32_t>& type,
                         uint32_t cap, size_t budget) {
  return span_at_type(std::vector<GeneratorSet>{gens}, type, cap, budget);
}

GeneratorSet with_unitarity(const GeneratorSet& gs, bool unitary) {
  if (gs.unitary == unitary) return gs;
  GeneratorSet out = gs;
  out.unitary = unitary;
  out.generators.clear();
  for (const FreePoly& g : gs.generators) {
    FreePoly h(gs.ch, unitary);
    for (const auto& [w, c] : g.terms()) h.add_term(w, c);
    out.generators.push_back(std::move(h));
  }
  return out;
}

Membership member(const FreePoly& f, const TSpaceBasis& basis) {
  if (f.is_zero()) return Membership::Yes;
  MultiDegree md = f.multidegree();
  if (!md.multihomogeneous) {
    throw TypeMismatch("membership needs a multihomogeneous polynomial; split it first");
  }
  std::map<Word, size_t, WordOrder> col_index;
  for (size_t j = 0; j < basis.columns.size(); ++j) col_index.emplace(basis.columns[j], j);
  std::vector<Scalar> row(basis.columns.size(), Scalar::zero(basis.ch));
  for (const auto& [w, c] : f.terms()) {
    auto it = col_index.find(w);
    if (it == col_index.end()) throw TypeMismatch("polynomial is not of the basis type");
    row[it->second] = c;
  }
  // reduce against pivot rows
  Echelon ech(basis.ch, basis.columns.size());
  for (size_t r = 0; r < basis.rows.size(); ++r) ech.insert(basis.rows[r], "");
  return ech.reduce(row) == basis.columns.size() ? Membership::Yes : Membership::NoAtThisCap;
}

TSpaceBasis central_search(const std::vector<uint32_t>& type, Characteristic p, bool unitary,
                           uint32_t truncation) {
  TSpaceBasis basis;
  basis.type = type;
  basis.ch = p;
  basis.unitary = unitary;
  basis.columns = words_of_type(type);
  size_t D = basis.columns.size();
  uint32_t total = 0;
  for (uint32_t r : type) total += r;
  if (truncation < total + 2) {
    throw TruncationMismatch("central_search needs truncation >= total degree + 2");
  }

  // Constraint matrix: odd patterns as rows over the word columns.
  std::vector<std::vector<Scalar>> constraints;
  for (const EvalPattern& pat : enumerate_patterns(type, unitary, truncation)) {
    if (!pat.odd_total()) continue;
    std::vector<Scalar> row(D, Scalar::zero(p));
    bool nonzero = false;
    for (size_t j = 0; j < D; ++j) {
      row[j] = pattern_entry(pat, basis.columns[j], type, p);
      nonzero = nonzero || !row[j].is_zero();
    }
    if (nonzero) constraints.push_back(std::move(row));
  }

  // RREF of the constraint matrix, then read off the kernel basis.
  Echelon ech(p, D);
  for (auto& row : constraints) ech.insert(std::move(row), "");
  std::vector<std::vector<Scalar>> cr = ech.take_rows();
  std::vector<size_t> pivot_cols;
  std::vector<bool> is_pivot(D, false);
  for (const auto& row : cr) {
    for (size_t j = 0; j < D; ++j) {
      if (!row[j].is_zero()) {
        pivot_cols.push_back(j);
        is_pivot[j] = true;
        break;
      }
    }
  }
  Echelon kernel(p, D);
  for (size_t free_col = 0; free_col < D; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Scalar> v(D, Scalar::zero(p));
    v[free_col] = Scalar::one(p);
    for (size_t r = 0; r < cr.size(); ++r) {
      // pivot coefficient is 1 after RREF
      v[pivot_cols[r]] = -cr[r][free_col];
    }
    kernel.insert(std::move(v), "kernel@" + basis.columns[free_col].str());
  }
  basis.rows = kernel.take_rows();
  basis.provenance = kernel.take_provenance();
  basis.instances_seen = constraints.size();
  return basis;
}

bool same_row_space(const TSpaceBasis& a, const TSpaceBasis& b) {
  if (a.columns != b.columns) return false;
  if (a.rows.size() != b.rows.size()) return false;
  for (size_t r = 0; r < a.rows.size(); ++r) {
    if (a.rows[r] != b.rows[r]) return false;
  }
  return true;
}

}  // namespace wedge
