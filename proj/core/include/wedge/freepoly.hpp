#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "wedge/grassmann.hpp"
#include "wedge/scalar.hpp"

namespace wedge {

/// Monomial of the free associative algebra: a sequence of variable indices.
/// The empty word is the unit and only occurs in unitary polynomials.
struct Word {
  std::vector<uint32_t> letters;

  Word() = default;
  Word(std::initializer_list<uint32_t> l) : letters(l) {}
  explicit Word(std::vector<uint32_t> l) : letters(std::move(l)) {}

  bool is_unit() const { return letters.empty(); }
  uint32_t degree() const { return static_cast<uint32_t>(letters.size()); }
  uint32_t degree_of(uint32_t var) const;
  Word concat(const Word& o) const;
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
};

/// Degree-then-lexicographic order; used for canonical printing and as the
/// column order of coefficient matrices.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    return a.letters < b.letters;
  }
};

struct MultiDegree {
  bool multihomogeneous = false;
  /// Degree vector of the first monomial, indexed by variable (present vars only).
  std::map<uint32_t, uint32_t> degrees;
};

/// Element of k0<X> (nonunitary) or k1<X> (unitary): sparse Scalar-linear
/// combination of words. Immutable value semantics.
class FreePoly {
 public:
  FreePoly() : ch_(), unitary_(false) {}
  FreePoly(Characteristic ch, bool unitary) : ch_(ch), unitary_(unitary) {}

  static FreePoly zero(Characteristic ch, bool unitary) { return FreePoly(ch, unitary); }
  static FreePoly variable(uint32_t i, Characteristic ch, bool unitary);
  static FreePoly monomial(Word w, Scalar c, bool unitary);
  static FreePoly constant(Scalar c);  // unitary

  Characteristic characteristic() const { return ch_; }
  bool unitary() const { return unitary_; }
  const std::map<Word, Scalar, WordOrder>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  Scalar coeff(const Word& w) const;

  FreePoly operator+(const FreePoly& o) const;
  FreePoly operator-(const FreePoly& o) const;
  FreePoly operator*(const FreePoly& o) const;
  FreePoly operator-() const;
  FreePoly scale(const Scalar& c) const;
  FreePoly pow(uint32_t m) const;

  /// fg - gf.
  FreePoly commutator(const FreePoly& o) const;

  /// [f1, f2, ..., fk] = [[...[f1,f2],...],fk].
  static FreePoly left_normed_commutator(const std::vector<FreePoly>& args);

  /// The unique algebra endomorphism extension: unassigned variables map to
  /// themselves. In nonunitary mode every image must be constant-free.
  FreePoly substitute(const std::map<uint32_t, FreePoly>& assignment) const;

  /// Homomorphic image in a truncated Grassmann algebra. Every variable of f
  /// must be assigned; all images must share characteristic/truncation.
  GrassmannElement evaluate(const std::map<uint32_t, GrassmannElement>& assignment) const;

  std::set<uint32_t> variables() const;
  uint32_t total_degree() const;  // max over monomials
  MultiDegree multidegree() const;

  /// Partition of the terms by degree vector; the components sum to f.
  std::vector<FreePoly> multihomogeneous_components() const;

  /// Recursively split on variables occurring in some but not all monomials
  /// (realized by x -> 0, so components stay in any T-space containing f).
  struct EssentialSplit {
    std::vector<FreePoly> components;
    bool essential = false;
  };
  EssentialSplit essential_split() const;

  bool operator==(const FreePoly& o) const;
  bool operator!=(const FreePoly& o) const { return !(*this == o); }

  std::string str() const;

  void add_term(const Word& w, const Scalar& c);

 private:
  void check_compatible(const FreePoly& o) const;

  std::map<Word, Scalar, WordOrder> terms_;
  Characteristic ch_;
  bool unitary_;
};

}  // namespace wedge
