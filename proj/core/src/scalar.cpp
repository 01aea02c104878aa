#include "wedge/scalar.hpp"

#include <sstream>

namespace wedge {

namespace {

bool is_odd_prime(uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (uint32_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

uint64_t mod_pow(uint64_t b, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

Characteristic::Characteristic(uint32_t p) : p_(p) {
  if (p != 0 && !is_odd_prime(p)) {
    throw CharacteristicMismatch("characteristic must be 0 or an odd prime, got " +
                                 std::to_string(p));
  }
}

Scalar Scalar::zero(Characteristic c) { return of_int(0, c); }

Scalar Scalar::one(Characteristic c) { return of_int(1, c); }

Scalar Scalar::of_int(long long v, Characteristic c) {
  if (c.is_zero()) return rational(mpq_class(static_cast<long>(v)));
  long long p = c.value();
  long long r = v % p;
  if (r < 0) r += p;
  return residue(static_cast<unsigned long long>(r), c);
}

Scalar Scalar::rational(long long num, long long den) {
  mpq_class q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return rational(q);
}

Scalar Scalar::rational(mpq_class q) {
  q.canonicalize();
  Scalar s;
  s.p_ = 0;
  s.v_ = std::move(q);
  return s;
}

Scalar Scalar::residue(unsigned long long r, Characteristic c) {
  if (c.is_zero()) throw CharacteristicMismatch("residue scalar needs a prime characteristic");
  Scalar s;
  s.p_ = c.value();
  s.v_ = static_cast<uint64_t>(r % c.value());
  return s;
}

Scalar Scalar::indeterminate(Indet id, Characteristic c) {
  SymPoly p;
  p.terms.emplace(Mono{{id, 1}}, one(c));
  return make_poly(std::move(p), c);
}

Scalar Scalar::make_poly(SymPoly p, Characteristic c) {
  // Canonical form: prune zeros, demote constants to base scalars.
  for (auto it = p.terms.begin(); it != p.terms.end();) {
    it = it->second.is_zero() ? p.terms.erase(it) : std::next(it);
  }
  if (p.terms.empty()) return zero(c);
  if (p.terms.size() == 1 && p.terms.begin()->first.empty()) {
    return p.terms.begin()->second;
  }
  Scalar s;
  s.p_ = c.value();
  s.v_ = std::make_shared<const SymPoly>(std::move(p));
  return s;
}

SymPoly Scalar::as_poly() const {
  if (is_symbolic()) return poly();
  SymPoly p;
  if (!is_zero()) p.terms.emplace(Mono{}, *this);
  return p;
}

bool Scalar::is_zero() const {
  switch (v_.index()) {
    case 0: return sgn(rat()) == 0;
    case 1: return res() == 0;
    default: return false;  // symbolic scalars are never the canonical zero
  }
}

bool Scalar::is_one() const {
  switch (v_.index()) {
    case 0: return rat() == 1;
    case 1: return res() == 1;
    default: return false;
  }
}

void Scalar::check_same(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) {
    throw CharacteristicMismatch("cannot mix characteristic " + std::to_string(a.p_) +
                                 " with " + std::to_string(b.p_));
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(*this, o);
  if (is_symbolic() || o.is_symbolic()) {
    SymPoly a = as_poly();
    for (const auto& [m, c] : o.as_poly().terms) {
      auto it = a.terms.find(m);
      if (it == a.terms.end()) {
        a.terms.emplace(m, c);
      } else {
        it->second += c;
        if (it->second.is_zero()) a.terms.erase(it);
      }
    }
    return make_poly(std::move(a), characteristic());
  }
  if (p_ == 0) return rational(rat() + o.rat());
  return residue(res() + o.res(), characteristic());
}

Scalar Scalar::operator-() const {
  switch (v_.index()) {
    case 0: return rational(mpq_class(-rat()));
    case 1: return res() == 0 ? *this : residue(p_ - res(), characteristic());
    default: {
      SymPoly p;
      for (const auto& [m, c] : poly().terms) p.terms.emplace(m, -c);
      return make_poly(std::move(p), characteristic());
    }
  }
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(*this, o);
  if (is_symbolic() || o.is_symbolic()) {
    if (is_zero() || o.is_zero()) return zero(characteristic());
    SymPoly prod;
    for (const auto& [ma, ca] : as_poly().terms) {
      for (const auto& [mb, cb] : o.as_poly().terms) {
        // merge exponent vectors
        Mono m;
        m.reserve(ma.size() + mb.size());
        size_t i = 0, j = 0;
        while (i < ma.size() && j < mb.size()) {
          if (ma[i].first < mb[j].first) {
            m.push_back(ma[i++]);
          } else if (mb[j].first < ma[i].first) {
            m.push_back(mb[j++]);
          } else {
            m.emplace_back(ma[i].first, ma[i].second + mb[j].second);
            ++i, ++j;
          }
        }
        for (; i < ma.size(); ++i) m.push_back(ma[i]);
        for (; j < mb.size(); ++j) m.push_back(mb[j]);
        Scalar c = ca * cb;
        auto it = prod.terms.find(m);
        if (it == prod.terms.end()) {
          prod.terms.emplace(std::move(m), std::move(c));
        } else {
          it->second += c;
          if (it->second.is_zero()) prod.terms.erase(it);
        }
      }
    }
    return make_poly(std::move(prod), characteristic());
  }
  if (p_ == 0) return rational(rat() * o.rat());
  return residue(res() * o.res(), characteristic());
}

Scalar Scalar::inverse() const {
  if (is_symbolic()) {
    throw NotInvertible("symbolic scalar has no inverse: " + str());
  }
  if (is_zero()) throw DivisionByZero("scalar inverse of zero");
  if (p_ == 0) return rational(mpq_class(1) / rat());
  return residue(mod_pow(res(), p_ - 2, p_), characteristic());
}

Scalar Scalar::substitute(const std::map<Indet, Scalar>& values) const {
  if (!is_symbolic()) return *this;
  Characteristic c = characteristic();
  Scalar acc = zero(c);
  for (const auto& [m, coeff] : poly().terms) {
    Scalar term = coeff;
    for (const auto& [id, exp] : m) {
      auto it = values.find(id);
      Scalar base = (it != values.end()) ? it->second : indeterminate(id, c);
      for (uint32_t k = 0; k < exp; ++k) term *= base;
    }
    acc += term;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_ || v_.index() != o.v_.index()) return false;
  switch (v_.index()) {
    case 0: return rat() == o.rat();
    case 1: return res() == o.res();
    default: {
      const SymPoly &a = poly(), &b = o.poly();
      return a.terms == b.terms;
    }
  }
}

std::string indet_str(const Indet& id) {
  std::ostringstream os;
  if (id.blade_mask == 0) {
    os << "a" << id.var;
    return os.str();
  }
  os << "c" << id.var << "{";
  bool first = true;
  for (uint32_t i = 0; i < 64; ++i) {
    if (id.blade_mask >> i & 1) {
      if (!first) os << ",";
      os << (i + 1);
      first = false;
    }
  }
  os << "}";
  return os.str();
}

std::string Scalar::str() const {
  switch (v_.index()) {
    case 0: {
      std::ostringstream os;
      os << rat();
      return os.str();
    }
    case 1: return std::to_string(res());
    default: {
      std::ostringstream os;
      bool first = true;
      for (const auto& [m, c] : poly().terms) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (const auto& [id, exp] : m) {
          os << "*" << indet_str(id);
          if (exp > 1) os << "^" << exp;
        }
      }
      return os.str();
    }
  }
}

Scalar factorial_in_field(uint32_t n, Characteristic c) {
  Scalar r = Scalar::one(c);
  for (uint32_t k = 2; k <= n; ++k) r *= Scalar::of_int(k, c);
  return r;
}

Scalar binomial_in_field(uint32_t n, uint32_t k, Characteristic c) {
  if (k > n) return Scalar::zero(c);
  // compute in ZZ first, then reduce
  mpz_class b = 1;
  for (uint32_t i = 0; i < k; ++i) {
    b *= n - i;
    b /= i + 1;
  }
  if (c.is_zero()) return Scalar::rational(mpq_class(b));
  mpz_class r = b % c.value();
  return Scalar::residue(r.get_ui(), c);
}

}  // namespace wedge
