#include "wedge/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "wedge/errors.hpp"

namespace wedge {

namespace {

struct Token {
  enum Kind { Int, Var, Gen, Plus, Minus, Star, Caret, Slash, LBracket, RBracket, LParen, RParen, Comma, End };
  Kind kind;
  unsigned long long value = 0;  // Int payload or variable/generator index
  size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    size_t start = i_;
    if (i_ >= s_.size()) return {Token::End, 0, start};
    char c = s_[i_];
    switch (c) {
      case '+': ++i_; return {Token::Plus, 0, start};
      case '-': ++i_; return {Token::Minus, 0, start};
      case '*': ++i_; return {Token::Star, 0, start};
      case '^': ++i_; return {Token::Caret, 0, start};
      case '/': ++i_; return {Token::Slash, 0, start};
      case '[': ++i_; return {Token::LBracket, 0, start};
      case ']': ++i_; return {Token::RBracket, 0, start};
      case '(': ++i_; return {Token::LParen, 0, start};
      case ')': ++i_; return {Token::RParen, 0, start};
      case ',': ++i_; return {Token::Comma, 0, start};
      default: break;
    }
    if (c == 'x' || c == 'e') {
      ++i_;
      if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        throw ParseError(std::string("expected index after '") + c + "'", i_);
      }
      return {c == 'x' ? Token::Var : Token::Gen, read_int(), start};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return {Token::Int, read_int(), start};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

 private:
  unsigned long long read_int() {
    unsigned long long v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + static_cast<unsigned long long>(s_[i_] - '0');
      if (v > (1ull << 62)) throw ParseError("integer literal too large", i_);
      ++i_;
    }
    return v;
  }

  const std::string& s_;
  size_t i_ = 0;
};

// Shared recursive-descent parser over any algebra with +, *, scale, pow and
// commutator; the atom callback interprets variables or generators. Values
// carry a scalar multiplier separately so integer literals act as
// coefficients; a value without an algebra part is a constant and needs the
// unit to materialize.
template <typename Alg>
class Parser {
 public:
  using Atom = Alg (*)(uint32_t index, const void* ctx);

  Parser(const std::string& text, Characteristic ch, bool allow_unit, Atom var_atom,
         Atom gen_atom, const void* ctx)
      : lex_(text), ch_(ch), allow_unit_(allow_unit), var_atom_(var_atom), gen_atom_(gen_atom),
        ctx_(ctx) {
    advance();
  }

  Alg parse() {
    Value v = expr();
    Alg r = materialize(v, tok_.pos);
    expect(Token::End, "end of input");
    return r;
  }

 private:
  struct Value {
    Scalar s;
    std::optional<Alg> alg;
  };

  Value scalar_value(Scalar s) { return Value{std::move(s), std::nullopt}; }

  Alg materialize(const Value& v, size_t pos) {
    if (v.alg) return v.alg->scale(v.s);
    if (!allow_unit_) {
      if (v.s.is_zero()) {
        // the zero constant is still a legal element of the nonunitary algebra
        return zero_();
      }
      throw UnitInNonunitary("constant term in a nonunitary context (position " +
                             std::to_string(pos) + ")");
    }
    return one_().scale(v.s);
  }

  // provided by the instantiation context
  Alg one_();
  Alg zero_();

  void advance() { tok_ = lex_.next(); }

  void expect(Token::Kind k, const char* what) {
    if (tok_.kind != k) throw ParseError(std::string("expected ") + what, tok_.pos);
    if (k != Token::End) advance();
  }

  Value add(Value a, Value b, size_t pos) {
    if (!a.alg && !b.alg) return scalar_value(a.s + b.s);
    Alg lhs = materialize(a, pos);
    Alg rhs = materialize(b, pos);
    return Value{Scalar::one(ch_), lhs + rhs};
  }

  Value mul(Value a, Value b) {
    Value out;
    out.s = a.s * b.s;
    if (a.alg && b.alg) {
      out.alg = *a.alg * *b.alg;
    } else if (a.alg) {
      out.alg = a.alg;
    } else if (b.alg) {
      out.alg = b.alg;
    }
    return out;
  }

  Value expr() {
    bool neg = false;
    if (tok_.kind == Token::Minus) {
      neg = true;
      advance();
    } else if (tok_.kind == Token::Plus) {
      advance();
    }
    Value acc = term();
    if (neg) acc.s = -acc.s;
    while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
      bool minus = tok_.kind == Token::Minus;
      size_t pos = tok_.pos;
      advance();
      Value t = term();
      if (minus) t.s = -t.s;
      acc = add(std::move(acc), std::move(t), pos);
    }
    return acc;
  }

  Value term() {
    Value acc = factor();
    while (tok_.kind == Token::Star) {
      advance();
      acc = mul(std::move(acc), factor());
    }
    return acc;
  }

  Value factor() {
    Value base = primary();
    if (tok_.kind == Token::Caret) {
      advance();
      if (tok_.kind != Token::Int) throw ParseError("expected exponent", tok_.pos);
      auto e = static_cast<uint32_t>(tok_.value);
      size_t pos = tok_.pos;
      advance();
      Value out;
      out.s = Scalar::one(ch_);
      for (uint32_t k = 0; k < e; ++k) out.s = out.s * base.s;
      if (base.alg) {
        if (e == 0 && !allow_unit_) {
          throw UnitInNonunitary("x^0 needs the unit (position " + std::to_string(pos) + ")");
        }
        out.alg = e == 0 ? std::optional<Alg>(one_()) : base.alg->pow(e);
      }
      return out;
    }
    return base;
  }

  Value primary() {
    switch (tok_.kind) {
      case Token::Int: {
        unsigned long long num = tok_.value;
        size_t pos = tok_.pos;
        advance();
        Scalar c = Scalar::of_int(static_cast<long long>(num), ch_);
        if (tok_.kind == Token::Slash) {
          advance();
          if (tok_.kind != Token::Int) throw ParseError("expected denominator", tok_.pos);
          unsigned long long den = tok_.value;
          advance();
          if (den == 0) throw ParseError("zero denominator", pos);
          c = c * Scalar::of_int(static_cast<long long>(den), ch_).inverse();
        }
        return scalar_value(std::move(c));
      }
      case Token::Var: {
        if (!var_atom_) throw ParseError("variables are not valid here", tok_.pos);
        auto i = static_cast<uint32_t>(tok_.value);
        if (i == 0) throw ParseError("variable indices start at 1", tok_.pos);
        advance();
        return Value{Scalar::one(ch_), var_atom_(i, ctx_)};
      }
      case Token::Gen: {
        if (!gen_atom_) throw ParseError("generators are not valid here", tok_.pos);
        auto i = static_cast<uint32_t>(tok_.value);
        if (i == 0) throw ParseError("generator indices start at 1", tok_.pos);
        advance();
        return Value{Scalar::one(ch_), gen_atom_(i, ctx_)};
      }
      case Token::LBracket: {
        size_t pos = tok_.pos;
        advance();
        std::vector<Value> args;
        args.push_back(expr());
        while (tok_.kind == Token::Comma) {
          advance();
          args.push_back(expr());
        }
        expect(Token::RBracket, "']'");
        if (args.size() < 2) {
          throw ParseError("commutator needs at least two arguments", pos);
        }
        Value acc = std::move(args[0]);
        for (size_t k = 1; k < args.size(); ++k) {
          // scalars are central: a missing algebra part annihilates
          if (!acc.alg || !args[k].alg) {
            acc = Value{Scalar::one(ch_), zero_()};
            continue;
          }
          Scalar s = acc.s * args[k].s;
          acc = Value{std::move(s), acc.alg->commutator(*args[k].alg)};
        }
        return acc;
      }
      case Token::LParen: {
        advance();
        Value r = expr();
        expect(Token::RParen, "')'");
        return r;
      }
      default:
        throw ParseError("expected a term", tok_.pos);
    }
  }

  Lexer lex_;
  Token tok_;
  Characteristic ch_;
  bool allow_unit_;
  Atom var_atom_;
  Atom gen_atom_;
  const void* ctx_;
};

struct PolyCtx {
  Characteristic ch;
  bool unitary;
};

struct ElemCtx {
  Characteristic ch;
  bool unitary;
  uint32_t truncation;
};

template <>
FreePoly Parser<FreePoly>::one_() {
  const auto* pc = static_cast<const PolyCtx*>(ctx_);
  return FreePoly::constant(Scalar::one(pc->ch));
}

template <>
FreePoly Parser<FreePoly>::zero_() {
  const auto* pc = static_cast<const PolyCtx*>(ctx_);
  return FreePoly::zero(pc->ch, pc->unitary);
}

template <>
GrassmannElement Parser<GrassmannElement>::one_() {
  const auto* ec = static_cast<const ElemCtx*>(ctx_);
  return GrassmannElement::unit(ec->ch, ec->truncation);
}

template <>
GrassmannElement Parser<GrassmannElement>::zero_() {
  const auto* ec = static_cast<const ElemCtx*>(ctx_);
  return GrassmannElement::zero(ec->ch, ec->unitary, ec->truncation);
}

}  // namespace

FreePoly parse_poly(const std::string& text, Characteristic ch, bool unitary) {
  PolyCtx ctx{ch, unitary};
  Parser<FreePoly> p(
      text, ch, unitary,
      [](uint32_t i, const void* c) {
        const auto* pc = static_cast<const PolyCtx*>(c);
        return FreePoly::variable(i, pc->ch, pc->unitary);
      },
      nullptr, &ctx);
  return p.parse();
}

GrassmannElement parse_element(const std::string& text, Characteristic ch, bool unitary,
                               uint32_t truncation) {
  ElemCtx ctx{ch, unitary, truncation};
  Parser<GrassmannElement> p(
      text, ch, unitary, nullptr,
      [](uint32_t i, const void* c) {
        const auto* ec = static_cast<const ElemCtx*>(c);
        return GrassmannElement::term(Blade::single(i), Scalar::one(ec->ch), ec->unitary,
                                      ec->truncation);
      },
      &ctx);
  return p.parse();
}

}  // namespace wedge
