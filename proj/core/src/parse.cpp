#include "polecat/parse.hpp"

#include <cctype>
#include <string>
#include <variant>

#include "polecat/error.hpp"

namespace polecat {

namespace {

enum class Kind { scalar, tl, h, uq };

struct Token {
  enum Type { number, ident, punct, end } type;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::number, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::ident, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::string_view("+-*/^;@(),").find(c) != std::string_view::npos) {
      out.push_back({Token::punct, std::string(1, c), i});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Token::end, "", s.size()});
  return out;
}

using Value = std::variant<Scalar, TLTerm, HElement, UqElement>;

class Parser {
 public:
  Parser(Kind kind, std::string_view text) : kind_(kind), tokens_(lex(text)) {}

  Value run() {
    Value v = sum();
    if (peek().type != Token::end) fail("unexpected '" + peek().text + "'");
    return v;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  const Token& next() { return tokens_[at_++]; }
  bool accept(const char* p) {
    if (peek().type == Token::punct && peek().text == p) {
      ++at_;
      return true;
    }
    return false;
  }
  void expect(const char* p) {
    if (!accept(p)) fail(std::string("expected '") + p + "'");
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, peek().pos); }
  [[noreturn]] static void fail_at(const std::string& what, std::size_t pos) {
    throw ParseError(what, pos);
  }

  // ---- value operations -------------------------------------------------

  static bool is_scalar(const Value& v) { return std::holds_alternative<Scalar>(v); }

  // Brings a scalar to the algebra of `like` (as a multiple of the unit).
  static Value promote(const Scalar& s, const Value& like, std::size_t pos) {
    if (std::holds_alternative<HElement>(like)) return HElement(HWord{}, s);
    if (std::holds_alternative<UqElement>(like)) return UqElement(UqWord{}, s);
    if (const auto* d = std::get_if<TLTerm>(&like)) {
      if (d->source() != 0 || d->target() != 0)
        fail_at("cannot add a scalar to a diagram with boundary points", pos);
      return TLTerm::scale(s, TLTerm());
    }
    return s;
  }

  static Value add(Value a, Value b, std::size_t pos) {
    if (is_scalar(a) && !is_scalar(b)) a = promote(std::get<Scalar>(a), b, pos);
    if (is_scalar(b) && !is_scalar(a)) b = promote(std::get<Scalar>(b), a, pos);
    if (a.index() != b.index()) fail_at("cannot add values of different kinds", pos);
    return std::visit(
        [&](auto& x) -> Value {
          using T = std::decay_t<decltype(x)>;
          const T& y = std::get<T>(b);
          if constexpr (std::is_same_v<T, TLTerm>) {
            try {
              return TLTerm::sum(x, y);
            } catch (const StructuralError& e) {
              fail_at(e.what(), pos);
            }
          } else {
            return x + y;
          }
        },
        a);
  }

  static Value scale(const Scalar& s, const Value& v) {
    return std::visit(
        [&](const auto& x) -> Value {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, TLTerm>) {
            return TLTerm::scale(s, x);
          } else if constexpr (std::is_same_v<T, Scalar>) {
            return s * x;
          } else {
            return s * x;
          }
        },
        v);
  }

  static Value mul(const Value& a, const Value& b, std::size_t pos) {
    if (is_scalar(a)) return scale(std::get<Scalar>(a), b);
    if (is_scalar(b)) return scale(std::get<Scalar>(b), a);
    if (a.index() != b.index()) fail_at("cannot multiply values of different kinds", pos);
    if (const auto* x = std::get_if<HElement>(&a)) return h_mul(*x, std::get<HElement>(b));
    if (const auto* x = std::get_if<UqElement>(&a)) return uq_mul(*x, std::get<UqElement>(b));
    fail_at("diagrams are composed with ';' and '@', not multiplied", pos);
  }

  static Value divide(const Value& a, const Value& b, std::size_t pos) {
    if (!is_scalar(b)) fail_at("can only divide by a scalar", pos);
    const Scalar& s = std::get<Scalar>(b);
    if (s.is_zero()) fail_at("division by zero", pos);
    return scale(s.inverse(), a);
  }

  template <class Word, class Gen>
  static LinComb<Word> invert_word(const LinComb<Word>& x, Gen g1, Gen g2, std::size_t pos) {
    if (x.size() != 1) fail_at("only a single monomial of group-like letters can be inverted", pos);
    const auto& [w, c] = *x.begin();
    Word inv(w.rbegin(), w.rend());
    for (auto& g : inv) {
      if (g == g1) {
        g = g2;
      } else if (g == g2) {
        g = g1;
      } else {
        fail_at("only a single monomial of group-like letters can be inverted", pos);
      }
    }
    return LinComb<Word>(inv, c.inverse());
  }

  static Value power(const Value& a, long n, std::size_t pos) {
    if (const auto* s = std::get_if<Scalar>(&a)) {
      if (n < 0 && s->is_zero()) fail_at("zero to a negative power", pos);
      return s->pow(static_cast<int>(n));
    }
    if (std::holds_alternative<TLTerm>(a)) fail_at("diagrams cannot be raised to a power", pos);
    Value base = a;
    if (n < 0) {
      if (const auto* x = std::get_if<HElement>(&a)) base = invert_word(*x, HGen::k, HGen::kp, pos);
      if (const auto* x = std::get_if<UqElement>(&a)) base = invert_word(*x, UqGen::K, UqGen::Ki, pos);
      n = -n;
    }
    Value out = std::holds_alternative<HElement>(base) ? Value(HElement(HWord{}))
                                                       : Value(UqElement(UqWord{}));
    for (long j = 0; j < n; ++j) out = mul(out, base, pos);
    return out;
  }

  static Value negate(const Value& a) { return scale(Scalar(-1), a); }

  static const TLTerm& diagram(const Value& v, std::size_t pos) {
    if (const auto* d = std::get_if<TLTerm>(&v)) return *d;
    fail_at("';' and '@' take diagrams", pos);
  }

  // ---- grammar --------------------------------------------------------------

  Value sum() {
    Value v = stack();
    for (;;) {
      const std::size_t pos = peek().pos;
      if (accept("+")) {
        v = add(std::move(v), stack(), pos);
      } else if (accept("-")) {
        v = add(std::move(v), negate(stack()), pos);
      } else {
        return v;
      }
    }
  }

  Value stack() {
    Value v = tensor();
    for (;;) {
      const std::size_t pos = peek().pos;
      if (!accept(";")) return v;
      const Value top = tensor();
      try {
        v = TLTerm::stack(diagram(v, pos), diagram(top, pos));
      } catch (const StructuralError& e) {
        fail_at(e.what(), pos);
      }
    }
  }

  Value tensor() {
    Value v = product();
    for (;;) {
      const std::size_t pos = peek().pos;
      if (!accept("@")) return v;
      const Value right = product();
      v = TLTerm::tensor(diagram(v, pos), diagram(right, pos));
    }
  }

  bool starts_primary() const {
    const Token& t = peek();
    return t.type == Token::number || t.type == Token::ident ||
           (t.type == Token::punct && t.text == "(");
  }

  Value product() {
    Value v = unary();
    for (;;) {
      const std::size_t pos = peek().pos;
      if (accept("*")) {
        v = mul(v, unary(), pos);
      } else if (accept("/")) {
        v = divide(v, unary(), pos);
      } else if (starts_primary()) {
        v = mul(v, unary(), pos);
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept("-")) return negate(unary());
    return power_expr();
  }

  Value power_expr() {
    Value base = primary();
    const std::size_t pos = peek().pos;
    if (!accept("^")) return base;
    const bool negative = accept("-");
    if (peek().type != Token::number) fail("expected an integer exponent");
    const std::string digits = next().text;
    if (digits.size() > 6) fail_at("exponent too large", pos);
    const long n = std::stol(digits);
    return power(base, negative ? -n : n, pos);
  }

  int integer() {
    if (peek().type != Token::number) fail("expected an integer");
    const std::string digits = next().text;
    if (digits.size() > 6) fail("integer too large");
    return std::stoi(digits);
  }

  std::string word() {
    if (peek().type != Token::ident) fail("expected a name");
    return next().text;
  }

  Value primary() {
    const Token& t = peek();
    if (t.type == Token::number) {
      ++at_;
      mpz_class z;
      z.set_str(t.text, 10);
      return Scalar(GaussRat(mpq_class(z)));
    }
    if (accept("(")) {
      Value v = sum();
      expect(")");
      return v;
    }
    if (t.type != Token::ident) fail(t.type == Token::end ? "unexpected end of input"
                                                         : "unexpected '" + t.text + "'");
    ++at_;
    const std::string& name = t.text;
    if (name == "i") return Scalar::i();
    if (name == "t") return Scalar::t();
    if (name == "q") return Scalar::q();
    if (name == "s") return Scalar::sqrt_q();
    switch (kind_) {
      case Kind::tl:
        if (name == "cup") return TLTerm::cup();
        if (name == "cap") return TLTerm::cap();
        if (name == "xp") return TLTerm::cross_pos();
        if (name == "xn") return TLTerm::cross_neg();
        if (name == "id") {
          expect("(");
          const int n = integer();
          expect(")");
          return TLTerm::id(n);
        }
        if (name == "stub") return stub();
        break;
      case Kind::h:
        if (auto g = gen_from_name(name)) return HElement(HWord{*g});
        break;
      case Kind::uq:
        if (auto g = uq_from_name(name)) return UqElement(UqWord{*g});
        break;
      case Kind::scalar:
        break;
    }
    fail_at("unknown symbol '" + name + "'", t.pos);
  }

  Value stub() {
    expect("(");
    std::size_t pos = peek().pos;
    const std::string side = word();
    if (side != "e" && side != "w") fail_at("stub side must be e or w", pos);
    expect(",");
    pos = peek().pos;
    const std::string orient = word();
    if (orient != "in" && orient != "out") fail_at("stub orientation must be in or out", pos);
    expect(",");
    pos = peek().pos;
    const std::string which = word();
    if (which != "start" && which != "end") fail_at("stub end must be start or end", pos);
    expect(")");
    return TLTerm::stub(side == "e" ? Side::east : Side::west,
                        orient == "in" ? Orient::in : Orient::out,
                        which == "start" ? StubEnd::start : StubEnd::end);
  }

  Kind kind_;
  std::vector<Token> tokens_;
  std::size_t at_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) {
  return std::get<Scalar>(Parser(Kind::scalar, text).run());
}

TLTerm parse_tl(std::string_view text) {
  Value v = Parser(Kind::tl, text).run();
  if (const auto* s = std::get_if<Scalar>(&v)) return TLTerm::scale(*s, TLTerm());
  return std::get<TLTerm>(v);
}

HElement parse_h(std::string_view text) {
  Value v = Parser(Kind::h, text).run();
  if (const auto* s = std::get_if<Scalar>(&v)) return HElement(HWord{}, *s);
  return std::get<HElement>(v);
}

UqElement parse_uq(std::string_view text) {
  Value v = Parser(Kind::uq, text).run();
  if (const auto* s = std::get_if<Scalar>(&v)) return UqElement(UqWord{}, *s);
  return std::get<UqElement>(v);
}

}  // namespace polecat
