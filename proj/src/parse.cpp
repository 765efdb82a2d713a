#include "qdet/parse.hpp"

#include <cctype>

namespace qdet {

namespace {

class ExprParser {
 public:
  explicit ExprParser(const std::string& text) : s_(text) {}

  AlphaPoly<RatFuncQ> parse() {
    AlphaPoly<RatFuncQ> e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  using P = AlphaPoly<RatFuncQ>;

  [[noreturn]] void fail(const std::string& why) {
    throw Error("parse error at offset " + std::to_string(pos_) + ": " + why + " in \"" + s_ +
                "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  P expr() {
    P acc = eat('-') ? -term() : term();
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  P term() {
    P acc = factor();
    for (;;) {
      if (eat('*')) {
        acc *= factor();
      } else if (eat('/')) {
        P d = factor();
        acc = divide(acc, d);
      } else {
        return acc;
      }
    }
  }

  static P divide(const P& num, const P& den) {
    if (den.is_zero()) throw DivisionByZero();
    if (den.is_constant()) return num.scaled(RatFuncQ(1) / den.constant_term());
    return num.div_exact(den);
  }

  P factor() {
    P b = base();
    skip_ws();
    if (eat('^')) {
      bool neg = eat('-');
      long e = integer();
      if (!neg) return b.pow(e);
      if (!b.is_constant()) fail("negative power of an alpha-dependent base");
      return P(b.constant_term().pow(-e));
    }
    return b;
  }

  long integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  P base() {
    skip_ws();
    if (eat('(')) {
      P e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (eat('-')) return -factor();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return P(RatFuncQ(Rational(integer())));
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (name == "q") return P(RatFuncQ::q_power(1));
      if (name == "v") return P(RatFuncQ::v_power(1));
      if (name == "a" || name == "al" || name == "alpha") return P::alpha_power(1);
      fail("unknown name '" + name + "'");
    }
    fail("unexpected character");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

AlphaPoly<RatFuncQ> parse_alpha_expr(const std::string& text) { return ExprParser(text).parse(); }

RatFuncQ parse_q_expr(const std::string& text) {
  AlphaPoly<RatFuncQ> p = parse_alpha_expr(text);
  if (!p.is_constant()) throw Error("expected an alpha-free expression: " + text);
  return p.constant_term();
}

AlgebraicPoint<RatFuncQ> parse_point(const std::string& text) {
  std::string s = text;
  size_t eq = s.find('=');
  if (eq == std::string::npos) throw Error("point spec must look like alpha=<expr>: " + text);
  std::string head = s.substr(0, eq);
  head.erase(remove_if(head.begin(), head.end(), ::isspace), head.end());
  if (head != "alpha" && head != "a" && head != "al")
    throw Error("point spec must assign alpha: " + text);
  std::string rhs = s.substr(eq + 1);
  size_t first = rhs.find_first_not_of(" \t");
  if (first != std::string::npos && rhs.compare(first, 5, "root:") == 0) {
    AlphaPoly<RatFuncQ> p = parse_alpha_expr(rhs.substr(first + 5));
    if (p.degree() == 1) {
      // A linear "root" is just the explicit value.
      RatFuncQ value = -p[0] / p[1];
      auto pt = AlgebraicPoint<RatFuncQ>::at(value, text);
      return pt;
    }
    return AlgebraicPoint<RatFuncQ>::root_of(p, text);
  }
  return AlgebraicPoint<RatFuncQ>::at(parse_q_expr(rhs), text);
}

}  // namespace qdet
