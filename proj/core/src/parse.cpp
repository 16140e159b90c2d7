#include <cctype>

#include "gefstab/error.hpp"
#include "gefstab/polynomial.hpp"

namespace gefstab {

namespace {

class Parser {
 public:
  Parser(std::string_view text, VarList vars) : text_(text), vars_(std::move(vars)) {}

  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = get() == '-';
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      get();
      Polynomial rhs = term();
      if (c == '+') {
        acc += rhs;
      } else {
        acc -= rhs;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      get();
      acc *= factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected nonnegative integer exponent");
      Integer e = integer();
      if (!e.fits_slong_p()) fail("exponent too large");
      b = pow(b, e.get_si());
    }
    return b;
  }

  Polynomial base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      Polynomial inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      get();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(integer());
      // "int / posint" is a rational literal; any other '/' is left for the caller.
      std::size_t save = pos_;
      skip_ws();
      if (peek() == '/') {
        get();
        skip_ws();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
          Integer den = integer();
          if (den == 0) fail("zero denominator");
          value /= Rational(den);
        } else {
          pos_ = save;
        }
      } else {
        pos_ = save;
      }
      return Polynomial(vars_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') get();
      std::string name(text_.substr(start, pos_ - start));
      for (const auto& v : *vars_) {
        if (v == name) return Polynomial::variable(vars_, name);
      }
      throw UnknownVariable("unknown variable '" + name + "' at position " + std::to_string(start));
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return text_[pos_++]; }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  std::size_t position() const { return pos_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

 private:
  Integer integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) get();
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  VarList vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const VarList& vars) {
  Parser parser(text, vars);
  Polynomial p = parser.expr();
  if (!parser.at_end()) parser.fail("unexpected trailing input");
  return p;
}

Polynomial parse_poly(std::string_view text, const std::vector<std::string>& vars) {
  return parse_poly(text, make_vars(vars));
}

ParsedFraction parse_fraction(std::string_view text, const VarList& vars) {
  Parser parser(text, vars);
  Polynomial num = parser.expr();
  Polynomial den(vars, 1);
  parser.skip_ws();
  if (parser.peek() == '/') {
    parser.get();
    den = parser.factor();
    if (den.is_zero()) parser.fail("zero denominator");
  }
  if (!parser.at_end()) parser.fail("unexpected trailing input");
  return {std::move(num), std::move(den)};
}

}  // namespace gefstab
