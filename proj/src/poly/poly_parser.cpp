#include "effint/poly_parser.hpp"

#include <cctype>
#include <string>

#include "effint/error.hpp"

namespace effint {
namespace {

constexpr unsigned long kMaxExponent = 10000;

class Parser {
 public:
  Parser(std::string_view text, std::size_t arity) : text_(text), arity_(arity) {}

  Poly parse() {
    skip_ws();
    if (at_end()) throw SyntaxError(pos_, "empty expression");
    Poly p = expr();
    skip_ws();
    if (!at_end()) unexpected();
    return p;
  }

 private:
  Poly expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Poly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Poly t = term();
      if (c == '+') {
        acc += t;
      } else {
        acc -= t;
      }
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      acc *= factor();
    }
    return acc;
  }

  Poly factor() {
    Poly b = base();
    skip_ws();
    if (peek() != '^') return b;
    ++pos_;
    skip_ws();
    if (peek() == '-') throw NegativeExponent(pos_);
    const std::size_t at = pos_;
    const std::string digits = read_digits();
    if (digits.empty()) throw SyntaxError(at, "expected exponent");
    if (digits.size() > 5 || std::stoul(digits) > kMaxExponent)
      throw SyntaxError(at, "exponent too large");
    return pow(b, static_cast<unsigned>(std::stoul(digits)));
  }

  Poly base() {
    skip_ws();
    const std::size_t at = pos_;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      skip_ws();
      if (peek() != ')') throw SyntaxError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(read_digits());
      Integer den(1);
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t den_at = pos_;
        const std::string d = read_digits();
        if (d.empty()) throw SyntaxError(den_at, "expected denominator");
        den = Integer(d);
        if (den == 0) throw SyntaxError(den_at, "zero denominator");
      }
      return Poly::constant(arity_, make_rational(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      const std::size_t index = c == 'x' ? 0 : c == 'y' ? 1 : c == 'z' ? 2 : 3;
      if (index >= arity_) throw UnknownVariable(at, c);
      return Poly::variable(arity_, index);
    }
    if (at_end()) throw SyntaxError(at, "unexpected end of input");
    throw SyntaxError(at, std::string("expected number, variable or '(' but found '") + c + "'");
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void unexpected() const {
    const char c = text_[pos_];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '(')
      throw SyntaxError(pos_, std::string("unexpected '") + c +
                                  "' (implicit multiplication is not allowed)");
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  std::size_t arity_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, std::size_t arity) {
  if (arity != 2 && arity != 3) throw ArityMismatch("polynomial text supports arity 2 or 3");
  return Parser(text, arity).parse();
}

}  // namespace effint
