#include "arrkit/parser.hpp"

#include <cctype>

namespace arrkit {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position),
      detail_(message) {}

namespace {

constexpr unsigned long kMaxExponent = 4096;

class Parser {
 public:
  Parser(const std::string& text, int order) : s_(text), order_(order) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    const bool negate = accept('-');
    MultiPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  MultiPoly factor() {
    MultiPoly b = base();
    if (accept('^')) {
      skip();
      const std::size_t at = pos_;
      const std::string digits = uint_digits();
      if (digits.size() > 6 || std::stoul(digits) > kMaxExponent) {
        pos_ = at;
        fail("exponent too large");
      }
      b = b.pow(static_cast<int>(std::stoul(digits)));
    }
    return b;
  }

  std::string uint_digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an unsigned integer");
    return s_.substr(start, pos_ - start);
  }

  MultiPoly base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    switch (c) {
      case 'x':
      case 'y':
      case 'z':
        ++pos_;
        return MultiPoly::variable(static_cast<Var>(c - 'x'), order_);
      case 'w':
        ++pos_;
        return MultiPoly::constant(CycloNumber::zeta(order_));
      case '(': {
        ++pos_;
        MultiPoly inner = expr();
        if (!accept(')')) fail("expected ')'");
        return inner;
      }
      default:
        break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(uint_digits());
      Integer den = 1;
      if (accept('/')) {
        const std::size_t at = pos_;
        den = Integer(uint_digits());
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      Rational q(num, den);
      q.canonicalize();
      return MultiPoly::constant(CycloNumber(q, order_));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) ++end;
      fail("unknown identifier '" + s_.substr(pos_, end - pos_) + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  int order_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const std::string& text, int order) { return Parser(text, order).parse(); }

CycloNumber parse_cyclo(const std::string& text, int order) {
  const MultiPoly p = parse_poly(text, order);
  if (!p.is_constant()) throw ParseError(0, "expected a constant, got '" + text + "'");
  return p.is_zero() ? CycloNumber::zero(order) : p.leading_coefficient();
}

}  // namespace arrkit
