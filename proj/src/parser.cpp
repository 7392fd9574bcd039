#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "circq/errors.hpp"
#include "circq/fields.hpp"

namespace circq {
namespace {

constexpr unsigned kMaxExponent = 64;

// Recursive descent over
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := number ('/' number)? | identifier | '(' expr ')'
class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    Polynomial result = expr();
    skip_space();
    if (!at_end()) unexpected();
    return result;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void unexpected() const {
    if (at_end()) throw ParseError("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) ||
        c == '(')
      throw ParseError("implicit multiplication is not allowed; expected an operator", pos_);
    if (c == '/') throw ParseError("division is only allowed between numeric literals", pos_);
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      Polynomial rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      skip_space();
      if (peek() != '*') return acc;
      ++pos_;
      acc = acc * unary();
    }
  }

  Polynomial unary() {
    skip_space();
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    if (peek() == '-') throw ParseError("negative exponent", start);
    if (peek() == '+') ++pos_;
    const std::size_t digits = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) throw ParseError("exponent must be a non-negative integer", start);
    if (peek() == '.' || peek() == 'e' || peek() == 'E')
      throw ParseError("exponent must be a non-negative integer", start);
    unsigned value = 0;
    const auto res = std::from_chars(text_.data() + digits, text_.data() + pos_, value);
    if (res.ec != std::errc{} || value > kMaxExponent)
      throw ParseError("exponent exceeds " + std::to_string(kMaxExponent), start);
    skip_space();
    if (peek() == '^') throw ParseError("chained exponents need parentheses", pos_);
    try {
      return base.pow(value);
    } catch (const std::overflow_error& e) {
      throw ParseError(e.what(), start);
    }
  }

  double number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.') {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '.'))
      throw ParseError("malformed number", start);
    if (peek() == 'e' || peek() == 'E') {
      const std::size_t mark = pos_;
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      const std::size_t exp_digits = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == exp_digits) throw ParseError("malformed number exponent", mark);
    }
    double value = 0.0;
    const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (res.ec != std::errc{} || res.ptr != text_.data() + pos_ || !std::isfinite(value))
      throw ParseError("number out of range", start);
    return value;
  }

  Polynomial primary() {
    skip_space();
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_space();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      double value = number();
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        const std::size_t denom_pos = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())) && peek() != '.')
          throw ParseError("division is only allowed between numeric literals", denom_pos);
        const double denom = number();
        if (denom == 0.0) throw ParseError("division by zero", denom_pos);
        value /= denom;
      }
      return Polynomial::constant(value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      const std::string_view ident = text_.substr(start, pos_ - start);
      if (ident.size() == 2 && ident[0] == 'x' && ident[1] >= '1' && ident[1] <= '4')
        return Polynomial::variable(static_cast<std::size_t>(ident[1] - '1'));
      throw ParseError("unknown identifier '" + std::string(ident) + "'", start);
    }
    unexpected();
  }
};

} // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

ScalarField parse_field(std::string_view text) { return ScalarField(parse_polynomial(text)); }

} // namespace circq
