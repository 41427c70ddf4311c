#include <algorithm>
#include <cctype>

#include "fedosov/errors.hpp"
#include "fedosov/rational_function.hpp"

namespace fedosov {
namespace {

// Recursive descent over:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' positive-integer)?
//   primary := integer | identifier | '(' expr ')'
class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& ring)
      : text_(text), ring_(ring) {
    std::sort(ring_.begin(), ring_.end());
  }

  RationalFunction parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    RationalFunction value = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    if (!ring_.empty()) value = value.embedded(merge_variables(value.variables(), ring_));
    return value;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') {
        ++line_;
        line_start_ = pos_ + 1;
      }
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
    throw ParseError(message, line_, at - line_start_ + 1);
  }

  RationalFunction expr() {
    RationalFunction value = term();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') return value;
      ++pos_;
      RationalFunction rhs = term();
      if (c == '+') {
        value += rhs;
      } else {
        value -= rhs;
      }
    }
  }

  RationalFunction term() {
    RationalFunction value = unary();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '*' && c != '/') return value;
      const std::size_t op_pos = pos_;
      ++pos_;
      RationalFunction rhs = unary();
      if (c == '*') {
        value *= rhs;
      } else {
        if (rhs.is_zero()) fail_at("division by zero", op_pos);
        value /= rhs;
      }
    }
  }

  RationalFunction unary() {
    skip_space();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected positive integer exponent");
    unsigned long exponent = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      exponent = exponent * 10 + static_cast<unsigned long>(peek() - '0');
      if (exponent > 1000) fail_at("exponent too large", start);
      ++pos_;
    }
    if (exponent == 0) fail_at("exponent must be a positive integer", start);
    RationalFunction result = base;
    for (unsigned long i = 1; i < exponent; ++i) result *= base;
    return result;
  }

  RationalFunction primary() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      RationalFunction value = expr();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return RationalFunction(Rational(mpq_class(mpz_class(text_.substr(start, pos_ - start), 10))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      const std::string name = text_.substr(start, pos_ - start);
      if (!ring_.empty() && !std::binary_search(ring_.begin(), ring_.end(), name)) {
        fail_at("unknown variable '" + name + "'", start);
      }
      return RationalFunction::variable(name);
    }
    if (at_end()) fail("unexpected end of expression");
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& text_;
  std::vector<std::string> ring_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(const std::string& text,
                                         const std::vector<std::string>& ring) {
  return Parser(text, ring).parse();
}

}  // namespace fedosov
