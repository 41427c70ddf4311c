#include "fedosov/rational.hpp"

#include <cctype>

#include "fedosov/errors.hpp"

namespace fedosov {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  const std::string body(text.substr(begin, end - begin));
  if (body.empty()) throw ParseError("empty rational literal", 1, begin + 1);

  const auto slash = body.find('/');
  auto valid_integer = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };

  std::string num = slash == std::string::npos ? body : body.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
  if (!valid_integer(num, true)) throw ParseError("invalid rational numerator '" + num + "'", 1, begin + 1);
  if (!valid_integer(den, false)) {
    throw ParseError("invalid rational denominator '" + den + "'", 1, begin + slash + 2);
  }
  if (!num.empty() && num[0] == '+') num.erase(0, 1);

  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw ParseError("zero denominator in rational literal", 1, begin + slash + 2);
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(q);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational");
  mpq_class q = 1 / value_;
  return Rational(q);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("division by zero rational");
  value_ /= other.value_;
  return *this;
}

bool rational_sqrt(const Rational& value, Rational& root) {
  if (value.sign() < 0) return false;
  const mpz_class num = value.numerator();
  const mpz_class den = value.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return false;
  }
  mpz_class rn;
  mpz_class rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Rational(mpq_class(rn, rd));
  return true;
}

}  // namespace fedosov
