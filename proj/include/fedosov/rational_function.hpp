#pragma once

#include <map>
#include <string>

#include "fedosov/polynomial.hpp"

namespace fedosov {

/// Element of Q(x_1, ..., x_m) stored as numerator / denominator.
///
/// Fractions are not reduced by a multivariate gcd. After every operation
/// a light normalisation runs: common monomial factors are cancelled, the
/// denominator is divided out when it divides the numerator exactly, and
/// the denominator is made to have leading coefficient 1. Equality is
/// decided by cross multiplication, so it never depends on normal form.
class RationalFunction {
 public:
  RationalFunction() : numerator_(0), denominator_(1) {}
  RationalFunction(const Polynomial& p);  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c) : RationalFunction(Polynomial(c)) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(Polynomial(c)) {}  // NOLINT
  RationalFunction(const Polynomial& numerator, const Polynomial& denominator);

  static RationalFunction variable(const std::string& name) {
    return RationalFunction(Polynomial::variable(name));
  }

  const Polynomial& numerator() const { return numerator_; }
  const Polynomial& denominator() const { return denominator_; }
  std::vector<std::string> variables() const;

  bool is_zero() const { return numerator_.is_zero(); }
  bool is_constant() const { return numerator_.is_constant() && denominator_.is_constant(); }

  RationalFunction embedded(const std::vector<std::string>& variables) const;

  /// Exact partial derivative (quotient rule). Unknown variable throws.
  RationalFunction partial(const std::string& name) const;
  /// Exact value at a point; throws PoleError if the denominator vanishes.
  Rational evaluate(const std::map<std::string, Rational>& point) const;

  RationalFunction inverse() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  RationalFunction& operator/=(const RationalFunction& other);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  /// Text in the literal syntax, e.g. "-4/(3*x)".
  std::string to_string() const;

 private:
  void normalize();

  Polynomial numerator_;
  Polynomial denominator_;
};

/// Parses the literal syntax (integers, identifiers, + - * / ^, parentheses).
/// When `ring` is non-empty every identifier must belong to it and the
/// result is embedded in that ring.
RationalFunction parse_rational_function(const std::string& text,
                                         const std::vector<std::string>& ring = {});

}  // namespace fedosov
