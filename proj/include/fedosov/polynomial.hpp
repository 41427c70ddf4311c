#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fedosov/rational.hpp"

namespace fedosov {

/// Sparse multivariate polynomial over the rationals.
///
/// The variable list is kept sorted by name and may contain variables that
/// do not occur in any term: it records the ring the polynomial lives in,
/// so that differentiating with respect to a declared but absent variable
/// yields zero while an undeclared variable is an error. Binary operations
/// work over the union of both variable lists. No stored term has a zero
/// coefficient.
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;
  using TermMap = std::map<Exponents, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT

  static Polynomial variable(const std::string& name);
  /// Zero polynomial in the ring with the given variables.
  static Polynomial zero_in(std::vector<std::string> variables);

  const std::vector<std::string>& variables() const { return variables_; }
  const TermMap& terms() const { return terms_; }
  bool has_variable(const std::string& name) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial; nullopt otherwise.
  std::optional<Rational> constant_value() const;
  std::size_t term_count() const { return terms_.size(); }

  /// Same polynomial over a larger sorted variable list.
  Polynomial embedded(const std::vector<std::string>& variables) const;

  Polynomial partial(const std::string& name) const;
  Rational evaluate(const std::map<std::string, Rational>& point) const;

  /// Quotient when `divisor` divides this polynomial exactly.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;
  /// Largest monomial dividing every term (exponentwise minimum).
  Exponents monomial_content() const;
  Polynomial divide_monomial(const Exponents& monomial) const;
  /// Lex-largest term coefficient (variables in sorted order).
  Rational leading_coefficient() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& factor);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& b) { return a *= b; }

  /// Exact equality (difference is the zero polynomial).
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return (a - b).is_zero(); }

  /// Deterministic text in the literal syntax, e.g. "3*x^2*y - 1/2".
  std::string to_string() const;

 private:
  void add_term(const Exponents& exponents, const Rational& coefficient);

  std::vector<std::string> variables_;
  TermMap terms_;
};

/// Sorted union of two sorted variable lists.
std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

}  // namespace fedosov
