#include "fedosov/rational_function.hpp"

#include <algorithm>

#include "fedosov/errors.hpp"

namespace fedosov {

RationalFunction::RationalFunction(const Polynomial& p)
    : numerator_(p), denominator_(Polynomial(1).embedded(p.variables())) {}

RationalFunction::RationalFunction(const Polynomial& numerator, const Polynomial& denominator)
    : numerator_(numerator), denominator_(denominator) {
  if (denominator_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

std::vector<std::string> RationalFunction::variables() const {
  return merge_variables(numerator_.variables(), denominator_.variables());
}

void RationalFunction::normalize() {
  const auto vars = variables();
  numerator_ = numerator_.embedded(vars);
  denominator_ = denominator_.embedded(vars);
  if (numerator_.is_zero()) {
    denominator_ = Polynomial(1).embedded(vars);
    return;
  }
  if (auto c = denominator_.constant_value()) {
    numerator_ *= c->inverse();
    denominator_ = Polynomial(1).embedded(vars);
    return;
  }
  auto mn = numerator_.monomial_content();
  const auto md = denominator_.monomial_content();
  bool any = false;
  for (std::size_t i = 0; i < mn.size(); ++i) {
    mn[i] = std::min(mn[i], md[i]);
    any = any || mn[i] != 0;
  }
  if (any) {
    numerator_ = numerator_.divide_monomial(mn);
    denominator_ = denominator_.divide_monomial(mn);
  }
  if (auto q = numerator_.divide_exact(denominator_)) {
    numerator_ = q->embedded(vars);
    denominator_ = Polynomial(1).embedded(vars);
    return;
  }
  const Rational lead = denominator_.leading_coefficient();
  if (!lead.is_one()) {
    const Rational inv = lead.inverse();
    numerator_ *= inv;
    denominator_ *= inv;
  }
}

RationalFunction RationalFunction::embedded(const std::vector<std::string>& variables) const {
  RationalFunction out = *this;
  out.numerator_ = numerator_.embedded(variables);
  out.denominator_ = denominator_.embedded(variables);
  return out;
}

RationalFunction RationalFunction::partial(const std::string& name) const {
  const auto vars = variables();
  if (!std::binary_search(vars.begin(), vars.end(), name)) {
    throw PreconditionError("unknown variable '" + name + "' for differentiation");
  }
  const Polynomial& f = numerator_;
  const Polynomial& g = denominator_;
  if (g.is_constant()) return RationalFunction(f.partial(name), g);
  return RationalFunction(f.partial(name) * g - f * g.partial(name), g * g);
}

Rational RationalFunction::evaluate(const std::map<std::string, Rational>& point) const {
  const Rational den = denominator_.evaluate(point);
  if (den.is_zero()) throw PoleError("pole: denominator " + denominator_.to_string() + " vanishes");
  return numerator_.evaluate(point) / den;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  return RationalFunction(denominator_, numerator_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.numerator_ = -numerator_;
  return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) {
    *this = other;
    return *this;
  }
  if (denominator_ == other.denominator_) {
    *this = RationalFunction(numerator_ + other.numerator_, denominator_);
    return *this;
  }
  if (auto q = denominator_.divide_exact(other.denominator_)) {
    *this = RationalFunction(numerator_ + other.numerator_ * *q, denominator_);
    return *this;
  }
  if (auto q = other.denominator_.divide_exact(denominator_)) {
    *this = RationalFunction(numerator_ * *q + other.numerator_, other.denominator_);
    return *this;
  }
  *this = RationalFunction(numerator_ * other.denominator_ + other.numerator_ * denominator_,
                           denominator_ * other.denominator_);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) {
  return *this += -other;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  if (is_zero()) return *this;
  if (other.is_zero()) {
    *this = RationalFunction(Polynomial::zero_in(merge_variables(variables(), other.variables())));
    return *this;
  }
  *this = RationalFunction(numerator_ * other.numerator_, denominator_ * other.denominator_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other) {
  if (other.is_zero()) throw std::domain_error("division by zero rational function");
  *this = RationalFunction(numerator_ * other.denominator_, denominator_ * other.numerator_);
  return *this;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return (a.numerator_ * b.denominator_ - b.numerator_ * a.denominator_).is_zero();
}

std::string RationalFunction::to_string() const {
  if (denominator_.is_constant()) return numerator_.to_string();
  // Clear coefficient denominators so that -4/(3*x) prints as such.
  mpz_class scale = 1;
  for (const Polynomial* p : {&numerator_, &denominator_}) {
    for (const auto& [e, c] : p->terms()) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.denominator().get_mpz_t());
    }
  }
  const Rational k{mpq_class(scale)};
  const Polynomial num_poly = numerator_ * k;
  std::string num = num_poly.to_string();
  if (num_poly.term_count() > 1) num = "(" + num + ")";
  return num + "/(" + (denominator_ * k).to_string() + ")";
}

}  // namespace fedosov
