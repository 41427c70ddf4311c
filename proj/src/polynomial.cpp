#include "fedosov/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "fedosov/errors.hpp"

namespace fedosov {

std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
  if (a == b) return a;
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Exponents{}, constant);
}

Polynomial Polynomial::variable(const std::string& name) {
  Polynomial p;
  p.variables_ = {name};
  p.terms_.emplace(Exponents{1}, Rational(1));
  return p;
}

Polynomial Polynomial::zero_in(std::vector<std::string> variables) {
  std::sort(variables.begin(), variables.end());
  variables.erase(std::unique(variables.begin(), variables.end()), variables.end());
  Polynomial p;
  p.variables_ = std::move(variables);
  return p;
}

bool Polynomial::has_variable(const std::string& name) const {
  return std::binary_search(variables_.begin(), variables_.end(), name);
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
}

std::optional<Rational> Polynomial::constant_value() const {
  if (!is_constant()) return std::nullopt;
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

Polynomial Polynomial::embedded(const std::vector<std::string>& variables) const {
  if (variables == variables_) return *this;
  std::vector<std::size_t> position(variables_.size());
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    auto it = std::lower_bound(variables.begin(), variables.end(), variables_[i]);
    if (it == variables.end() || *it != variables_[i]) {
      throw PreconditionError("cannot embed polynomial: variable '" + variables_[i] +
                              "' missing from target ring");
    }
    position[i] = static_cast<std::size_t>(it - variables.begin());
  }
  Polynomial out;
  out.variables_ = variables;
  for (const auto& [e, c] : terms_) {
    Exponents mapped(variables.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) mapped[position[i]] = e[i];
    out.terms_.emplace(std::move(mapped), c);
  }
  return out;
}

void Polynomial::add_term(const Exponents& exponents, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::partial(const std::string& name) const {
  auto it = std::lower_bound(variables_.begin(), variables_.end(), name);
  if (it == variables_.end() || *it != name) {
    throw PreconditionError("unknown variable '" + name + "' for differentiation");
  }
  const auto k = static_cast<std::size_t>(it - variables_.begin());
  Polynomial out = zero_in(variables_);
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponents d = e;
    d[k] -= 1;
    out.add_term(d, c * Rational(static_cast<long>(e[k])));
  }
  return out;
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> values;
  values.reserve(variables_.size());
  for (const auto& v : variables_) {
    auto it = point.find(v);
    if (it == point.end()) throw PreconditionError("no value assigned to variable '" + v + "'");
    values.push_back(it->second);
  }
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    mpq_class term = c.value();
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned p = 0; p < e[i]; ++p) term *= values[i].value();
    }
    sum += Rational(term);
  }
  return sum;
}

Polynomial::Exponents Polynomial::monomial_content() const {
  Exponents m(variables_.size(), 0);
  if (terms_.empty()) return m;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      m = e;
      first = false;
      continue;
    }
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  }
  return m;
}

Polynomial Polynomial::divide_monomial(const Exponents& monomial) const {
  Polynomial out = zero_in(variables_);
  for (const auto& [e, c] : terms_) {
    Exponents d = e;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] < monomial[i]) throw PreconditionError("monomial does not divide polynomial");
      d[i] -= monomial[i];
    }
    out.terms_.emplace(std::move(d), c);
  }
  return out;
}

Rational Polynomial::leading_coefficient() const {
  if (terms_.empty()) return Rational(0);
  return terms_.rbegin()->second;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  const auto vars = merge_variables(variables_, divisor.variables_);
  Polynomial remainder = embedded(vars);
  const Polynomial d = divisor.embedded(vars);
  Polynomial quotient = zero_in(vars);
  const auto& [lead_exp, lead_coef] = *d.terms_.rbegin();
  while (!remainder.is_zero()) {
    const auto& [re, rc] = *remainder.terms_.rbegin();
    Exponents q(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (re[i] < lead_exp[i]) return std::nullopt;
      q[i] = re[i] - lead_exp[i];
    }
    Polynomial step = zero_in(vars);
    step.terms_.emplace(q, rc / lead_coef);
    quotient += step;
    remainder -= step * d;
  }
  return quotient;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (variables_ != other.variables_) {
    const auto vars = merge_variables(variables_, other.variables_);
    *this = embedded(vars);
    const Polynomial rhs = other.embedded(vars);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const auto vars = merge_variables(a.variables_, b.variables_);
  const Polynomial lhs = a.embedded(vars);
  const Polynomial rhs = b.embedded(vars);
  Polynomial out = Polynomial::zero_in(vars);
  Polynomial::Exponents e(vars.size());
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& factor) {
  if (factor.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= factor;
  return *this;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest lex term first reads naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational coef = c;
    if (first) {
      if (coef.sign() < 0) {
        os << "-";
        coef = -coef;
      }
    } else {
      os << (coef.sign() < 0 ? " - " : " + ");
      coef = coef.abs();
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      factors.push_back(e[i] == 1 ? variables_[i]
                                  : variables_[i] + "^" + std::to_string(e[i]));
    }
    if (factors.empty()) {
      os << coef.to_string();
      continue;
    }
    if (!coef.is_one()) {
      os << coef.to_string() << "*";
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) os << "*";
      os << factors[i];
    }
  }
  return os.str();
}

}  // namespace fedosov
