#include "fedosov/lie_algebra.hpp"

#include <algorithm>

#include "fedosov/errors.hpp"

namespace fedosov {

LieAlgebraPresentation::LieAlgebraPresentation(std::vector<std::string> labels)
    : labels_(std::move(labels)), c_(labels_.size() * labels_.size() * labels_.size()) {}

void LieAlgebraPresentation::set_bracket(std::size_t i, std::size_t j, const std::vector<Rational>& value) {
  if (value.size() != dim()) throw SchemaError("bracket value has the wrong length");
  if (i == j) {
    for (const auto& v : value) {
      if (!v.is_zero()) throw PreconditionError("[b, b] must vanish");
    }
  }
  for (std::size_t k = 0; k < dim(); ++k) {
    c_[(i * dim() + j) * dim() + k] = value[k];
    c_[(j * dim() + i) * dim() + k] = -value[k];
  }
}

std::vector<Rational> LieAlgebraPresentation::bracket(std::size_t i, std::size_t j) const {
  std::vector<Rational> out(dim());
  for (std::size_t k = 0; k < dim(); ++k) out[k] = c(i, j, k);
  return out;
}

std::vector<Rational> LieAlgebraPresentation::bracket(const std::vector<Rational>& x,
                                                      const std::vector<Rational>& y) const {
  std::vector<Rational> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      const Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < dim(); ++k) {
        if (!c(i, j, k).is_zero()) out[k] += w * c(i, j, k);
      }
    }
  }
  return out;
}

std::optional<std::vector<std::size_t>> LieAlgebraPresentation::antisymmetry_failure() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      for (std::size_t k = 0; k < dim(); ++k) {
        if (!(c(i, j, k) + c(j, i, k)).is_zero()) return std::vector<std::size_t>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> LieAlgebraPresentation::jacobi_failure() const {
  auto unit = [&](std::size_t i) {
    std::vector<Rational> e(dim());
    e[i] = Rational(1);
    return e;
  };
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i + 1; j < dim(); ++j) {
      for (std::size_t k = j + 1; k < dim(); ++k) {
        const auto a = bracket(unit(i), bracket(j, k));
        const auto b = bracket(unit(j), bracket(k, i));
        const auto c3 = bracket(unit(k), bracket(i, j));
        for (std::size_t m = 0; m < dim(); ++m) {
          if (!(a[m] + b[m] + c3[m]).is_zero()) return std::vector<std::size_t>{i, j, k};
        }
      }
    }
  }
  return std::nullopt;
}

Matrix<Rational> LieAlgebraPresentation::ad(const std::vector<Rational>& x) const {
  Matrix<Rational> m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    std::vector<Rational> e(dim());
    e[j] = Rational(1);
    const auto col = bracket(x, e);
    for (std::size_t k = 0; k < dim(); ++k) m(k, j) = col[k];
  }
  return m;
}

bool is_lie_homomorphism(const LieAlgebraPresentation& from, const LieAlgebraPresentation& to,
                         const Matrix<Rational>& f) {
  if (f.cols() != from.dim() || f.rows() != to.dim()) return false;
  for (std::size_t i = 0; i < from.dim(); ++i) {
    for (std::size_t j = i + 1; j < from.dim(); ++j) {
      if (!(f * from.bracket(i, j) == to.bracket(f.column(i), f.column(j)))) return false;
    }
  }
  return true;
}

namespace {

std::vector<Rational> unit_vector(std::size_t d, std::size_t i) {
  std::vector<Rational> e(d);
  e[i] = Rational(1);
  return e;
}

Rational trace(const Matrix<Rational>& m) {
  Rational t;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

}  // namespace

BianchiType bianchi_classify(const LieAlgebraPresentation& algebra) {
  if (algebra.dim() != 3) throw PreconditionError("Bianchi classification needs a 3-dimensional algebra");
  if (algebra.antisymmetry_failure() || algebra.jacobi_failure()) {
    throw PreconditionError("structure constants do not define a Lie algebra");
  }
  // Derived algebra g' = span{[b_i, b_j]}.
  std::vector<std::vector<Rational>> derived;
  std::size_t current = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      derived.push_back(algebra.bracket(i, j));
      const std::size_t r = rank(Matrix<Rational>::from_columns(3, derived));
      if (r == current) {
        derived.pop_back();
      } else {
        current = r;
      }
    }
  }
  BianchiType result;
  result.derived_dimension = derived.size();

  if (derived.empty()) {
    result.type = "I";
    return result;
  }
  if (derived.size() == 1) {
    result.type = algebra.ad(derived[0]).is_zero() ? "II" : "III";
    return result;
  }
  if (derived.size() == 3) {
    Matrix<Rational> killing(3, 3);
    std::vector<Matrix<Rational>> ads;
    for (std::size_t i = 0; i < 3; ++i) ads.push_back(algebra.ad(unit_vector(3, i)));
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) killing(i, j) = trace(ads[i] * ads[j]);
    }
    // Sylvester's criterion on the leading principal minors.
    Matrix<Rational> m1(1, 1);
    m1(0, 0) = killing(0, 0);
    Matrix<Rational> m2(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) m2(i, j) = killing(i, j);
    const int s1 = determinant(m1).sign();
    const int s2 = determinant(m2).sign();
    const int s3 = determinant(killing).sign();
    const bool positive = s1 > 0 && s2 > 0 && s3 > 0;
    const bool negative = s1 < 0 && s2 > 0 && s3 < 0;
    result.type = (positive || negative) ? "IX" : "VIII";
    return result;
  }

  // dim g' = 2: g' is abelian; M = ad_X restricted to g' for X ∉ g'.
  std::size_t outside = 0;
  for (; outside < 3; ++outside) {
    auto cols = derived;
    cols.push_back(unit_vector(3, outside));
    if (rank(Matrix<Rational>::from_columns(3, cols)) == 3) break;
  }
  const auto x = unit_vector(3, outside);
  const Matrix<Rational> basis = Matrix<Rational>::from_columns(3, derived);
  Matrix<Rational> m(2, 2);
  for (std::size_t j = 0; j < 2; ++j) {
    const auto image = algebra.bracket(x, derived[j]);
    const auto coords = solve(basis, image);
    if (!coords) throw std::logic_error("derived algebra is not an ideal");
    m(0, j) = (*coords)[0];
    m(1, j) = (*coords)[1];
  }
  const Rational tr = m(0, 0) + m(1, 1);
  const Rational det = determinant(m);
  if (tr.is_zero()) {
    result.type = det.sign() < 0 ? "VI_0" : "VII_0";
    return result;
  }
  if (m(0, 1).is_zero() && m(1, 0).is_zero() && m(0, 0) == m(1, 1)) {
    result.type = "V";
    return result;
  }
  const Rational disc = tr * tr - Rational(4) * det;
  if (disc.is_zero()) {
    result.type = "IV";
    return result;
  }
  result.invariant = tr * tr / det;
  if (disc.sign() < 0) {
    result.type = "VII_h";
    return result;
  }
  result.type = "VI_h";
  Rational root;
  if (rational_sqrt(disc, root)) {
    const Rational l1 = (tr + root) / Rational(2);
    const Rational l2 = (tr - root) / Rational(2);
    result.parameters = {l1 / l2, l2 / l1};
    std::sort(result.parameters.begin(), result.parameters.end());
  }
  return result;
}

}  // namespace fedosov
