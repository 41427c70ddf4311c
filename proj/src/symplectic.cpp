#include "fedosov/symplectic.hpp"

#include <array>

#include "fedosov/errors.hpp"

namespace fedosov {

SymplecticSpace::SymplecticSpace(std::size_t half_dim) : n_(half_dim), omega_(2 * half_dim, 2 * half_dim) {
  if (half_dim == 0) throw PreconditionError("symplectic space needs n >= 1");
  for (std::size_t a = 0; a < dim(); ++a) {
    for (std::size_t b = 0; b < dim(); ++b) omega_(a, b) = omega(a, b);
  }
}

Rational SymplecticSpace::omega(const Vector& x, const Vector& y) const {
  Rational sum;
  for (std::size_t i = 0; i < n_; ++i) sum += x[i] * y[i + n_] - x[i + n_] * y[i];
  return sum;
}

Vector SymplecticSpace::basis_vector(std::size_t a) const {
  Vector e(dim());
  e[a] = Rational(1);
  return e;
}

PointTensor SymplecticSpace::omega_tensor() const {
  PointTensor w = zero(covariant_slots(2));
  for (std::size_t a = 0; a < dim(); ++a) w(a, partner(a)) = omega(a, partner(a));
  return w;
}

Covector musical_flat(const SymplecticSpace& v, const Vector& x) {
  if (x.size() != v.dim()) throw SchemaError("vector length does not match the space");
  Covector c(v.dim());
  for (std::size_t j = 0; j < v.dim(); ++j) {
    const std::size_t i = v.partner(j);
    c[j] = x[i] * v.omega(i, j);
  }
  return c;
}

Vector musical_sharp(const SymplecticSpace& v, const Covector& c) {
  if (c.size() != v.dim()) throw SchemaError("covector length does not match the space");
  Vector x(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const std::size_t j = v.partner(i);
    x[i] = v.omega(i, j) * c[j];
  }
  return x;
}

bool is_symplectic_matrix(const SymplecticSpace& v, const RationalMatrix& m) {
  if (m.rows() != v.dim() || m.cols() != v.dim()) return false;
  return m.transpose() * v.omega_matrix() * m == v.omega_matrix();
}

namespace {

bool compare_swapped(const PointTensor& t, std::size_t a, std::size_t b, bool anti) {
  if (a >= t.order() || b >= t.order()) throw std::out_of_range("slot out of range");
  for (std::size_t f = 0; f < t.size(); ++f) {
    auto idx = t.multi_index(f);
    if (idx[a] > idx[b]) continue;
    std::swap(idx[a], idx[b]);
    const Rational& other = t.at(idx);
    if (anti ? !(t.data()[f] + other).is_zero() : !(t.data()[f] == other)) return false;
  }
  return true;
}

void require_antisymmetric12(const PointTensor& t, const char* what) {
  if (!is_antisymmetric_in(t, 0, 1)) {
    throw PreconditionError(std::string(what) + ": tensor is not antisymmetric in its first two slots");
  }
}

void require_symmetric12(const PointTensor& t, const char* what) {
  if (!is_symmetric_in(t, 0, 1)) {
    throw PreconditionError(std::string(what) + ": tensor is not symmetric in its first two slots");
  }
}

void require_order(const SymplecticSpace& v, const PointTensor& t, std::size_t order, const char* what) {
  if (t.dim() != v.dim() || t.order() != order) {
    throw SchemaError(std::string(what) + ": tensor shape does not match");
  }
}

}  // namespace

bool is_symmetric_in(const PointTensor& t, std::size_t a, std::size_t b) { return compare_swapped(t, a, b, false); }
bool is_antisymmetric_in(const PointTensor& t, std::size_t a, std::size_t b) { return compare_swapped(t, a, b, true); }

bool is_totally_symmetric3(const PointTensor& t) { return is_symmetric_in(t, 0, 1) && is_symmetric_in(t, 1, 2); }
bool is_totally_antisymmetric3(const PointTensor& t) {
  return is_antisymmetric_in(t, 0, 1) && is_antisymmetric_in(t, 1, 2);
}

PointTensor torsion_lower(const SymplecticSpace& v, const PointTensor& t) {
  require_order(v, t, 3, "torsion_lower");
  require_antisymmetric12(t, "torsion_lower");
  PointTensor out = v.zero3();
  const std::size_t d = v.dim();
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      for (std::size_t c = 0; c < d; ++c) {
        const std::size_t k = v.partner(c);
        out(a, b, c) = t(a, b, k) * v.omega(k, c);
      }
    }
  }
  return out;
}

PointTensor torsion_raise(const SymplecticSpace& v, const PointTensor& lowered) {
  require_order(v, lowered, 3, "torsion_raise");
  PointTensor out = v.zero(endomorphism_valued_slots(2));
  const std::size_t d = v.dim();
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      for (std::size_t k = 0; k < d; ++k) {
        const std::size_t c = v.partner(k);
        out(a, b, k) = v.omega(k, c) * lowered(a, b, c);
      }
    }
  }
  return out;
}

PointTensor cotorsion_lower(const SymplecticSpace& v, const PointTensor& s) {
  require_order(v, s, 3, "cotorsion_lower");
  PointTensor out = v.zero3();
  const std::size_t d = v.dim();
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      const std::size_t k = v.partner(y);
      for (std::size_t z = 0; z < d; ++z) out(x, y, z) = s(z, x, k) * v.omega(k, y);
    }
  }
  return out;
}

PointTensor cotorsion_raise(const SymplecticSpace& v, const PointTensor& lowered) {
  require_order(v, lowered, 3, "cotorsion_raise");
  PointTensor out = v.zero(endomorphism_valued_slots(2));
  const std::size_t d = v.dim();
  for (std::size_t z = 0; z < d; ++z) {
    for (std::size_t x = 0; x < d; ++x) {
      for (std::size_t k = 0; k < d; ++k) {
        const std::size_t y = v.partner(k);
        out(z, x, k) = v.omega(k, y) * lowered(x, y, z);
      }
    }
  }
  return out;
}

Covector contract_s13(const SymplecticSpace& v, const PointTensor& s) {
  require_order(v, s, 3, "contract_s13");
  require_symmetric12(s, "contract_s13");
  const std::size_t n = v.half_dim();
  Covector out(v.dim());
  for (std::size_t z = 0; z < v.dim(); ++z) {
    for (std::size_t i = 0; i < n; ++i) out[z] += s(i, z, i + n) - s(i + n, z, i);
  }
  return out;
}

Covector contract_t12(const SymplecticSpace& v, const PointTensor& t) {
  require_order(v, t, 3, "contract_t12");
  require_antisymmetric12(t, "contract_t12");
  const std::size_t n = v.half_dim();
  Covector out(v.dim());
  for (std::size_t z = 0; z < v.dim(); ++z) {
    for (std::size_t i = 0; i < n; ++i) out[z] += t(i, i + n, z);
  }
  return out;
}

Covector contract_t13(const SymplecticSpace& v, const PointTensor& t) {
  require_order(v, t, 3, "contract_t13");
  require_antisymmetric12(t, "contract_t13");
  const std::size_t n = v.half_dim();
  Covector out(v.dim());
  for (std::size_t y = 0; y < v.dim(); ++y) {
    for (std::size_t i = 0; i < n; ++i) out[y] += t(i, y, i + n) - t(i + n, y, i);
  }
  return out;
}

PointTensor cyclic_sum(const PointTensor& a) {
  if (a.order() != 3) throw SchemaError("cyclic_sum expects a (0,3) tensor");
  PointTensor out(a.dim(), a.slots());
  const std::size_t d = a.dim();
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      for (std::size_t z = 0; z < d; ++z) out(x, y, z) = a(x, y, z) + a(y, z, x) + a(z, x, y);
    }
  }
  return out;
}

PointTensor linear_type_tensor(const SymplecticSpace& v, const Vector& xi) {
  if (xi.size() != v.dim()) throw SchemaError("vector length does not match the space");
  PointTensor s = v.zero(endomorphism_valued_slots(2));
  const std::size_t d = v.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Rational w_ij = v.omega(i, j);
      const Rational w_jxi = v.omega(v.basis_vector(j), xi);
      for (std::size_t k = 0; k < d; ++k) {
        Rational value = w_ij * xi[k];
        if (k == i) value -= w_jxi;
        s(i, j, k) = value;
      }
    }
  }
  return s;
}

}  // namespace fedosov
