#include "fedosov/chart.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "fedosov/errors.hpp"

namespace fedosov {

namespace {

using RF = RationalFunction;

std::vector<std::size_t> with_slot(std::vector<std::size_t> index, std::size_t slot, std::size_t value) {
  index[slot] = value;
  return index;
}

void for_each_index(std::size_t dim, std::size_t arity, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> index(arity, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) total *= dim;
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    for (std::size_t k = arity; k-- > 0;) {
      index[k] = rest % dim;
      rest /= dim;
    }
    f(index);
  }
}

/// ω(e_a, ξ) for every coordinate a.
std::vector<RF> omega_with(const Chart& c, const FieldTensor& xi) {
  std::vector<RF> out(c.dim());
  for (std::size_t a = 0; a < c.dim(); ++a) {
    for (std::size_t l = 0; l < c.dim(); ++l) {
      if (!c.omega(a, l).is_zero() && !xi(l).is_zero()) out[a] += c.omega(a, l) * xi(l);
    }
  }
  return out;
}

void require_vector(const FieldTensor& v, const Chart& c, const char* what) {
  if (v.dim() != c.dim() || v.slots() != std::vector<Slot>{Slot::Contravariant}) {
    throw SchemaError(std::string(what) + " must be a vector field on the chart");
  }
}

/// Determinant by cofactor expansion along the first row.
Polynomial laplace_determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial(1);
  if (n == 1) return m[0][0];
  Polynomial det(0);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != col) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const Polynomial term = m[0][col] * laplace_determinant(minor);
    if (col % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

}  // namespace

Chart::Chart(std::vector<std::string> coordinates)
    : coords(std::move(coordinates)),
      omega(coords.size(), covariant_slots(2)),
      christoffel(coords.size(), endomorphism_valued_slots(2)) {}

std::vector<std::string> Chart::ring() const {
  auto r = coords;
  std::sort(r.begin(), r.end());
  return r;
}

std::size_t Chart::coordinate_index(const std::string& name) const {
  auto it = std::find(coords.begin(), coords.end(), name);
  if (it == coords.end()) throw SchemaError("unknown coordinate '" + name + "'");
  return static_cast<std::size_t>(it - coords.begin());
}

const FieldTensor& Chart::field(const std::string& name) const {
  auto it = fields.find(name);
  if (it == fields.end()) throw SchemaError("chart has no field named '" + name + "'");
  return it->second;
}

RationalFunction Chart::parse(const std::string& text) const { return parse_rational_function(text, ring()); }

FieldTensor vector_field(const Chart& c, const std::vector<RationalFunction>& components) {
  if (components.size() != c.dim()) throw SchemaError("vector field has the wrong number of components");
  FieldTensor v(c.dim(), {Slot::Contravariant});
  for (std::size_t i = 0; i < c.dim(); ++i) v(i) = components[i];
  return v;
}

FieldTensor zero_field(const Chart& c, std::vector<Slot> slots) { return FieldTensor(c.dim(), std::move(slots)); }

RationalFunction coordinate_partial(const Chart& c, const RationalFunction& f, std::size_t i) {
  if (f.is_constant()) return RF(0);
  return f.embedded(c.ring()).partial(c.coords[i]);
}

PointTensor evaluate(const FieldTensor& t, const Point& p) {
  PointTensor out(t.dim(), t.slots());
  for (std::size_t f = 0; f < t.size(); ++f) out.data()[f] = t.data()[f].evaluate(p);
  return out;
}

FieldTensor structure_tensor(const Chart& c) {
  switch (c.structure.kind) {
    case StructureSpec::Kind::None:
      return zero_field(c, endomorphism_valued_slots(2));
    case StructureSpec::Kind::LinearType:
      return linear_type_structure(c, c.field(c.structure.field));
    case StructureSpec::Kind::Explicit: {
      const auto& s = c.field(c.structure.field);
      if (s.dim() != c.dim() || s.slots() != endomorphism_valued_slots(2)) {
        throw SchemaError("structure field must be a (1,2) tensor");
      }
      return s;
    }
  }
  throw std::logic_error("unknown structure kind");
}

FieldTensor connection(const Chart& c, Which which, const FieldTensor& s) {
  if (which == Which::Base) return c.christoffel;
  return c.christoffel - s;
}

FieldTensor torsion_of(const FieldTensor& gamma) {
  const std::size_t d = gamma.dim();
  FieldTensor t(d, endomorphism_valued_slots(2));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) t(i, j, k) = gamma(i, j, k) - gamma(j, i, k);
  return t;
}

FieldTensor chart_torsion(const Chart& c) { return torsion_of(c.christoffel); }

FieldTensor curvature_of(const Chart& c, const FieldTensor& gamma) {
  const std::size_t d = c.dim();
  FieldTensor r(d, endomorphism_valued_slots(3));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j) continue;
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t m = 0; m < d; ++m) {
          RF value = coordinate_partial(c, gamma(i, k, m), j) - coordinate_partial(c, gamma(j, k, m), i);
          for (std::size_t l = 0; l < d; ++l) {
            if (!gamma(i, k, l).is_zero() && !gamma(j, l, m).is_zero()) value += gamma(i, k, l) * gamma(j, l, m);
            if (!gamma(j, k, l).is_zero() && !gamma(i, l, m).is_zero()) value -= gamma(j, k, l) * gamma(i, l, m);
          }
          r(i, j, k, m) = value;
        }
      }
    }
  }
  return r;
}

FieldTensor chart_curvature(const Chart& c, Which which, const FieldTensor& s) {
  return curvature_of(c, connection(c, which, s));
}

FieldTensor covariant_derivative(const Chart& c, const FieldTensor& gamma, const FieldTensor& k) {
  const std::size_t d = c.dim();
  std::vector<Slot> slots{Slot::Covariant};
  slots.insert(slots.end(), k.slots().begin(), k.slots().end());
  FieldTensor out(d, slots);
  for_each_index(d, slots.size(), [&](const std::vector<std::size_t>& index) {
    const std::size_t der = index[0];
    const std::vector<std::size_t> rest(index.begin() + 1, index.end());
    RF value = coordinate_partial(c, k.at(rest), der);
    for (std::size_t s = 0; s < rest.size(); ++s) {
      for (std::size_t l = 0; l < d; ++l) {
        const RF& comp = k.at(with_slot(rest, s, l));
        if (comp.is_zero()) continue;
        if (k.slots()[s] == Slot::Contravariant) {
          if (!gamma(der, l, rest[s]).is_zero()) value += gamma(der, l, rest[s]) * comp;
        } else {
          if (!gamma(der, rest[s], l).is_zero()) value -= gamma(der, rest[s], l) * comp;
        }
      }
    }
    out.at(index) = value;
  });
  return out;
}

RationalFunction omega_of(const Chart& c, const FieldTensor& x, const FieldTensor& y) {
  RF out;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    if (x(i).is_zero()) continue;
    for (std::size_t j = 0; j < c.dim(); ++j) {
      if (!y(j).is_zero() && !c.omega(i, j).is_zero()) out += x(i) * c.omega(i, j) * y(j);
    }
  }
  return out;
}

FieldTensor linear_type_structure(const Chart& c, const FieldTensor& xi) {
  require_vector(xi, c, "xi");
  const std::size_t d = c.dim();
  const auto w = omega_with(c, xi);
  FieldTensor s(d, endomorphism_valued_slots(2));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        RF value = c.omega(i, j) * xi(k);
        if (i == k) value -= w[j];
        s(i, j, k) = value;
      }
  return s;
}

FieldTensor contract_slot(const FieldTensor& k, std::size_t slot, const FieldTensor& v) {
  if (slot >= k.order()) throw std::out_of_range("contraction slot out of range");
  std::vector<Slot> slots = k.slots();
  slots.erase(slots.begin() + static_cast<std::ptrdiff_t>(slot));
  FieldTensor out(k.dim(), slots);
  for_each_index(k.dim(), slots.size(), [&](const std::vector<std::size_t>& index) {
    std::vector<std::size_t> full(index);
    full.insert(full.begin() + static_cast<std::ptrdiff_t>(slot), 0);
    RF value;
    for (std::size_t l = 0; l < k.dim(); ++l) {
      if (v(l).is_zero()) continue;
      full[slot] = l;
      if (!k.at(full).is_zero()) value += k.at(full) * v(l);
    }
    out.at(index) = value;
  });
  return out;
}

FieldTensor lower_curvature(const Chart& c, const FieldTensor& r) {
  const std::size_t d = c.dim();
  FieldTensor out(d, covariant_slots(4));
  for_each_index(d, 4, [&](const std::vector<std::size_t>& index) {
    RF value;
    for (std::size_t m = 0; m < d; ++m) {
      const RF& comp = r(index[0], index[1], index[2], m);
      if (!comp.is_zero() && !c.omega(m, index[3]).is_zero()) value += comp * c.omega(m, index[3]);
    }
    out.at(index) = value;
  });
  return out;
}

VerificationReport verify_omega(const Chart& c) {
  const std::size_t d = c.dim();
  VerificationReport report;
  FieldTensor sym(d, covariant_slots(2));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) sym(i, j) = c.omega(i, j) + c.omega(j, i);
  report.add_zero("omega antisymmetric", nonzero_witness(sym));

  FieldTensor d_omega(d, covariant_slots(3));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        d_omega(i, j, k) = coordinate_partial(c, c.omega(j, k), i) + coordinate_partial(c, c.omega(k, i), j) +
                           coordinate_partial(c, c.omega(i, j), k);
      }
  report.add_zero("omega closed", nonzero_witness(d_omega));

  Matrix<RF> m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = c.omega(i, j);
  const RF det = determinant(m);
  report.add("omega nondegenerate", !det.is_zero(),
             det.is_zero() ? std::optional<std::string>("det omega = 0") : std::nullopt);
  return report;
}

VerificationReport verify_as_conditions(const Chart& c, const FieldTensor& s) {
  const FieldTensor gamma = connection(c, Which::Base, s);
  const FieldTensor tilde = connection(c, Which::Tilde, s);
  const FieldTensor r = curvature_of(c, gamma);
  const FieldTensor r_tilde = curvature_of(c, tilde);
  const FieldTensor t_tilde = torsion_of(tilde);

  VerificationReport report;
  report.add_zero("nabla omega = 0", nonzero_witness(covariant_derivative(c, gamma, c.omega)));
  report.add_zero("T = 0", nonzero_witness(torsion_of(gamma)));
  report.add_zero("tilde-nabla omega = 0", nonzero_witness(covariant_derivative(c, tilde, c.omega)));
  report.add_zero("tilde-nabla S = 0", nonzero_witness(covariant_derivative(c, tilde, s)));
  report.add_zero("tilde-nabla R = 0", nonzero_witness(covariant_derivative(c, tilde, r)));
  report.add_zero("tilde-nabla R-tilde = 0", nonzero_witness(covariant_derivative(c, tilde, r_tilde)));
  report.add_zero("tilde-nabla T-tilde = 0", nonzero_witness(covariant_derivative(c, tilde, t_tilde)));
  return report;
}

FieldTensor auto_xi_perp(const Chart& c, const FieldTensor& xi) {
  require_vector(xi, c, "xi");
  const auto w = omega_with(c, xi);
  for (std::size_t a = 0; a < c.dim(); ++a) {
    if (w[a].is_zero()) continue;
    FieldTensor out = zero_field(c, {Slot::Contravariant});
    out(a) = w[a].inverse();
    return out;
  }
  throw PreconditionError("no field Y with omega(Y, xi) != 0: xi vanishes identically");
}

VerificationReport verify_linear_type_suite(const Chart& c, const FieldTensor& xi,
                                            const std::optional<FieldTensor>& xi_perp) {
  require_vector(xi, c, "xi");
  if (xi.is_zero()) throw PreconditionError("xi vanishes identically");
  const std::size_t d = c.dim();
  const FieldTensor s = linear_type_structure(c, xi);
  const FieldTensor gamma = connection(c, Which::Base, s);
  const FieldTensor tilde = connection(c, Which::Tilde, s);
  const auto w = omega_with(c, xi);  // ω_{Xξ} on coordinate fields

  VerificationReport report;
  report.add_zero("nabla omega = 0", nonzero_witness(covariant_derivative(c, gamma, c.omega)));
  report.add_zero("T = 0", nonzero_witness(torsion_of(gamma)));
  report.add_zero("tilde-nabla xi = 0", nonzero_witness(covariant_derivative(c, tilde, xi)));

  const FieldTensor nabla_xi = covariant_derivative(c, gamma, xi);
  FieldTensor diff(d, {Slot::Covariant, Slot::Contravariant});
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t k = 0; k < d; ++k) diff(x, k) = nabla_xi(x, k) - w[x] * xi(k);
  report.add_zero("nabla_X xi = omega(X, xi) xi", nonzero_witness(diff));
  report.add_zero("xi geodesic", nonzero_witness(contract_slot(nabla_xi, 0, xi)));
  report.add_zero("L_xi omega = 0", nonzero_witness(lie_derivative_omega(c, xi)));
  report.checks.push_back(distribution_integrability(c, xi));
  const auto ham = hamiltonian_oneform(c, xi);
  report.add("i_xi omega closed", ham.closed, ham.closed_witness);

  const FieldTensor r = curvature_of(c, gamma);
  report.add_zero("R_XY xi = 0", nonzero_witness(contract_slot(r, 2, xi)));

  const FieldTensor r_xi = contract_slot(r, 0, xi);  // (X, Y, out): R_{ξX}Y
  FieldTensor sym(d, endomorphism_valued_slots(2));
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t m = 0; m < d; ++m) sym(x, y, m) = r_xi(x, y, m) - r_xi(y, x, m);
  report.add_zero("R_{xi X} Y = R_{xi Y} X", nonzero_witness(sym));

  const FieldTensor r4 = lower_curvature(c, r);
  FieldTensor pair(d, covariant_slots(4));
  for_each_index(d, 4, [&](const std::vector<std::size_t>& i) {
    pair.at(i) = r4(i[0], i[1], i[2], i[3]) - r4(i[0], i[1], i[3], i[2]);
  });
  report.add_zero("R_XYZU = R_XYUZ", nonzero_witness(pair));

  const FieldTensor r4_xi = contract_slot(r4, 0, xi);  // R_{ξ Z U W}
  FieldTensor cyclic(d, covariant_slots(5));
  for_each_index(d, 5, [&](const std::vector<std::size_t>& i) {
    const std::size_t u = i[3], wv = i[4];
    const std::size_t order[3][3] = {{i[0], i[1], i[2]}, {i[1], i[2], i[0]}, {i[2], i[0], i[1]}};
    RF value;
    for (const auto& o : order) {
      value += c.omega(o[0], o[1]) * r4_xi(o[2], u, wv) + w[o[0]] * r4(o[1], o[2], u, wv);
    }
    cyclic.at(i) = value;
  });
  report.add_zero("cyclic sum of omega_XY R_{xi Z U W} + omega_{X xi} R_{Y Z U W} = 0", nonzero_witness(cyclic));

  FieldTensor swap(d, covariant_slots(4));
  for_each_index(d, 4, [&](const std::vector<std::size_t>& i) {
    swap.at(i) = w[i[0]] * r4_xi(i[1], i[2], i[3]) - w[i[1]] * r4_xi(i[0], i[2], i[3]);
  });
  report.add_zero("omega_{X xi} R_{xi Y U W} = omega_{Y xi} R_{xi X U W}", nonzero_witness(swap));

  FieldTensor perp = xi_perp ? *xi_perp : auto_xi_perp(c, xi);
  require_vector(perp, c, "xi-perp");
  const RF normal = omega_of(c, perp, xi);
  report.add("omega(xi-perp, xi) = 1", normal == RF(1),
             normal == RF(1) ? std::nullopt : std::optional<std::string>("omega(xi-perp, xi) = " + normal.to_string()));

  const FieldTensor r4_perp1 = contract_slot(r4, 1, perp);  // R_{X ξ⊥ U W}
  const FieldTensor r4_perp0 = contract_slot(r4, 0, perp);  // R_{ξ⊥ X U W}
  const RF base = contract_slot(contract_slot(contract_slot(r4_xi, 0, perp), 0, perp), 0, perp).data()[0];
  std::vector<RF> pw(d);  // ω_{ξ⊥ X}
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t l = 0; l < d; ++l) pw[x] += perp(l) * c.omega(l, x);
  }

  FieldTensor reduced_xi(d, covariant_slots(3));
  for_each_index(d, 3, [&](const std::vector<std::size_t>& i) {
    reduced_xi.at(i) = r4_xi(i[0], i[1], i[2]) - w[i[0]] * w[i[1]] * w[i[2]] * base;
  });
  report.add_zero("R_{xi X Y Z} = omega_{X xi} omega_{Y xi} omega_{Z xi} R_{xi p p p}", nonzero_witness(reduced_xi));

  FieldTensor reduced(d, covariant_slots(4));
  for_each_index(d, 4, [&](const std::vector<std::size_t>& i) {
    const std::size_t x = i[0], y = i[1], u = i[2], wv = i[3];
    const RF coefficient = -c.omega(x, y) - pw[x] * w[y] + pw[y] * w[x];
    const RF expected = coefficient * w[u] * w[wv] * base - w[x] * r4_perp1(y, u, wv) - w[y] * r4_perp0(x, u, wv);
    reduced.at(i) = r4(x, y, u, wv) - expected;
  });
  report.add_zero("R_XYUW in terms of R_{xi p p p}", nonzero_witness(reduced));
  return report;
}

VerificationReport verify_chart(const Chart& c, Suite suite) {
  VerificationReport report = verify_omega(c);
  auto append_new = [&](const VerificationReport& other) {
    for (const auto& check : other.checks) {
      if (!report.find(check.name)) report.checks.push_back(check);
    }
  };
  if (suite == Suite::AS || suite == Suite::All) append_new(verify_as_conditions(c, structure_tensor(c)));
  if (suite == Suite::LinearType || suite == Suite::All) {
    if (c.structure.kind != StructureSpec::Kind::LinearType) {
      throw PreconditionError("the linear-type suite needs a chart whose structure is of linear type");
    }
    append_new(verify_linear_type_suite(c, c.field(c.structure.field)));
  }
  return report;
}

FieldTensor lie_bracket(const Chart& c, const FieldTensor& x, const FieldTensor& y) {
  require_vector(x, c, "X");
  require_vector(y, c, "Y");
  FieldTensor out = zero_field(c, {Slot::Contravariant});
  for (std::size_t k = 0; k < c.dim(); ++k) {
    RF value;
    for (std::size_t i = 0; i < c.dim(); ++i) {
      if (!x(i).is_zero()) value += x(i) * coordinate_partial(c, y(k), i);
      if (!y(i).is_zero()) value -= y(i) * coordinate_partial(c, x(k), i);
    }
    out(k) = value;
  }
  return out;
}

FieldTensor lie_derivative_omega(const Chart& c, const FieldTensor& xi) {
  require_vector(xi, c, "xi");
  const std::size_t d = c.dim();
  FieldTensor out(d, covariant_slots(2));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      RF value;
      for (std::size_t k = 0; k < d; ++k) {
        if (!xi(k).is_zero()) value += xi(k) * coordinate_partial(c, c.omega(i, j), k);
        if (!c.omega(k, j).is_zero()) value += c.omega(k, j) * coordinate_partial(c, xi(k), i);
        if (!c.omega(i, k).is_zero()) value += c.omega(i, k) * coordinate_partial(c, xi(k), j);
      }
      out(i, j) = value;
    }
  }
  return out;
}

Check distribution_integrability(const Chart& c, const FieldTensor& xi) {
  const auto w = omega_with(c, xi);
  std::vector<FieldTensor> span;
  for (std::size_t a = 0; a < c.dim(); ++a) {
    for (std::size_t b = a + 1; b < c.dim(); ++b) {
      FieldTensor v = zero_field(c, {Slot::Contravariant});
      v(a) = w[b];
      v(b) = -w[a];
      if (!v.is_zero()) span.push_back(std::move(v));
    }
  }
  const std::string name = "distribution omega(X, xi) = 0 integrable";
  for (std::size_t p = 0; p < span.size(); ++p) {
    for (std::size_t q = p + 1; q < span.size(); ++q) {
      const RF value = omega_of(c, lie_bracket(c, span[p], span[q]), xi);
      if (!value.is_zero()) {
        return {name, false,
                "omega([X" + std::to_string(p + 1) + ", X" + std::to_string(q + 1) + "], xi) = " + value.to_string()};
      }
    }
  }
  return {name, true, std::nullopt};
}

HamiltonianCheck hamiltonian_oneform(const Chart& c, const FieldTensor& xi,
                                     const std::optional<RationalFunction>& candidate) {
  require_vector(xi, c, "xi");
  const std::size_t d = c.dim();
  HamiltonianCheck out;
  out.alpha = FieldTensor(d, {Slot::Covariant});
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      if (!xi(i).is_zero()) out.alpha(j) += xi(i) * c.omega(i, j);
    }
  }
  FieldTensor d_alpha(d, covariant_slots(2));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      d_alpha(i, j) = coordinate_partial(c, out.alpha(j), i) - coordinate_partial(c, out.alpha(i), j);
  out.closed_witness = nonzero_witness(d_alpha);
  out.closed = !out.closed_witness.has_value();
  if (candidate) {
    FieldTensor diff(d, {Slot::Covariant});
    for (std::size_t j = 0; j < d; ++j) diff(j) = coordinate_partial(c, *candidate, j) - out.alpha(j);
    out.candidate_witness = nonzero_witness(diff);
    out.matches_candidate = !out.candidate_witness.has_value();
  }
  return out;
}

ObstructionVerdict metric_obstruction(const PointTensor& s, const PointTensor& omega) {
  const std::size_t d = s.dim();
  if (s.slots() != endomorphism_valued_slots(2) || omega.dim() != d || omega.slots() != covariant_slots(2)) {
    throw SchemaError("metric_obstruction needs a (1,2) tensor and a 2-form of the same dimension");
  }
  // S(i,j,k) = ω_ij ξ^k − δ_ik Σ_l ω_jl ξ^l is linear in ξ.
  RationalMatrix lin(d * d * d, d);
  std::vector<Rational> rhs(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const std::size_t row = (i * d + j) * d + k;
        rhs[row] = s(i, j, k);
        for (std::size_t l = 0; l < d; ++l) {
          Rational coeff = k == l ? omega(i, j) : Rational(0);
          if (i == k) coeff -= omega(j, l);
          lin(row, l) = coeff;
        }
      }
  const auto xi = solve(lin, rhs);
  if (!xi) throw PreconditionError("structure tensor is not of linear type");

  ObstructionVerdict verdict;
  verdict.xi = *xi;
  if (s.is_zero()) {
    verdict.degenerate = true;
    verdict.obstructed = false;
    verdict.determinant = Polynomial(1);
    verdict.summary = "S = 0: degenerate case, any metric satisfies S.g = 0";
    return verdict;
  }

  // Unknowns g_ab with a <= b.
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) unknowns.emplace_back(a, b);
  auto slot = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(std::find(unknowns.begin(), unknowns.end(), std::make_pair(a, b)) -
                                    unknowns.begin());
  };
  // g(S_X Y, Z) + g(Y, S_X Z) = 0 for all basis X, Y, Z.
  RationalMatrix system(d * d * d, unknowns.size());
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        const std::size_t row = (x * d + y) * d + z;
        for (std::size_t m = 0; m < d; ++m) {
          system(row, slot(m, z)) += s(x, y, m);
          system(row, slot(y, m)) += s(x, z, m);
        }
      }
  const auto solutions = nullspace(system);
  verdict.solution_dimension = solutions.size();
  std::vector<std::vector<Polynomial>> g(d, std::vector<Polynomial>(d, Polynomial(0)));
  for (std::size_t p = 0; p < solutions.size(); ++p) {
    const Polynomial t = Polynomial::variable("t" + std::to_string(p + 1));
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        const Rational& coeff = solutions[p][slot(a, b)];
        if (!coeff.is_zero()) g[a][b] += t * coeff;
      }
  }
  verdict.determinant = laplace_determinant(g);
  verdict.obstructed = verdict.determinant.is_zero();
  verdict.summary = verdict.obstructed
                        ? "obstructed: every solution g of S.g = 0 is degenerate (" +
                              std::to_string(verdict.solution_dimension) + "-dimensional solution space)"
                        : "not obstructed: det of the generic solution is " + verdict.determinant.to_string();
  return verdict;
}

RationalMatrix symplectic_basis(const RationalMatrix& omega) {
  const std::size_t d = omega.rows();
  if (d % 2 != 0 || omega.cols() != d) throw PreconditionError("omega must be a square matrix of even size");
  auto form = [&](const Vector& u, const Vector& v) {
    Rational out;
    for (std::size_t a = 0; a < d; ++a) {
      if (u[a].is_zero()) continue;
      for (std::size_t b = 0; b < d; ++b) {
        if (!v[b].is_zero()) out += u[a] * omega(a, b) * v[b];
      }
    }
    return out;
  };
  std::vector<Vector> pool;
  for (std::size_t a = 0; a < d; ++a) {
    Vector e(d);
    e[a] = Rational(1);
    pool.push_back(e);
  }
  std::vector<Vector> es, fs;
  while (!pool.empty()) {
    const Vector u = pool.front();
    std::size_t partner = 1;
    while (partner < pool.size() && form(u, pool[partner]).is_zero()) ++partner;
    if (partner == pool.size()) throw PreconditionError("omega is degenerate");
    const Rational scale = form(u, pool[partner]).inverse();
    Vector f = pool[partner];
    for (auto& v : f) v *= scale;
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(partner));
    pool.erase(pool.begin());
    for (auto& w : pool) {
      const Rational wf = form(w, f);
      const Rational we = form(w, u);
      for (std::size_t a = 0; a < d; ++a) w[a] = w[a] - wf * u[a] + we * f[a];
    }
    pool.erase(std::remove_if(pool.begin(), pool.end(),
                              [](const Vector& v) {
                                return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
                              }),
               pool.end());
    es.push_back(u);
    fs.push_back(std::move(f));
  }
  if (es.size() * 2 != d) throw PreconditionError("omega is degenerate");
  std::vector<Vector> columns = es;
  columns.insert(columns.end(), fs.begin(), fs.end());
  return RationalMatrix::from_columns(d, columns);
}

PointModel model_at_point(const Chart& c, const FieldTensor& s, const Point& p) {
  const std::size_t d = c.dim();
  if (d % 2 != 0) throw PreconditionError("chart dimension must be even");
  const FieldTensor tilde = connection(c, Which::Tilde, s);
  const PointTensor omega_p = evaluate(c.omega, p);
  const PointTensor r_p = evaluate(curvature_of(c, tilde), p);
  const PointTensor t_p = evaluate(torsion_of(tilde), p);
  const PointTensor s_p = evaluate(s, p);

  RationalMatrix om(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) om(a, b) = omega_p(a, b);
  const RationalMatrix basis = symplectic_basis(om);
  const auto to_new = inverse(basis);
  if (!to_new) throw std::logic_error("symplectic basis is singular");

  const SymplecticSpace space(d / 2);
  if (!(push_forward(omega_p, *to_new, basis) == space.omega_tensor())) {
    throw std::logic_error("omega was not brought to standard form");
  }
  PointModel out;
  out.change_of_basis = basis;
  out.model = InfinitesimalModel::make(space, push_forward(r_p, *to_new, basis), push_forward(t_p, *to_new, basis),
                                       {{"S", push_forward(s_p, *to_new, basis)}});
  return out;
}

}  // namespace fedosov
