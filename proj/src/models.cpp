#include "fedosov/models.hpp"

#include "fedosov/errors.hpp"

namespace fedosov {

namespace {

std::string basis_name(std::size_t i) { return "e" + std::to_string(i + 1); }

// out[.., i_p, ..] = Σ_j m(j, i_p) in[.., j, ..] when `transpose`, else Σ_j m(i_p, j) in[.., j, ..].
PointTensor transform_slot(const PointTensor& in, std::size_t slot, const RationalMatrix& m, bool transpose) {
  PointTensor out(in.dim(), in.slots());
  const std::size_t d = in.dim();
  for (std::size_t f = 0; f < in.size(); ++f) {
    const Rational& value = in.data()[f];
    if (value.is_zero()) continue;
    auto idx = in.multi_index(f);
    const std::size_t j = idx[slot];
    for (std::size_t i = 0; i < d; ++i) {
      const Rational& coeff = transpose ? m(j, i) : m(i, j);
      if (coeff.is_zero()) continue;
      idx[slot] = i;
      out.at(idx) += coeff * value;
    }
  }
  return out;
}

std::optional<std::string> first_difference(const PointTensor& a, const PointTensor& b) {
  return nonzero_witness(a - b);
}

void require_dim(const PointTensor& t, std::size_t d, std::size_t order, const char* what) {
  if (t.dim() != d || t.order() != order) throw SchemaError(std::string(what) + " has the wrong shape");
}

Endomorphism commutator(const Endomorphism& a, const Endomorphism& b) { return a * b - b * a; }

}  // namespace

InfinitesimalModel InfinitesimalModel::make(const SymplecticSpace& space, PointTensor curvature, PointTensor torsion,
                                            std::vector<AuxTensor> extra) {
  require_dim(curvature, space.dim(), 4, "curvature");
  require_dim(torsion, space.dim(), 3, "torsion");
  InfinitesimalModel m;
  m.space = space;
  m.curvature = std::move(curvature);
  m.torsion = std::move(torsion);
  m.aux.push_back({"omega", space.omega_tensor()});
  for (auto& a : extra) {
    if (a.value.dim() != space.dim()) throw SchemaError("auxiliary tensor '" + a.name + "' has the wrong dimension");
    m.aux.push_back(std::move(a));
  }
  return m;
}

InfinitesimalModel InfinitesimalModel::trivial(std::size_t n) {
  const SymplecticSpace v(n);
  return make(v, zero_curvature(v.dim()), zero_torsion(v.dim()));
}

PointTensor zero_curvature(std::size_t dim) { return PointTensor(dim, endomorphism_valued_slots(3)); }
PointTensor zero_torsion(std::size_t dim) { return PointTensor(dim, endomorphism_valued_slots(2)); }

Endomorphism curvature_endomorphism(const PointTensor& r, const Vector& x, const Vector& y) {
  const std::size_t d = r.dim();
  Endomorphism a(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      const Rational w = x[i] * y[j];
      for (std::size_t l = 0; l < d; ++l) {
        for (std::size_t k = 0; k < d; ++k) {
          if (!r(i, j, l, k).is_zero()) a(k, l) += w * r(i, j, l, k);
        }
      }
    }
  }
  return a;
}

Endomorphism curvature_endomorphism(const PointTensor& r, std::size_t x, std::size_t y) {
  const std::size_t d = r.dim();
  Endomorphism a(d, d);
  for (std::size_t l = 0; l < d; ++l) {
    for (std::size_t k = 0; k < d; ++k) a(k, l) = r(x, y, l, k);
  }
  return a;
}

Endomorphism slot_endomorphism(const PointTensor& s, const Vector& x) {
  const std::size_t d = s.dim();
  Endomorphism a(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t l = 0; l < d; ++l) {
      for (std::size_t k = 0; k < d; ++k) a(k, l) += x[i] * s(i, l, k);
    }
  }
  return a;
}

PointTensor derivation_action(const Endomorphism& a, const PointTensor& k) {
  PointTensor out(k.dim(), k.slots());
  for (std::size_t p = 0; p < k.order(); ++p) {
    if (k.slots()[p] == Slot::Contravariant) {
      out += transform_slot(k, p, a, false);
    } else {
      out -= transform_slot(k, p, a, true);
    }
  }
  return out;
}

PointTensor push_forward(const PointTensor& k, const RationalMatrix& f, const RationalMatrix& f_inverse) {
  PointTensor out = k;
  for (std::size_t p = 0; p < k.order(); ++p) {
    out = k.slots()[p] == Slot::Contravariant ? transform_slot(out, p, f, false)
                                              : transform_slot(out, p, f_inverse, true);
  }
  return out;
}

VerificationReport check_model_axioms(const InfinitesimalModel& m) {
  const std::size_t d = m.space.dim();
  const PointTensor& r = m.curvature;
  const PointTensor& t = m.torsion;
  VerificationReport report;

  std::optional<std::string> w;
  for (std::size_t x = 0; x < d && !w; ++x) {
    for (std::size_t y = 0; y < d && !w; ++y) {
      for (std::size_t k = 0; k < d && !w; ++k) {
        if (!(t(x, y, k) + t(y, x, k)).is_zero()) {
          w = "X=" + basis_name(x) + ", Y=" + basis_name(y) + ": component " + std::to_string(k + 1) + " = " +
              (t(x, y, k) + t(y, x, k)).to_string();
        }
      }
    }
  }
  report.add_zero("torsion antisymmetric", w);

  w.reset();
  for (std::size_t x = 0; x < d && !w; ++x) {
    for (std::size_t y = 0; y < d && !w; ++y) {
      const auto diff = curvature_endomorphism(r, x, y) + curvature_endomorphism(r, y, x);
      if (!diff.is_zero()) w = "X=" + basis_name(x) + ", Y=" + basis_name(y) + ": R_XY + R_YX is nonzero";
    }
  }
  report.add_zero("curvature antisymmetric", w);

  // Derivation conditions for every curvature endomorphism.
  auto derivation_check = [&](const std::string& name, const PointTensor& target) {
    std::optional<std::string> witness;
    for (std::size_t x = 0; x < d && !witness; ++x) {
      for (std::size_t y = x + 1; y < d && !witness; ++y) {
        if (auto c = nonzero_witness(derivation_action(curvature_endomorphism(r, x, y), target))) {
          witness = "X=" + basis_name(x) + ", Y=" + basis_name(y) + ": " + *c;
        }
      }
    }
    report.add_zero(name, witness);
  };
  derivation_check("curvature annihilates torsion", t);
  derivation_check("curvature annihilates curvature", r);

  // 𝔖 (R̃_{XY}Z + T̃_{T̃_X Y}Z) = 0 and 𝔖 R̃_{T̃_X Y, Z} = 0
  w.reset();
  std::optional<std::string> w8;
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      for (std::size_t z = 0; z < d; ++z) {
        const std::size_t cyc[3][3] = {{x, y, z}, {y, z, x}, {z, x, y}};
        if (!w) {
          std::vector<Rational> sum(d);
          for (const auto& c : cyc) {
            for (std::size_t mi = 0; mi < d; ++mi) {
              sum[mi] += r(c[0], c[1], c[2], mi);
              for (std::size_t k = 0; k < d; ++k) sum[mi] += t(c[0], c[1], k) * t(k, c[2], mi);
            }
          }
          for (std::size_t mi = 0; mi < d && !w; ++mi) {
            if (!sum[mi].is_zero()) {
              w = "X=" + basis_name(x) + ", Y=" + basis_name(y) + ", Z=" + basis_name(z) + ": component " +
                  std::to_string(mi + 1) + " = " + sum[mi].to_string();
            }
          }
        }
        if (!w8) {
          Endomorphism sum(d, d);
          for (const auto& c : cyc) {
            Vector txy(d);
            for (std::size_t k = 0; k < d; ++k) txy[k] = t(c[0], c[1], k);
            sum = sum + curvature_endomorphism(r, txy, m.space.basis_vector(c[2]));
          }
          if (!sum.is_zero()) {
            w8 = "X=" + basis_name(x) + ", Y=" + basis_name(y) + ", Z=" + basis_name(z) + ": cyclic sum is nonzero";
          }
        }
      }
    }
  }
  report.add_zero("first Bianchi identity", w);
  report.add_zero("second Bianchi identity", w8);

  for (const auto& a : m.aux) derivation_check("curvature annihilates " + a.name, a.value);
  return report;
}

CurvatureTorsion model_from_pair(const PointTensor& r, const PointTensor& t, const PointTensor& s) {
  const std::size_t d = s.dim();
  require_dim(r, d, 4, "curvature");
  require_dim(t, d, 3, "torsion");
  require_dim(s, d, 3, "structure tensor");
  CurvatureTorsion out{r, t};
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      for (std::size_t k = 0; k < d; ++k) out.torsion(x, y, k) -= s(x, y, k) - s(y, x, k);
    }
  }
  std::vector<Endomorphism> sx;
  for (std::size_t x = 0; x < d; ++x) {
    Vector e(d);
    e[x] = Rational(1);
    sx.push_back(slot_endomorphism(s, e));
  }
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      Vector txy(d);
      for (std::size_t k = 0; k < d; ++k) txy[k] = out.torsion(x, y, k);
      const Endomorphism extra = commutator(sx[x], sx[y]) + slot_endomorphism(s, txy);
      for (std::size_t z = 0; z < d; ++z) {
        for (std::size_t mi = 0; mi < d; ++mi) out.curvature(x, y, z, mi) += extra(mi, z);
      }
    }
  }
  return out;
}

CurvatureTorsion pair_from_model(const PointTensor& r_tilde, const PointTensor& t_tilde, const PointTensor& s) {
  const std::size_t d = s.dim();
  require_dim(r_tilde, d, 4, "curvature");
  require_dim(t_tilde, d, 3, "torsion");
  require_dim(s, d, 3, "structure tensor");
  CurvatureTorsion out{r_tilde, t_tilde};
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      for (std::size_t k = 0; k < d; ++k) out.torsion(x, y, k) += s(x, y, k) - s(y, x, k);
    }
  }
  std::vector<Endomorphism> sx;
  for (std::size_t x = 0; x < d; ++x) {
    Vector e(d);
    e[x] = Rational(1);
    sx.push_back(slot_endomorphism(s, e));
  }
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      Vector txy(d);
      for (std::size_t k = 0; k < d; ++k) txy[k] = t_tilde(x, y, k);
      const Endomorphism extra = commutator(sx[x], sx[y]) + slot_endomorphism(s, txy);
      for (std::size_t z = 0; z < d; ++z) {
        for (std::size_t mi = 0; mi < d; ++mi) out.curvature(x, y, z, mi) -= extra(mi, z);
      }
    }
  }
  return out;
}

IsomorphismReport verify_model_isomorphism(const RationalMatrix& f, const InfinitesimalModel& m,
                                           const InfinitesimalModel& m_prime) {
  const std::size_t d = m.space.dim();
  if (m_prime.space.dim() != d || f.rows() != d || f.cols() != d) {
    throw PreconditionError("dimensions of the map and the models do not match");
  }
  const auto f_inverse = inverse(f);
  if (!f_inverse) throw PreconditionError("the linear map is singular");
  IsomorphismReport result;
  result.report.add_zero("curvature", first_difference(push_forward(m.curvature, f, *f_inverse), m_prime.curvature));
  result.report.add_zero("torsion", first_difference(push_forward(m.torsion, f, *f_inverse), m_prime.torsion));
  if (m.aux.size() != m_prime.aux.size()) {
    result.report.add("auxiliary tensors", false,
                      "models carry " + std::to_string(m.aux.size()) + " and " + std::to_string(m_prime.aux.size()) +
                          " auxiliary tensors");
  } else {
    for (std::size_t i = 0; i < m.aux.size(); ++i) {
      const PointTensor pushed = push_forward(m.aux[i].value, f, *f_inverse);
      const std::string name = "aux " + m.aux[i].name;
      if (!pushed.same_shape(m_prime.aux[i].value)) {
        result.report.add(name, false, "valences differ");
      } else {
        result.report.add_zero(name, first_difference(pushed, m_prime.aux[i].value));
      }
    }
  }
  for (const auto& a : m.aux) {
    if (a.name == "omega") result.symplectic = is_symplectic_matrix(m.space, f);
  }
  return result;
}

std::vector<Rational> flatten(const Endomorphism& a) {
  std::vector<Rational> out;
  out.reserve(a.rows() * a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.push_back(a(r, c));
  }
  return out;
}

bool endomorphism_span_contains(const std::vector<Endomorphism>& space, const std::vector<Endomorphism>& sub) {
  if (sub.empty()) return true;
  const std::size_t rows = sub.front().rows() * sub.front().cols();
  std::vector<std::vector<Rational>> a, b;
  for (const auto& e : space) a.push_back(flatten(e));
  for (const auto& e : sub) b.push_back(flatten(e));
  if (a.empty()) {
    for (const auto& e : sub) {
      if (!e.is_zero()) return false;
    }
    return true;
  }
  return column_span_contains(RationalMatrix::from_columns(rows, a), RationalMatrix::from_columns(rows, b));
}

std::vector<Endomorphism> nomizu_h0(const InfinitesimalModel& m) {
  const std::size_t d = m.space.dim();
  std::vector<const PointTensor*> targets{&m.curvature, &m.torsion};
  for (const auto& a : m.aux) targets.push_back(&a.value);
  std::vector<std::vector<Rational>> columns;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t l = 0; l < d; ++l) {
      Endomorphism e(d, d);
      e(a, l) = Rational(1);
      std::vector<Rational> column;
      for (const auto* k : targets) {
        const PointTensor action = derivation_action(e, *k);
        const auto& data = action.data();
        column.insert(column.end(), data.begin(), data.end());
      }
      columns.push_back(std::move(column));
    }
  }
  std::vector<Endomorphism> basis;
  for (const auto& v : nullspace(RationalMatrix::from_columns(columns.front().size(), columns))) {
    Endomorphism e(d, d);
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t l = 0; l < d; ++l) e(a, l) = v[a * d + l];
    }
    for (const auto* k : targets) {
      if (!derivation_action(e, *k).is_zero()) throw std::logic_error("nomizu_h0 produced a non-annihilating element");
    }
    basis.push_back(std::move(e));
  }
  return basis;
}

LieAlgebraPresentation presentation_on(const InfinitesimalModel& m, const std::vector<Endomorphism>& h,
                                       const std::string& h_name) {
  const std::size_t d = m.space.dim();
  const std::size_t hm = h.size();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back(basis_name(i));
  for (std::size_t i = 0; i < hm; ++i) labels.push_back("h" + std::to_string(i + 1));
  LieAlgebraPresentation p(labels);
  std::vector<std::size_t> v_idx, h_idx;
  for (std::size_t i = 0; i < d; ++i) v_idx.push_back(i);
  for (std::size_t i = 0; i < hm; ++i) h_idx.push_back(d + i);
  p.subspaces()["V"] = v_idx;
  p.subspaces()[h_name] = h_idx;

  std::vector<std::vector<Rational>> hcols;
  for (const auto& e : h) hcols.push_back(flatten(e));
  const RationalMatrix hmat = hm ? RationalMatrix::from_columns(d * d, hcols) : RationalMatrix(d * d, 0);
  auto h_coords = [&](const Endomorphism& e, const std::string& what) -> std::vector<Rational> {
    if (hm == 0) {
      if (!e.is_zero()) throw PreconditionError(what + " is not in " + h_name);
      return {};
    }
    auto x = solve(hmat, flatten(e));
    if (!x) throw PreconditionError(what + " is not in " + h_name);
    return *x;
  };

  const std::size_t total = d + hm;
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = x + 1; y < d; ++y) {
      std::vector<Rational> value(total);
      for (std::size_t k = 0; k < d; ++k) value[k] = -m.torsion(x, y, k);
      const auto coords =
          h_coords(curvature_endomorphism(m.curvature, x, y), "R_{" + basis_name(x) + basis_name(y) + "}");
      for (std::size_t j = 0; j < hm; ++j) value[d + j] = coords[j];
      p.set_bracket(x, y, value);
    }
  }
  for (std::size_t a = 0; a < hm; ++a) {
    for (std::size_t x = 0; x < d; ++x) {
      std::vector<Rational> value(total);
      for (std::size_t k = 0; k < d; ++k) value[k] = h[a](k, x);
      p.set_bracket(d + a, x, value);
    }
    for (std::size_t b = a + 1; b < hm; ++b) {
      std::vector<Rational> value(total);
      const auto coords = h_coords(commutator(h[a], h[b]), "a commutator");
      for (std::size_t j = 0; j < hm; ++j) value[d + j] = coords[j];
      p.set_bracket(d + a, d + b, value);
    }
  }
  return p;
}

NomizuAlgebra nomizu_algebra(const InfinitesimalModel& m) {
  NomizuAlgebra out;
  out.h = nomizu_h0(m);
  out.algebra = presentation_on(m, out.h, "h0");
  return out;
}

TransvectionAlgebra transvection_algebra(const InfinitesimalModel& m) {
  const std::size_t d = m.space.dim();
  TransvectionAlgebra out;
  auto try_add = [&](const Endomorphism& e) {
    if (e.is_zero() || endomorphism_span_contains(out.h, {e})) return false;
    out.h.push_back(e);
    return true;
  };
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = x + 1; y < d; ++y) try_add(curvature_endomorphism(m.curvature, x, y));
  }
  bool grew = true;
  std::size_t rounds = 0;
  while (grew) {
    if (++rounds > d * d + 1) throw std::logic_error("Lie closure did not stabilise");
    grew = false;
    const std::size_t count = out.h.size();
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = a + 1; b < count; ++b) grew = try_add(commutator(out.h[a], out.h[b])) || grew;
    }
  }
  out.contained_in_h0 = endomorphism_span_contains(nomizu_h0(m), out.h);
  out.algebra = presentation_on(m, out.h, "h0'");
  return out;
}

}  // namespace fedosov
