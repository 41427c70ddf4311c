#include "fedosov/decomposition.hpp"

#include <functional>
#include <memory>
#include <mutex>

#include "fedosov/errors.hpp"

namespace fedosov {

namespace {

using Coords = std::vector<Rational>;

// Index of the unordered pair (a, b) in the reduced layout.
std::size_t pair_index(AmbientSpace space, std::size_t d, std::size_t a, std::size_t b) {
  // Pairs are enumerated row by row: (0,0),(0,1),...,(0,d-1),(1,1),... for
  // the symmetric case and (0,1),...,(0,d-1),(1,2),... for the antisymmetric one.
  if (space == AmbientSpace::Cotorsion) return a * d - a * (a - 1) / 2 + (b - a);
  return a * (d - 1) - a * (a - 1) / 2 + (b - a - 1);
}

std::size_t pair_count(AmbientSpace space, std::size_t d) {
  return space == AmbientSpace::Cotorsion ? d * (d + 1) / 2 : d * (d - 1) / 2;
}

template <class F>
PointTensor make3(const SymplecticSpace& v, F&& f) {
  PointTensor t = v.zero3();
  const std::size_t d = v.dim();
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      for (std::size_t z = 0; z < d; ++z) t(x, y, z) = f(x, y, z);
    }
  }
  return t;
}

// ω(e_a, U) for a vector U.
std::vector<Rational> omega_with(const SymplecticSpace& v, const Vector& u) {
  std::vector<Rational> out(v.dim());
  for (std::size_t a = 0; a < v.dim(); ++a) out[a] = v.omega(a, v.partner(a)) * u[v.partner(a)];
  return out;
}

RationalMatrix columns_matrix(std::size_t rows, const std::vector<Coords>& columns) {
  return RationalMatrix::from_columns(rows, columns);
}

// Greedy independent subset of the generated tensors.
std::vector<PointTensor> independent_subset(AmbientSpace space, const std::vector<PointTensor>& candidates) {
  std::vector<PointTensor> kept;
  std::vector<Coords> columns;
  std::size_t current = 0;
  for (const auto& c : candidates) {
    auto coords = to_reduced(space, c);
    columns.push_back(coords);
    const std::size_t r = rank(columns_matrix(coords.size(), columns));
    if (r > current) {
      current = r;
      kept.push_back(c);
    } else {
      columns.pop_back();
    }
  }
  return kept;
}

// Matrix of a linear functional family, evaluated on the reduced basis.
RationalMatrix condition_matrix(AmbientSpace space, std::size_t n,
                                const std::function<Coords(const PointTensor&)>& conditions) {
  const std::size_t dim = ambient_dimension(space, n);
  std::vector<Coords> columns;
  columns.reserve(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Coords unit(dim);
    unit[j] = Rational(1);
    columns.push_back(conditions(from_reduced(space, n, unit)));
  }
  return columns_matrix(columns.front().size(), columns);
}

// Independent components of the cyclic sum: one per multiset (cotorsion)
// or strictly increasing triple (torsion).
Coords cyclic_rows(AmbientSpace space, const PointTensor& t) {
  const std::size_t d = t.dim();
  Coords out;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a; b < d; ++b) {
      for (std::size_t c = b; c < d; ++c) {
        if (space == AmbientSpace::Torsion && (a == b || b == c)) continue;
        out.push_back(t(a, b, c) + t(b, c, a) + t(c, a, b));
      }
    }
  }
  return out;
}

Coords concat(Coords a, const Coords& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<PointTensor> from_nullspace(AmbientSpace space, std::size_t n, const RationalMatrix& m) {
  std::vector<PointTensor> out;
  for (const auto& v : nullspace(m)) out.push_back(from_reduced(space, n, v));
  return out;
}

// Totally antisymmetric tensor with value 1 at (a, b, c), a < b < c.
PointTensor antisymmetric_unit(const SymplecticSpace& v, std::size_t a, std::size_t b, std::size_t c) {
  PointTensor t = v.zero3();
  t(a, b, c) = t(b, c, a) = t(c, a, b) = Rational(1);
  t(b, a, c) = t(a, c, b) = t(c, b, a) = Rational(-1);
  return t;
}

PointTensor symmetric_unit(const SymplecticSpace& v, std::size_t a, std::size_t b, std::size_t c) {
  PointTensor t = v.zero3();
  t(a, b, c) = t(b, c, a) = t(c, a, b) = Rational(1);
  t(b, a, c) = t(a, c, b) = t(c, b, a) = Rational(1);
  return t;
}

SubmoduleBasis compute_basis(SubmoduleLabel label, std::size_t n) {
  const SymplecticSpace v(n);
  const std::size_t d = v.dim();
  const AmbientSpace space = ambient_of(label);
  SubmoduleBasis basis{label, n, {}};

  auto from_generator = [&](PointTensor (*gen)(const SymplecticSpace&, const Vector&)) {
    std::vector<PointTensor> candidates;
    for (std::size_t k = 0; k < d; ++k) candidates.push_back(gen(v, v.basis_vector(k)));
    return independent_subset(space, candidates);
  };

  switch (label) {
    case SubmoduleLabel::S1:
      basis.elements = from_generator(&s1_generator);
      break;
    case SubmoduleLabel::T1:
      basis.elements = from_generator(&t1_generator);
      break;
    case SubmoduleLabel::T3:
      basis.elements = from_generator(&t3_generator);
      break;
    case SubmoduleLabel::W:
      basis.elements = from_generator(&w_generator);
      break;
    case SubmoduleLabel::S3:
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a; b < d; ++b) {
          for (std::size_t c = b; c < d; ++c) basis.elements.push_back(symmetric_unit(v, a, b, c));
        }
      }
      break;
    case SubmoduleLabel::S2:
      basis.elements = from_nullspace(space, n, condition_matrix(space, n, [&](const PointTensor& s) {
        return concat(cyclic_rows(space, s), contract_s13(v, s));
      }));
      break;
    case SubmoduleLabel::T2:
      basis.elements = from_nullspace(space, n, condition_matrix(space, n, [&](const PointTensor& t) {
        return concat(cyclic_rows(space, t), contract_t12(v, t));
      }));
      break;
    case SubmoduleLabel::T4: {
      std::vector<PointTensor> units;
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a + 1; b < d; ++b) {
          for (std::size_t c = b + 1; c < d; ++c) units.push_back(antisymmetric_unit(v, a, b, c));
        }
      }
      if (units.empty()) break;
      std::vector<Coords> columns;
      for (const auto& u : units) columns.push_back(contract_t12(v, u));
      for (const auto& coeffs : nullspace(columns_matrix(d, columns))) {
        PointTensor t = v.zero3();
        for (std::size_t j = 0; j < units.size(); ++j) {
          if (!coeffs[j].is_zero()) t += coeffs[j] * units[j];
        }
        basis.elements.push_back(std::move(t));
      }
      break;
    }
  }
  return basis;
}

// Inverse of the concatenated summand basis of one ambient space.
struct Decomposer {
  AmbientSpace space;
  std::size_t n;
  std::vector<SubmoduleLabel> owner;  // label of each column
  std::vector<Coords> columns;
  RationalMatrix inverse;
};

const Decomposer& decomposer_for(AmbientSpace space, std::size_t n) {
  static std::mutex mutex;
  static std::map<std::pair<AmbientSpace, std::size_t>, std::unique_ptr<Decomposer>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({space, n});
    if (it != cache.end()) return *it->second;
  }
  auto dec = std::make_unique<Decomposer>();
  dec->space = space;
  dec->n = n;
  for (auto label : summand_labels(space)) {
    for (const auto& e : build_basis(label, n).elements) {
      dec->owner.push_back(label);
      dec->columns.push_back(to_reduced(space, e));
    }
  }
  const std::size_t dim = ambient_dimension(space, n);
  if (dec->columns.size() != dim) {
    throw std::logic_error("summand bases do not match the ambient dimension");
  }
  auto inv = fedosov::inverse(columns_matrix(dim, dec->columns));
  if (!inv) throw std::logic_error("summand bases are linearly dependent");
  dec->inverse = std::move(*inv);
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.emplace(std::make_pair(space, n), std::move(dec)).first;
  return *it->second;
}

}  // namespace

std::string to_string(SubmoduleLabel label) {
  switch (label) {
    case SubmoduleLabel::S1: return "S1";
    case SubmoduleLabel::S2: return "S2";
    case SubmoduleLabel::S3: return "S3";
    case SubmoduleLabel::T1: return "T1";
    case SubmoduleLabel::T2: return "T2";
    case SubmoduleLabel::T3: return "T3";
    case SubmoduleLabel::T4: return "T4";
    case SubmoduleLabel::W: return "W";
  }
  return "?";
}

std::optional<SubmoduleLabel> parse_submodule_label(const std::string& text) {
  for (auto label : {SubmoduleLabel::S1, SubmoduleLabel::S2, SubmoduleLabel::S3, SubmoduleLabel::T1,
                     SubmoduleLabel::T2, SubmoduleLabel::T3, SubmoduleLabel::T4, SubmoduleLabel::W}) {
    if (to_string(label) == text) return label;
  }
  return std::nullopt;
}

AmbientSpace ambient_of(SubmoduleLabel label) {
  switch (label) {
    case SubmoduleLabel::S1:
    case SubmoduleLabel::S2:
    case SubmoduleLabel::S3:
      return AmbientSpace::Cotorsion;
    default:
      return AmbientSpace::Torsion;
  }
}

const std::vector<SubmoduleLabel>& summand_labels(AmbientSpace space) {
  static const std::vector<SubmoduleLabel> s{SubmoduleLabel::S1, SubmoduleLabel::S2, SubmoduleLabel::S3};
  static const std::vector<SubmoduleLabel> t{SubmoduleLabel::T1, SubmoduleLabel::T2, SubmoduleLabel::T3,
                                             SubmoduleLabel::T4};
  return space == AmbientSpace::Cotorsion ? s : t;
}

std::size_t ambient_dimension(AmbientSpace space, std::size_t n) {
  const std::size_t d = 2 * n;
  return d * pair_count(space, d);
}

std::vector<Rational> to_reduced(AmbientSpace space, const PointTensor& t) {
  const std::size_t d = t.dim();
  std::vector<Rational> out(d * pair_count(space, d));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = (space == AmbientSpace::Cotorsion ? a : a + 1); b < d; ++b) {
      const std::size_t p = pair_index(space, d, a, b);
      for (std::size_t c = 0; c < d; ++c) out[p * d + c] = t(a, b, c);
    }
  }
  return out;
}

PointTensor from_reduced(AmbientSpace space, std::size_t n, const std::vector<Rational>& coords) {
  const std::size_t d = 2 * n;
  if (coords.size() != ambient_dimension(space, n)) throw SchemaError("reduced coordinate length mismatch");
  PointTensor t(d, covariant_slots(3));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = (space == AmbientSpace::Cotorsion ? a : a + 1); b < d; ++b) {
      const std::size_t p = pair_index(space, d, a, b);
      for (std::size_t c = 0; c < d; ++c) {
        const Rational& value = coords[p * d + c];
        if (value.is_zero()) continue;
        t(a, b, c) = value;
        t(b, a, c) = space == AmbientSpace::Cotorsion ? value : -value;
      }
    }
  }
  return t;
}

void require_in_ambient(AmbientSpace space, const SymplecticSpace& v, const PointTensor& t) {
  if (t.dim() != v.dim() || t.order() != 3) {
    throw SchemaError("expected a (0,3) tensor of dimension " + std::to_string(v.dim()));
  }
  if (space == AmbientSpace::Cotorsion && !is_symmetric_in(t, 0, 1)) {
    throw PreconditionError("tensor is not symmetric in its first two slots");
  }
  if (space == AmbientSpace::Torsion && !is_antisymmetric_in(t, 0, 1)) {
    throw PreconditionError("tensor is not antisymmetric in its first two slots");
  }
}

PointTensor s1_generator(const SymplecticSpace& v, const Vector& u) {
  const auto wu = omega_with(v, u);
  return make3(v, [&](std::size_t x, std::size_t y, std::size_t z) {
    return v.omega(z, y) * wu[x] + v.omega(z, x) * wu[y];
  });
}

PointTensor t1_generator(const SymplecticSpace& v, const Vector& u) {
  const auto wu = omega_with(v, u);
  return make3(v, [&](std::size_t x, std::size_t y, std::size_t z) {
    return Rational(2) * v.omega(x, y) * wu[z] + v.omega(x, z) * wu[y] - v.omega(y, z) * wu[x];
  });
}

PointTensor t3_generator(const SymplecticSpace& v, const Vector& u) {
  const auto wu = omega_with(v, u);
  // ω_{UZ} = −ω(e_z, U)
  return make3(v, [&](std::size_t x, std::size_t y, std::size_t z) {
    return -(v.omega(x, y) * wu[z] + v.omega(y, z) * wu[x] + v.omega(z, x) * wu[y]);
  });
}

PointTensor w_generator(const SymplecticSpace& v, const Vector& u) {
  const auto wu = omega_with(v, u);
  const Rational n(static_cast<long>(v.half_dim()));
  return make3(v, [&](std::size_t x, std::size_t y, std::size_t z) {
    return v.omega(x, y) * wu[z] - n * v.omega(x, z) * wu[y] + n * v.omega(y, z) * wu[x];
  });
}

const SubmoduleBasis& build_basis(SubmoduleLabel label, std::size_t n) {
  if (n == 0) throw PreconditionError("n must be at least 1");
  static std::mutex mutex;
  static std::map<std::pair<SubmoduleLabel, std::size_t>, std::unique_ptr<SubmoduleBasis>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({label, n});
    if (it != cache.end()) return *it->second;
  }
  auto basis = std::make_unique<SubmoduleBasis>(compute_basis(label, n));
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.emplace(std::make_pair(label, n), std::move(basis)).first;
  return *it->second;
}

std::vector<Rational> summand_coordinates(AmbientSpace space, const PointTensor& t, std::size_t n) {
  require_in_ambient(space, SymplecticSpace(n), t);
  const Decomposer& dec = decomposer_for(space, n);
  return dec.inverse * to_reduced(space, t);
}

DecompositionResult decompose(AmbientSpace space, const PointTensor& t, std::size_t n) {
  const auto coeffs = summand_coordinates(space, t, n);
  const Decomposer& dec = decomposer_for(space, n);
  const std::size_t dim = coeffs.size();
  std::map<SubmoduleLabel, Coords> parts;
  for (auto label : summand_labels(space)) parts[label] = Coords(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    if (coeffs[j].is_zero()) continue;
    Coords& part = parts[dec.owner[j]];
    const Coords& column = dec.columns[j];
    for (std::size_t r = 0; r < dim; ++r) {
      if (!column[r].is_zero()) part[r] += coeffs[j] * column[r];
    }
  }
  DecompositionResult result;
  for (auto& [label, coords] : parts) {
    PointTensor part = from_reduced(space, n, coords);
    if (!part.is_zero()) result.type_set.insert(label);
    result.parts.emplace(label, std::move(part));
  }
  return result;
}

DecompositionResult decompose_cotorsion(const PointTensor& s, std::size_t n) {
  return decompose(AmbientSpace::Cotorsion, s, n);
}

DecompositionResult decompose_torsion(const PointTensor& t, std::size_t n) {
  return decompose(AmbientSpace::Torsion, t, n);
}

bool satisfies_class_predicate(SubmoduleLabel label, const PointTensor& t, std::size_t n) {
  const SymplecticSpace v(n);
  const AmbientSpace space = ambient_of(label);
  if (t.dim() != v.dim() || t.order() != 3) return false;
  const bool in_ambient =
      space == AmbientSpace::Cotorsion ? is_symmetric_in(t, 0, 1) : is_antisymmetric_in(t, 0, 1);
  if (!in_ambient) return false;
  auto zero_covector = [](const Covector& c) {
    for (const auto& x : c) {
      if (!x.is_zero()) return false;
    }
    return true;
  };
  switch (label) {
    case SubmoduleLabel::S2:
      return cyclic_sum(t).is_zero() && zero_covector(contract_s13(v, t));
    case SubmoduleLabel::S3:
      return is_totally_symmetric3(t);
    case SubmoduleLabel::T2:
      return cyclic_sum(t).is_zero() && zero_covector(contract_t12(v, t));
    case SubmoduleLabel::T4:
      return is_antisymmetric_in(t, 1, 2) && zero_covector(contract_t12(v, t));
    case SubmoduleLabel::W: {
      std::vector<Coords> columns;
      for (const auto& e : build_basis(label, n).elements) columns.push_back(to_reduced(space, e));
      const std::size_t rows = ambient_dimension(space, n);
      RationalMatrix sub = columns_matrix(rows, {to_reduced(space, t)});
      if (columns.empty()) return t.is_zero();
      return column_span_contains(columns_matrix(rows, columns), sub);
    }
    default: {
      const auto coeffs = summand_coordinates(space, t, n);
      const Decomposer& dec = decomposer_for(space, n);
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (dec.owner[j] != label && !coeffs[j].is_zero()) return false;
      }
      return true;
    }
  }
}

PointTensor map_A2(const PointTensor& s) {
  if (s.order() != 3) throw SchemaError("map_A2 expects a (0,3) tensor");
  PointTensor out(s.dim(), s.slots());
  const std::size_t d = s.dim();
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      for (std::size_t z = 0; z < d; ++z) out(x, y, z) = s(y, z, x) - s(x, z, y);
    }
  }
  return out;
}

PointTensor map_A3(const PointTensor& t) { return cyclic_sum(t); }

Covector map_C(const SymplecticSpace& v, const PointTensor& t) {
  if (t.dim() != v.dim() || t.order() != 3) throw SchemaError("map_C expects a (0,3) tensor");
  const std::size_t n = v.half_dim();
  Covector out(v.dim());
  for (std::size_t k = 0; k < v.dim(); ++k) {
    for (std::size_t i = 0; i < n; ++i) out[k] += t(i, i + n, k) + t(k, i, i + n) + t(i + n, k, i);
  }
  return out;
}

PointTensor map_eta(const SymplecticSpace& v, const Covector& u_star) {
  if (u_star.size() != v.dim()) throw SchemaError("covector length does not match the space");
  const std::size_t n = v.half_dim();
  // (α∧β∧γ)(e_x, e_y, e_z) is the 3×3 determinant of the evaluations.
  auto det3 = [](const Rational m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  return make3(v, [&](std::size_t x, std::size_t y, std::size_t z) {
    Rational sum;
    const std::size_t idx[3] = {x, y, z};
    for (std::size_t i = 0; i < n; ++i) {
      Rational m[3][3];
      for (int col = 0; col < 3; ++col) {
        m[0][col] = idx[col] == i ? Rational(1) : Rational(0);
        m[1][col] = idx[col] == i + n ? Rational(1) : Rational(0);
        m[2][col] = u_star[idx[col]];
      }
      sum += det3(m);
    }
    return sum;
  });
}

Covector map_phi(const SymplecticSpace& v, const PointTensor& s) { return contract_s13(v, s); }

PointTensor map_pi(const PointTensor& s) { return cyclic_sum(s); }

PointTensor xi_embed(const SymplecticSpace& v, const Covector& w_star) {
  if (w_star.size() != v.dim()) throw SchemaError("covector length does not match the space");
  // ω(W, e_y) = W*(e_y) for W = sharp(W*).
  const Rational scale = Rational(1) / Rational(static_cast<long>(2 * v.half_dim() + 1));
  return make3(v, [&](std::size_t x, std::size_t y, std::size_t z) {
    return scale * (v.omega(z, x) * w_star[y] + v.omega(z, y) * w_star[x]);
  });
}

PointTensor symplectify_torsion(const PointTensor& t, std::size_t n) {
  const SymplecticSpace v(n);
  require_in_ambient(AmbientSpace::Torsion, v, t);
  std::vector<PointTensor> candidates;
  for (auto label : {SubmoduleLabel::S1, SubmoduleLabel::S2}) {
    for (const auto& e : build_basis(label, n).elements) candidates.push_back(e);
  }
  const std::size_t rows = ambient_dimension(AmbientSpace::Torsion, n);
  if (candidates.empty()) {
    if (t.is_zero()) return v.zero3();
    throw NoSolutionError("torsion tensor is not in T1 + T2");
  }
  std::vector<Coords> columns;
  for (const auto& s : candidates) columns.push_back(to_reduced(AmbientSpace::Torsion, map_A2(-s)));
  auto x = solve(columns_matrix(rows, columns), to_reduced(AmbientSpace::Torsion, t));
  if (!x) throw NoSolutionError("torsion tensor is not in T1 + T2");
  PointTensor s = v.zero3();
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    if (!(*x)[j].is_zero()) s += (*x)[j] * candidates[j];
  }
  return s;
}

long closed_form_dimension(SubmoduleLabel label, std::size_t n_unsigned) {
  const long n = static_cast<long>(n_unsigned);
  switch (label) {
    case SubmoduleLabel::S1:
    case SubmoduleLabel::T1:
    case SubmoduleLabel::T3:
    case SubmoduleLabel::W:
      return 2 * n;
    case SubmoduleLabel::S2:
    case SubmoduleLabel::T2:
      return 8 * (n * n * n - n) / 3;
    case SubmoduleLabel::S3: {
      const long m = 2 * n + 2;
      return m * (m - 1) * (m - 2) / 6;
    }
    case SubmoduleLabel::T4:
      return 2 * n * (2 * n * n - 3 * n - 2) / 3;
  }
  return 0;
}

std::vector<DimensionRow> dimension_table(std::size_t n_max) {
  if (n_max == 0) throw PreconditionError("n_max must be at least 1");
  std::vector<DimensionRow> table;
  for (std::size_t n = 1; n <= n_max; ++n) {
    DimensionRow row{n, {}, {}, ambient_dimension(AmbientSpace::Cotorsion, n),
                     ambient_dimension(AmbientSpace::Torsion, n), 0, 0};
    for (auto space : {AmbientSpace::Cotorsion, AmbientSpace::Torsion}) {
      std::vector<Coords> columns;
      for (auto label : summand_labels(space)) {
        const auto& basis = build_basis(label, n);
        row.computed[label] = basis.elements.size();
        row.closed_form[label] = closed_form_dimension(label, n);
        for (const auto& e : basis.elements) columns.push_back(to_reduced(space, e));
      }
      const std::size_t r = rank(columns_matrix(ambient_dimension(space, n), columns));
      (space == AmbientSpace::Cotorsion ? row.cotorsion_rank : row.torsion_rank) = r;
    }
    table.push_back(std::move(row));
  }
  return table;
}

std::optional<std::string> n2_torsion_discrepancy(const DimensionRow& row) {
  if (row.n != 2) return std::nullopt;
  const long stated = row.closed_form.at(SubmoduleLabel::T1) + row.closed_form.at(SubmoduleLabel::T2) +
                      row.closed_form.at(SubmoduleLabel::T4);
  if (stated == static_cast<long>(row.torsion_ambient)) return std::nullopt;
  std::string spanning;
  for (auto label : summand_labels(AmbientSpace::Torsion)) {
    if (row.computed.at(label) == 0) continue;
    if (!spanning.empty()) spanning += "+";
    spanning += to_string(label);
  }
  return "n=2: T1+T2+T4 has dimension " + std::to_string(stated) + " but the ambient space has dimension " +
         std::to_string(row.torsion_ambient) + "; the nonzero classes " + spanning + " have rank " +
         std::to_string(row.torsion_rank);
}

}  // namespace fedosov
