#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fedosov/models.hpp"
#include "fedosov/rational_function.hpp"
#include "fedosov/report.hpp"
#include "fedosov/tensor.hpp"

namespace fedosov {

using FieldTensor = Tensor<RationalFunction>;
using Point = std::map<std::string, Rational>;

/// How the homogeneous structure tensor of a chart is given.
struct StructureSpec {
  enum class Kind { None, LinearType, Explicit };
  Kind kind = Kind::None;
  /// Name of the vector field ξ (LinearType) or of the (1,2) field (Explicit).
  std::string field;
};

/// A single coordinate chart on a 2n-dimensional symplectic manifold.
///
/// Christoffel symbols use the slot layout of every other (1,2) tensor in
/// the library: christoffel(i, j, k) is the coefficient of ∂_k in ∇_{∂_i} ∂_j.
struct Chart {
  std::vector<std::string> coords;
  FieldTensor omega;        // covariant (i, j)
  FieldTensor christoffel;  // (i, j, k)
  std::map<std::string, FieldTensor> fields;
  StructureSpec structure;
  std::string excluded_locus;

  Chart() = default;
  /// Zero ω and Γ over the given coordinates.
  explicit Chart(std::vector<std::string> coordinates);

  std::size_t dim() const { return coords.size(); }
  /// Sorted variable list used for every component.
  std::vector<std::string> ring() const;
  /// Index of a coordinate name; throws SchemaError if unknown.
  std::size_t coordinate_index(const std::string& name) const;

  /// Named field; throws SchemaError if missing.
  const FieldTensor& field(const std::string& name) const;

  /// Parses text in the chart's variables.
  RationalFunction parse(const std::string& text) const;
};

enum class Which { Base, Tilde };

FieldTensor vector_field(const Chart& c, const std::vector<RationalFunction>& components);
FieldTensor zero_field(const Chart& c, std::vector<Slot> slots);

/// ∂f/∂(coordinate i), in the chart ring.
RationalFunction coordinate_partial(const Chart& c, const RationalFunction& f, std::size_t i);

/// Evaluates every component at p; throws PoleError at poles.
PointTensor evaluate(const FieldTensor& t, const Point& p);

/// S for the chart's structure spec (zero when none is declared).
FieldTensor structure_tensor(const Chart& c);

/// Connection coefficients of ∇ (Base) or ∇̃ = ∇ − S (Tilde).
FieldTensor connection(const Chart& c, Which which, const FieldTensor& s);

/// T(i,j,k) = Γ(i,j,k) − Γ(j,i,k).
FieldTensor chart_torsion(const Chart& c);
FieldTensor torsion_of(const FieldTensor& gamma);

/// R_{XY}Z = ∇_{[X,Y]}Z − ∇_X∇_Y Z + ∇_Y∇_X Z, slots (X, Y, Z, output).
FieldTensor chart_curvature(const Chart& c, Which which, const FieldTensor& s);
FieldTensor curvature_of(const Chart& c, const FieldTensor& gamma);

/// ∇K with the derivative slot prepended.
FieldTensor covariant_derivative(const Chart& c, const FieldTensor& gamma, const FieldTensor& k);

/// S_X Y = ω(X,Y)ξ − ω(Y,ξ)X.
FieldTensor linear_type_structure(const Chart& c, const FieldTensor& xi);

/// ω(X, Y) for vector fields.
RationalFunction omega_of(const Chart& c, const FieldTensor& x, const FieldTensor& y);
/// Inserts the vector field v into slot `slot` of k (that slot is removed).
FieldTensor contract_slot(const FieldTensor& k, std::size_t slot, const FieldTensor& v);
/// R_{XYZU} = ω(R_{XY}Z, U).
FieldTensor lower_curvature(const Chart& c, const FieldTensor& r);

/// Antisymmetry, closedness and nondegeneracy of ω.
VerificationReport verify_omega(const Chart& c);

/// Fedosov and Ambrose–Singer conditions for the structure tensor s.
VerificationReport verify_as_conditions(const Chart& c, const FieldTensor& s);

/// Linear-type identities for the vector field ξ. When xi_perp is absent
/// it is built from the first coordinate field Y with ω(Y, ξ) ≠ 0.
/// Throws PreconditionError when ξ vanishes identically.
VerificationReport verify_linear_type_suite(const Chart& c, const FieldTensor& xi,
                                            const std::optional<FieldTensor>& xi_perp = std::nullopt);

/// A vector field ξ⊥ with ω(ξ⊥, ξ) = 1.
FieldTensor auto_xi_perp(const Chart& c, const FieldTensor& xi);

enum class Suite { AS, LinearType, All };

/// ω checks followed by the requested suites, using the chart's structure.
VerificationReport verify_chart(const Chart& c, Suite suite);

FieldTensor lie_bracket(const Chart& c, const FieldTensor& x, const FieldTensor& y);
/// (L_ξ ω)_{ij}.
FieldTensor lie_derivative_omega(const Chart& c, const FieldTensor& xi);
/// ω([X,Y], ξ) = 0 on a spanning set of D = {X : ω(X, ξ) = 0}.
Check distribution_integrability(const Chart& c, const FieldTensor& xi);

struct HamiltonianCheck {
  FieldTensor alpha;  // i_ξ ω as a covariant field
  bool closed = false;
  std::optional<std::string> closed_witness;
  /// Set when a candidate H was supplied.
  std::optional<bool> matches_candidate;
  std::optional<std::string> candidate_witness;
};

HamiltonianCheck hamiltonian_oneform(const Chart& c, const FieldTensor& xi,
                                     const std::optional<RationalFunction>& candidate = std::nullopt);

struct ObstructionVerdict {
  bool obstructed = false;
  /// S = 0: every nondegenerate g works.
  bool degenerate = false;
  Vector xi;
  std::size_t solution_dimension = 0;
  /// det of the generic solution in the parameters t1, t2, …
  Polynomial determinant;
  std::string summary;
};

/// Pointwise test for metrics g with S·g = 0. Throws PreconditionError
/// when S is not of linear type for ω.
ObstructionVerdict metric_obstruction(const PointTensor& s, const PointTensor& omega);

struct PointModel {
  InfinitesimalModel model;
  /// Columns are the new basis (e_1..e_n, f_1..f_n) in coordinate components.
  RationalMatrix change_of_basis;
};

/// R̃, T̃, ω and S at p, in a symplectic basis. The aux tensor "S" is added.
PointModel model_at_point(const Chart& c, const FieldTensor& s, const Point& p);

/// Columns (e_1..e_n, f_1..f_n) with ω(e_i, f_j) = δ_ij, all other pairs 0.
RationalMatrix symplectic_basis(const RationalMatrix& omega);

}  // namespace fedosov
