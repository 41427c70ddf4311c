#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fedosov/symplectic.hpp"

namespace fedosov {

/// The two ambient spaces: S²V*⊗V* (cotorsion) and ∧²V*⊗V* (torsion),
/// both as (0,3) tensors whose first two slots are (anti)symmetric.
enum class AmbientSpace { Cotorsion, Torsion };

enum class SubmoduleLabel { S1, S2, S3, T1, T2, T3, T4, W };

std::string to_string(SubmoduleLabel label);
std::optional<SubmoduleLabel> parse_submodule_label(const std::string& text);
AmbientSpace ambient_of(SubmoduleLabel label);
/// Labels of the irreducible summands of a space (W excluded).
const std::vector<SubmoduleLabel>& summand_labels(AmbientSpace space);

std::size_t ambient_dimension(AmbientSpace space, std::size_t n);

/// Coordinates (a ≤ b, c) resp. (a < b, c) of a tensor in the ambient space.
std::vector<Rational> to_reduced(AmbientSpace space, const PointTensor& t);
PointTensor from_reduced(AmbientSpace space, std::size_t n, const std::vector<Rational>& coords);
/// Throws PreconditionError if `t` does not have the ambient symmetry.
void require_in_ambient(AmbientSpace space, const SymplecticSpace& v, const PointTensor& t);

struct SubmoduleBasis {
  SubmoduleLabel label;
  std::size_t n;
  std::vector<PointTensor> elements;
};

// Generating formulas; u is the vector U (not the covector).
PointTensor s1_generator(const SymplecticSpace& v, const Vector& u);
PointTensor t1_generator(const SymplecticSpace& v, const Vector& u);
PointTensor t3_generator(const SymplecticSpace& v, const Vector& u);
PointTensor w_generator(const SymplecticSpace& v, const Vector& u);

/// Basis of the submodule. Results are cached per (label, n).
const SubmoduleBasis& build_basis(SubmoduleLabel label, std::size_t n);

struct DecompositionResult {
  std::map<SubmoduleLabel, PointTensor> parts;
  std::set<SubmoduleLabel> type_set;
};

DecompositionResult decompose_cotorsion(const PointTensor& s, std::size_t n);
DecompositionResult decompose_torsion(const PointTensor& t, std::size_t n);
DecompositionResult decompose(AmbientSpace space, const PointTensor& t, std::size_t n);

/// Coordinates of `t` with respect to the concatenated summand bases.
std::vector<Rational> summand_coordinates(AmbientSpace space, const PointTensor& t, std::size_t n);

/// Membership of `t` in a class. S2, T2 and T4 use their defining linear
/// conditions; the other classes use span membership.
bool satisfies_class_predicate(SubmoduleLabel label, const PointTensor& t, std::size_t n);

// Structural maps.
PointTensor map_A2(const PointTensor& s);
PointTensor map_A3(const PointTensor& t);
Covector map_C(const SymplecticSpace& v, const PointTensor& t);
/// η(U*) = Σ_i e_i* ∧ e_{i+n}* ∧ U*, with U* the given covector.
PointTensor map_eta(const SymplecticSpace& v, const Covector& u_star);
/// Dual-basis coefficients of φ(S), i.e. the covector s₁₃(S).
Covector map_phi(const SymplecticSpace& v, const PointTensor& s);
PointTensor map_pi(const PointTensor& s);
/// ξ(W*)_{XYZ} = (ω_{ZX}ω_{WY} + ω_{ZY}ω_{WX}) / (2n+1), with W = sharp(W*).
PointTensor xi_embed(const SymplecticSpace& v, const Covector& w_star);

/// S symmetric in (1,2) with A₂(−S) = T̃. Throws NoSolutionError when
/// T̃ ∉ T̃₁ + T̃₂.
PointTensor symplectify_torsion(const PointTensor& t, std::size_t n);

struct DimensionRow {
  std::size_t n;
  std::map<SubmoduleLabel, std::size_t> computed;
  /// Closed-form values (may be negative outside their range of validity).
  std::map<SubmoduleLabel, long> closed_form;
  std::size_t cotorsion_ambient;
  std::size_t torsion_ambient;
  std::size_t cotorsion_rank;  // rank of the concatenated S-bases
  std::size_t torsion_rank;    // rank of the concatenated T-bases
};

long closed_form_dimension(SubmoduleLabel label, std::size_t n);
std::vector<DimensionRow> dimension_table(std::size_t n_max);

/// At n = 2 the stated decomposition T̃₁+T̃₂+T̃₄ is compared with the ambient
/// dimension; returns a description when they disagree.
std::optional<std::string> n2_torsion_discrepancy(const DimensionRow& row);

}  // namespace fedosov
