#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fedosov/lie_algebra.hpp"
#include "fedosov/report.hpp"
#include "fedosov/symplectic.hpp"

namespace fedosov {

/// Endomorphism of V as a matrix: A e_l = Σ_a A(a, l) e_a.
using Endomorphism = RationalMatrix;

struct AuxTensor {
  std::string name;
  PointTensor value;
};

/// (V, R̃, T̃) with auxiliary tensors K; aux[0] is always ω.
/// Curvature slots: (X, Y, Z, output); torsion slots: (X, Y, output).
struct InfinitesimalModel {
  SymplecticSpace space{1};
  PointTensor curvature;
  PointTensor torsion;
  std::vector<AuxTensor> aux;

  /// Builds a model with ω prepended to `extra`.
  static InfinitesimalModel make(const SymplecticSpace& space, PointTensor curvature, PointTensor torsion,
                                 std::vector<AuxTensor> extra = {});
  /// R̃ = 0, T̃ = 0, K = {ω}.
  static InfinitesimalModel trivial(std::size_t n);
};

/// Zero (1,3) resp. (1,2) tensors.
PointTensor zero_curvature(std::size_t dim);
PointTensor zero_torsion(std::size_t dim);

/// R_{XY} as an endomorphism.
Endomorphism curvature_endomorphism(const PointTensor& r, const Vector& x, const Vector& y);
Endomorphism curvature_endomorphism(const PointTensor& r, std::size_t x, std::size_t y);
/// S_X (or T_X) as an endomorphism of a (1,2) tensor: Y ↦ S_X Y.
Endomorphism slot_endomorphism(const PointTensor& s, const Vector& x);

/// Action of an endomorphism on a tensor as a derivation: A on each
/// contravariant slot minus K(…, A·, …) on each covariant slot.
PointTensor derivation_action(const Endomorphism& a, const PointTensor& k);

/// Push-forward f·K: contravariant slots transformed by f, covariant slots
/// by f⁻¹.
PointTensor push_forward(const PointTensor& k, const RationalMatrix& f, const RationalMatrix& f_inverse);

VerificationReport check_model_axioms(const InfinitesimalModel& m);

struct CurvatureTorsion {
  PointTensor curvature;
  PointTensor torsion;
};

/// From the curvature and torsion of ∇ and S = ∇ − ∇̃ to those of ∇̃:
///   T̃_X Y = T_X Y − (S_X Y − S_Y X),
///   R̃_{XY} = R_{XY} + [S_X, S_Y] + S_{T̃_X Y}.
CurvatureTorsion model_from_pair(const PointTensor& r, const PointTensor& t, const PointTensor& s);
/// Inverse of model_from_pair.
CurvatureTorsion pair_from_model(const PointTensor& r_tilde, const PointTensor& t_tilde, const PointTensor& s);

struct IsomorphismReport {
  VerificationReport report;
  /// Whether f preserves ω; set when ω is among the auxiliary tensors.
  std::optional<bool> symplectic;
  bool isomorphic() const { return report.all_pass(); }
};

/// Checks f R̃ = R̃′, f T̃ = T̃′ and f K = K′ (aux matched by position).
/// Throws PreconditionError when f is singular or dimensions differ.
IsomorphismReport verify_model_isomorphism(const RationalMatrix& f, const InfinitesimalModel& m,
                                           const InfinitesimalModel& m_prime);

/// Basis of 𝔥₀ = {A : A·R̃ = 0, A·T̃ = 0, A·K = 0}.
std::vector<Endomorphism> nomizu_h0(const InfinitesimalModel& m);

struct NomizuAlgebra {
  LieAlgebraPresentation algebra;  // basis e_1..e_2n, then h_1..h_m
  std::vector<Endomorphism> h;
};

/// Presentation on V ⊕ 𝔥 with [A,B] = AB − BA, [A,X] = AX, [X,Y] = −T̃_X Y + R̃_{XY}.
/// Throws PreconditionError when some R̃_{XY} is not in 𝔥.
LieAlgebraPresentation presentation_on(const InfinitesimalModel& m, const std::vector<Endomorphism>& h,
                                       const std::string& h_name);

NomizuAlgebra nomizu_algebra(const InfinitesimalModel& m);

struct TransvectionAlgebra {
  LieAlgebraPresentation algebra;
  std::vector<Endomorphism> h;  // basis of 𝔥₀′
  bool contained_in_h0 = false;
};

/// Lie closure of {R̃_{XY}} and the presentation on V ⊕ 𝔥₀′.
TransvectionAlgebra transvection_algebra(const InfinitesimalModel& m);

/// Flattened d² coordinates of an endomorphism.
std::vector<Rational> flatten(const Endomorphism& a);
/// True when every element of `sub` lies in the span of `space`.
bool endomorphism_span_contains(const std::vector<Endomorphism>& space, const std::vector<Endomorphism>& sub);

}  // namespace fedosov
