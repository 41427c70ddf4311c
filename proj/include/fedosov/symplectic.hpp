#pragma once

#include <cstddef>
#include <vector>

#include "fedosov/matrix.hpp"
#include "fedosov/rational.hpp"
#include "fedosov/tensor.hpp"

namespace fedosov {

using Vector = std::vector<Rational>;
using Covector = std::vector<Rational>;
using RationalMatrix = Matrix<Rational>;

/// (V, ω) of dimension 2n in the standard symplectic basis:
/// ω(e_i, e_{i+n}) = 1 = −ω(e_{i+n}, e_i) for i < n, all other pairings zero.
class SymplecticSpace {
 public:
  explicit SymplecticSpace(std::size_t half_dim);

  std::size_t half_dim() const { return n_; }
  std::size_t dim() const { return 2 * n_; }

  /// ω(e_a, e_b), 0-based.
  Rational omega(std::size_t a, std::size_t b) const {
    if (a < n_ && b == a + n_) return Rational(1);
    if (a >= n_ && b + n_ == a) return Rational(-1);
    return Rational(0);
  }
  /// Basis index paired with `a` by ω (a ± n).
  std::size_t partner(std::size_t a) const { return a < n_ ? a + n_ : a - n_; }

  const RationalMatrix& omega_matrix() const { return omega_; }
  Rational omega(const Vector& x, const Vector& y) const;

  Vector basis_vector(std::size_t a) const;
  /// The (0,2) tensor ω.
  PointTensor omega_tensor() const;

  /// Zero tensor with the given slots over this space.
  PointTensor zero(std::vector<Slot> slots) const { return PointTensor(dim(), std::move(slots)); }
  PointTensor zero3() const { return zero(covariant_slots(3)); }

 private:
  std::size_t n_;
  RationalMatrix omega_;
};

/// X ↦ X* = ω(X, ·).
Covector musical_flat(const SymplecticSpace& v, const Vector& x);
/// Inverse of musical_flat.
Vector musical_sharp(const SymplecticSpace& v, const Covector& c);

/// True when Mᵀ ω M = ω.
bool is_symplectic_matrix(const SymplecticSpace& v, const RationalMatrix& m);

// Slot symmetry predicates for tensors of any order (0-based slots).
bool is_symmetric_in(const PointTensor& t, std::size_t a, std::size_t b);
bool is_antisymmetric_in(const PointTensor& t, std::size_t a, std::size_t b);
bool is_totally_symmetric3(const PointTensor& t);
bool is_totally_antisymmetric3(const PointTensor& t);

/// T̃_{XYZ} = ω(T̃_X Y, Z). Throws PreconditionError unless T̃_X Y = −T̃_Y X.
PointTensor torsion_lower(const SymplecticSpace& v, const PointTensor& t);
/// Inverse of torsion_lower.
PointTensor torsion_raise(const SymplecticSpace& v, const PointTensor& lowered);
/// S_{XYZ} = ω(S_Z X, Y).
PointTensor cotorsion_lower(const SymplecticSpace& v, const PointTensor& s);
/// Inverse of cotorsion_lower.
PointTensor cotorsion_raise(const SymplecticSpace& v, const PointTensor& lowered);

/// s₁₃(S)(Z) = Σ_i (S_{e_i Z e_{i+n}} − S_{e_{i+n} Z e_i}); S symmetric in (1,2).
Covector contract_s13(const SymplecticSpace& v, const PointTensor& s);
/// t₁₂(T̃)(Z) = Σ_i T̃_{e_i e_{i+n} Z}; T̃ antisymmetric in (1,2).
Covector contract_t12(const SymplecticSpace& v, const PointTensor& t);
/// t₁₃(T̃)(Y) = Σ_i (T̃_{e_i Y e_{i+n}} − T̃_{e_{i+n} Y e_i}); T̃ antisymmetric in (1,2).
Covector contract_t13(const SymplecticSpace& v, const PointTensor& t);

/// (𝔖A)_{XYZ} = A_{XYZ} + A_{YZX} + A_{ZXY}.
PointTensor cyclic_sum(const PointTensor& a);

/// Cotorsion-type S_X Y = ω(X,Y)ξ − ω(Y,ξ)X as a (1,2) tensor.
PointTensor linear_type_tensor(const SymplecticSpace& v, const Vector& xi);

}  // namespace fedosov
