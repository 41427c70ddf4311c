#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fedosov/matrix.hpp"
#include "fedosov/rational.hpp"

namespace fedosov {

/// Finite-dimensional Lie algebra given by structure constants
/// [b_i, b_j] = Σ_k c(i,j,k) b_k (0-based indices).
class LieAlgebraPresentation {
 public:
  LieAlgebraPresentation() = default;
  explicit LieAlgebraPresentation(std::vector<std::string> labels);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim() + j) * dim() + k]; }
  /// Sets [b_i, b_j] and, antisymmetrically, [b_j, b_i].
  void set_bracket(std::size_t i, std::size_t j, const std::vector<Rational>& value);
  std::vector<Rational> bracket(std::size_t i, std::size_t j) const;
  std::vector<Rational> bracket(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

  std::map<std::string, std::vector<std::size_t>>& subspaces() { return subspaces_; }
  const std::map<std::string, std::vector<std::size_t>>& subspaces() const { return subspaces_; }

  /// Index triple (0-based) where antisymmetry fails, if any.
  std::optional<std::vector<std::size_t>> antisymmetry_failure() const;
  /// Index triple (0-based) where the Jacobi identity fails, if any.
  std::optional<std::vector<std::size_t>> jacobi_failure() const;

  /// Matrix of ad_x in the basis: column j is [x, b_j].
  Matrix<Rational> ad(const std::vector<Rational>& x) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Rational> c_;
  std::map<std::string, std::vector<std::size_t>> subspaces_;
};

/// True when F[b_i, b_j] = [F b_i, F b_j] for all basis pairs, where the
/// columns of F give the images of the basis of `from` in `to`.
bool is_lie_homomorphism(const LieAlgebraPresentation& from, const LieAlgebraPresentation& to,
                         const Matrix<Rational>& f);

struct BianchiType {
  /// One of I, II, III, IV, V, VI_0, VI_h, VII_0, VII_h, VIII, IX.
  std::string type;
  /// For VI_h: the eigenvalue ratio of ad_X on the derived algebra and its
  /// reciprocal, when rational.
  std::vector<Rational> parameters;
  /// For VI_h and VII_h: tr(M)² / det(M), a convention-free invariant.
  std::optional<Rational> invariant;
  std::size_t derived_dimension = 0;
};

/// Real 3-dimensional classification. Throws PreconditionError when the
/// dimension is not 3 or the Jacobi identity fails.
BianchiType bianchi_classify(const LieAlgebraPresentation& algebra);

}  // namespace fedosov
