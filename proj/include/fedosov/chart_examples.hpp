#pragma once

#include <array>
#include <string>
#include <vector>

#include "fedosov/chart.hpp"

namespace fedosov {

/// Half-plane x > 0 charts. Example 1 is returned exactly as printed
/// (Γ¹₁₁ = −4/(3x), Γ²₁₂ = 2/(3x), Γ²₂₁ = −2/(3x), ω = dx∧dy/(3x²));
/// example 2 has the single symbol Γ¹₁₁ = −2/x and ω = dx∧dy/x².
/// Both carry ξ = x∂_y as a linear-type structure; example 2 also carries
/// η = x∂_x + y∂_y.
Chart load_example(int which);

/// One sign assignment for the three printed example 1 symbols.
struct SignPattern {
  std::array<int, 3> signs{};  // Γ¹₁₁, Γ²₁₂, Γ²₂₁ relative to the printed values
  bool torsion_free = false;
  bool parallel_omega = false;
};

Chart example1_with_signs(const std::array<int, 3>& signs);

/// All 8 patterns with their T = 0 and ∇ω = 0 verdicts.
std::vector<SignPattern> example1_sign_search();

/// The unique pattern passing both checks. Throws std::logic_error when
/// the search does not single one out.
Chart load_example1_emended();

/// Constant standard ω on x1..x2n, Γ = 0, no structure.
Chart flat_chart(std::size_t n);

/// Resolves "example1", "example1-emended", "example2" or "flat".
Chart load_builtin(const std::string& name);

struct ChartMutation {
  std::string description;
  Chart chart;
};

/// Ten single-component perturbations of example 2.
std::vector<ChartMutation> example2_mutations();

}  // namespace fedosov
