#pragma once

// The quadratic integer program over compositions of d'_0, and its closed
// form through the nearest points of a hyperplane section of Z^m.

#include <cstdint>
#include <vector>

#include "quiver/numeric.hpp"
#include "quiver/quiver_core.hpp"

namespace quiver {

struct QipInstance {
  /// Weakly increasing rearrangement d' of the input.
  DimensionVector d_sorted;
  /// Applied permutation: d_sorted[k] = input[permutation[k]].
  std::vector<std::size_t> permutation;

  explicit QipInstance(const DimensionVector& d);

  int variables() const { return d_sorted.arrows(); }
  int budget() const { return d_sorted[0]; }
};

struct QipSolution {
  std::int64_t optimum = 0;
  /// Lexicographically increasing.
  std::vector<std::vector<int>> minimizers;
  std::size_t count() const { return minimizers.size(); }
};

/// G(e) = sum_{1<=j<=i<=N} e_i (e_j + d'_j - d'_{j-1}).
std::int64_t qip_objective(const QipInstance& inst, const std::vector<int>& e);

/// Exhaustive scan over all compositions of d'_0 into N nonnegative parts.
QipSolution qip_enumerate(const QipInstance& inst, std::uint64_t cap = kDefaultEnumerationCap);

/// Largest l in 1..N with d'_0 + ... + d'_l >= l d'_l. Requires d' weakly
/// increasing with d'_0 >= 1.
int relevant_count(const DimensionVector& d_sorted);

struct ClosestPointResult {
  int m_relevant = 0;
  BigInt S;
  /// s_hat_i = d'_0 - d'_i, i = 1..m.
  std::vector<BigInt> s_hat;
  /// p_hat_i = S/m - d'_i: projection of s_hat onto sum x_i = d'_0.
  std::vector<Rational> p_hat;
  std::vector<BigInt> rounded;
  BigInt delta;
  int epsilon = 0;
  /// One per |delta|-subset of coordinates, in lexicographic subset order.
  std::vector<std::vector<BigInt>> v_hats;
  BigInt D_hat;
  BigInt D;
  /// (D_hat + d'_0^2 - sum_{i<=m} (d'_i - d'_0)^2) / 2, the QIP optimum.
  BigInt G_opt;
};

ClosestPointResult closest_simplex_points(const DimensionVector& d_sorted);

/// Codimension C of Sigma^r_d from the rational closed form.
BigInt codim_closed_form(const DimensionVector& d, int r);
/// theta = binom(m, |delta|) for the reduced vector d' - r.
BigInt theta_closed_form(const DimensionVector& d, int r);

}  // namespace quiver
