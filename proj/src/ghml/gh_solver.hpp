#pragma once

#include "ghml/metric_space.hpp"
#include "ghml/relation.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ghml {

// Below this many grid cells the solver certifies the complete set of
// optimal correspondences; above it, one witness.
inline constexpr int kAllMinimizersCellCap = 12;

struct GhResult {
  Rational distance;                   // half the minimal distortion
  std::vector<Correspondence> optimal; // canonical grid order when complete
  bool complete;                       // true iff `optimal` lists every minimizer
  std::uint64_t nodes;                 // search nodes explored
};

// Oracle: scans every correspondence in canonical grid order. Subject to the
// enumeration cell cap; meant for cross-checking the branch-and-bound solver.
GhResult gh_distance_exhaustive(const MetricSpace& x, const MetricSpace& y);

// Main solver. Branch-and-bound over assignments of left points (in index
// order) to nonempty sets of right points; a leaf is kept only when the right
// side is covered. Prunes on the running distortion and on the lower bound
// |diam X - diam Y|. Results are deterministic: the complete set is reported
// in canonical grid order, the single-witness path seeds a greedy
// correspondence and replaces it only on strict improvement.
GhResult gh_distance_exact(const MetricSpace& x, const MetricSpace& y);

// A distance-preserving bijection (image of point i at position i, 0-based),
// found by backtracking in index order, or nullopt.
std::optional<std::vector<int>> is_isometric(const MetricSpace& x, const MetricSpace& y);

// Exact check of d_GH(lambda X, lambda Y) = lambda d_GH(X, Y).
bool gh_scaling_check(const MetricSpace& x, const MetricSpace& y, const Rational& lambda);

}  // namespace ghml
