#pragma once

#include "ghml/rational.hpp"

#include <span>
#include <utility>
#include <vector>

namespace ghml {

// A finite metric space with a fixed order of points. Points are stored
// 0-based internally; user-facing indices (errors, file formats, CLI) are
// 1-based. Immutable after construction; safe to share across threads.
class MetricSpace {
 public:
  // Checks the metric axioms and reports the first violation, scanning
  // diagonal entries, then symmetry, then positivity, then ordered triples,
  // each in lexicographic index order.
  static MetricSpace validate(const std::vector<std::vector<Rational>>& rows);

  // The one-point space.
  static MetricSpace point();

  int size() const { return n_; }

  const Rational& dist(int i, int j) const { return d_[static_cast<size_t>(i) * n_ + j]; }

  Rational diameter() const;

  // Multiplies every distance by lambda > 0.
  MetricSpace scaled(const Rational& lambda) const;

  bool same_matrix(const MetricSpace& other) const { return n_ == other.n_ && d_ == other.d_; }

  std::vector<std::vector<Rational>> rows() const;

 private:
  MetricSpace(int n, std::vector<Rational> d) : n_(n), d_(std::move(d)) {}

  int n_;
  std::vector<Rational> d_;  // row-major n x n
};

struct InvariantProfile {
  ExtendedRational s;      // min nonzero distance
  ExtendedRational e;      // min gap between distinct unordered pairs' distances
  ExtendedRational t;      // min triangle slack over ordered triples
  ExtendedRational delta;  // min of the three
};

InvariantProfile invariant_profile(const MetricSpace& space);

// True iff delta > 0: all nonzero distances distinct and all triangle
// inequalities strict. Every space with at most two points qualifies.
bool is_general_position(const MetricSpace& space);

// (min, max) of d[a][b] over a in A, b in B. Both sets must be nonempty.
std::pair<Rational, Rational> set_distances(const MetricSpace& space, std::span<const int> a,
                                            std::span<const int> b);

// Hausdorff distance between two nonempty subsets of one space.
Rational hausdorff_distance(const MetricSpace& space, std::span<const int> a,
                            std::span<const int> b);

}  // namespace ghml
