#pragma once

#include "ghml/metric_space.hpp"
#include "ghml/rational.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace ghml {

// A nonempty set of index pairs between two point ranges, interpreted as a
// multivalued mapping. Pairs are kept sorted and unique; indices 0-based.
class Relation {
 public:
  Relation(int left_n, int right_n, std::vector<std::pair<int, int>> pairs);

  int left_n() const { return left_n_; }
  int right_n() const { return right_n_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  std::vector<int> image(std::span<const int> a) const;
  std::vector<int> preimage(std::span<const int> b) const;

  bool left_surjective() const;
  bool right_surjective() const;

  // Canonical encoding: bit (i * right_n + j) set iff (i, j) is present.
  // Requires left_n * right_n <= 64.
  std::uint64_t grid_mask() const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.left_n_ == b.left_n_ && a.right_n_ == b.right_n_ && a.pairs_ == b.pairs_;
  }

 private:
  int left_n_;
  int right_n_;
  std::vector<std::pair<int, int>> pairs_;
};

// A relation whose projections onto both sides are surjective.
class Correspondence : public Relation {
 public:
  Correspondence(int left_n, int right_n, std::vector<std::pair<int, int>> pairs);
  explicit Correspondence(Relation relation);
};

// max over related pairs (x,y), (x',y') of |d_X(x,x') - d_Y(y,y')|.
Rational distortion(const Relation& relation, const MetricSpace& x, const MetricSpace& y);

inline constexpr int kEnumerationCellCap = 20;

// Every correspondence between point ranges of the given sizes, each exactly
// once, ordered by the canonical grid encoding ascending. Oracle-scale only:
// left_n * right_n must be at most kEnumerationCellCap.
std::vector<Correspondence> enumerate_correspondences(int left_n, int right_n);

// Streaming form of the same enumeration; emits canonical grid masks.
void for_each_correspondence_mask(int left_n, int right_n,
                                  const std::function<void(std::uint64_t)>& fn);

}  // namespace ghml
