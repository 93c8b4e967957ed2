#include "ghml/relation.hpp"

#include "ghml/error.hpp"

#include <algorithm>

namespace ghml {

Relation::Relation(int left_n, int right_n, std::vector<std::pair<int, int>> pairs)
    : left_n_(left_n), right_n_(right_n), pairs_(std::move(pairs)) {
  if (left_n_ < 1 || right_n_ < 1) fail(Errc::invalid_argument, "relation sides must be nonempty");
  if (pairs_.empty()) fail(Errc::invalid_argument, "a relation must contain at least one pair");
  for (auto [i, j] : pairs_)
    if (i < 0 || i >= left_n_ || j < 0 || j >= right_n_)
      fail(Errc::invalid_argument, "relation pair out of range");
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

std::vector<int> Relation::image(std::span<const int> a) const {
  std::vector<bool> hit(right_n_, false);
  for (int x : a)
    for (auto [i, j] : pairs_)
      if (i == x) hit[j] = true;
  std::vector<int> out;
  for (int j = 0; j < right_n_; ++j)
    if (hit[j]) out.push_back(j);
  return out;
}

std::vector<int> Relation::preimage(std::span<const int> b) const {
  std::vector<bool> hit(left_n_, false);
  for (int y : b)
    for (auto [i, j] : pairs_)
      if (j == y) hit[i] = true;
  std::vector<int> out;
  for (int i = 0; i < left_n_; ++i)
    if (hit[i]) out.push_back(i);
  return out;
}

bool Relation::left_surjective() const {
  std::vector<bool> hit(left_n_, false);
  for (auto [i, j] : pairs_) hit[i] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool Relation::right_surjective() const {
  std::vector<bool> hit(right_n_, false);
  for (auto [i, j] : pairs_) hit[j] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::uint64_t Relation::grid_mask() const {
  if (left_n_ * right_n_ > 64)
    fail(Errc::size_too_large_for_enumeration, "grid encoding needs at most 64 cells");
  std::uint64_t mask = 0;
  for (auto [i, j] : pairs_) mask |= std::uint64_t(1) << (i * right_n_ + j);
  return mask;
}

Correspondence::Correspondence(int left_n, int right_n, std::vector<std::pair<int, int>> pairs)
    : Relation(left_n, right_n, std::move(pairs)) {
  if (!left_surjective() || !right_surjective())
    fail(Errc::invalid_argument, "correspondence projections must cover both sides");
}

Correspondence::Correspondence(Relation relation) : Relation(std::move(relation)) {
  if (!left_surjective() || !right_surjective())
    fail(Errc::invalid_argument, "correspondence projections must cover both sides");
}

Rational distortion(const Relation& relation, const MetricSpace& x, const MetricSpace& y) {
  if (relation.left_n() != x.size() || relation.right_n() != y.size())
    fail(Errc::size_mismatch, "relation does not match the spaces' sizes");
  Rational worst(0);
  const auto& pairs = relation.pairs();
  for (size_t a = 0; a < pairs.size(); ++a)
    for (size_t b = a; b < pairs.size(); ++b) {
      Rational diff = x.dist(pairs[a].first, pairs[b].first) -
                      y.dist(pairs[a].second, pairs[b].second);
      if (diff < 0) diff = -diff;
      if (diff > worst) worst = diff;
    }
  return worst;
}

void for_each_correspondence_mask(int left_n, int right_n,
                                  const std::function<void(std::uint64_t)>& fn) {
  if (left_n < 1 || right_n < 1) fail(Errc::invalid_argument, "sides must be nonempty");
  const int cells = left_n * right_n;
  if (cells > kEnumerationCellCap)
    fail(Errc::size_too_large_for_enumeration,
         "grid has " + std::to_string(cells) + " cells, cap is " +
             std::to_string(kEnumerationCellCap));
  const std::uint64_t row = (std::uint64_t(1) << right_n) - 1;
  const std::uint64_t total = std::uint64_t(1) << cells;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    std::uint64_t cols = 0;
    bool rows_ok = true;
    for (int i = 0; i < left_n; ++i) {
      const std::uint64_t part = (mask >> (i * right_n)) & row;
      if (part == 0) {
        rows_ok = false;
        break;
      }
      cols |= part;
    }
    if (rows_ok && cols == row) fn(mask);
  }
}

std::vector<Correspondence> enumerate_correspondences(int left_n, int right_n) {
  std::vector<Correspondence> out;
  for_each_correspondence_mask(left_n, right_n, [&](std::uint64_t mask) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < left_n; ++i)
      for (int j = 0; j < right_n; ++j)
        if (mask & (std::uint64_t(1) << (i * right_n + j))) pairs.emplace_back(i, j);
    out.emplace_back(left_n, right_n, std::move(pairs));
  });
  return out;
}

}  // namespace ghml
