#include "ghml/metric_space.hpp"

#include "ghml/error.hpp"

#include <algorithm>

namespace ghml {

MetricSpace MetricSpace::validate(const std::vector<std::vector<Rational>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) fail(Errc::invalid_argument, "a metric space needs at least one point");
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(rows[i].size()) != n)
      fail(Errc::invalid_argument, "distance matrix is not square");

  for (int i = 0; i < n; ++i)
    if (rows[i][i] != 0)
      fail(Errc::nonzero_diagonal, "NonzeroDiagonal(" + std::to_string(i + 1) + "): d[" +
                                       std::to_string(i + 1) + "][" + std::to_string(i + 1) +
                                       "] = " + rows[i][i].str(),
           {i + 1});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rows[i][j] != rows[j][i])
        fail(Errc::not_symmetric,
             "NotSymmetric(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " +
                 rows[i][j].str() + " vs " + rows[j][i].str(),
             {i + 1, j + 1});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rows[i][j] <= 0)
        fail(Errc::nonpositive_off_diagonal,
             "NonpositiveOffDiagonal(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                 "): " + rows[i][j].str(),
             {i + 1, j + 1});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (rows[i][j] + rows[j][k] < rows[i][k])
          fail(Errc::triangle_violation,
               "TriangleViolation(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                   std::to_string(k + 1) + "): " + rows[i][j].str() + " + " + rows[j][k].str() +
                   " < " + rows[i][k].str(),
               {i + 1, j + 1, k + 1});
      }
    }

  std::vector<Rational> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  return MetricSpace(n, std::move(flat));
}

MetricSpace MetricSpace::point() { return MetricSpace(1, {Rational(0)}); }

Rational MetricSpace::diameter() const {
  Rational best(0);
  for (const auto& v : d_)
    if (v > best) best = v;
  return best;
}

MetricSpace MetricSpace::scaled(const Rational& lambda) const {
  if (lambda <= 0) fail(Errc::nonpositive_scale, "scale factor must be positive");
  std::vector<Rational> flat(d_.size());
  for (size_t k = 0; k < d_.size(); ++k) flat[k] = d_[k] * lambda;
  return MetricSpace(n_, std::move(flat));
}

std::vector<std::vector<Rational>> MetricSpace::rows() const {
  std::vector<std::vector<Rational>> out(n_);
  for (int i = 0; i < n_; ++i) out[i].assign(d_.begin() + static_cast<size_t>(i) * n_,
                                             d_.begin() + static_cast<size_t>(i + 1) * n_);
  return out;
}

InvariantProfile invariant_profile(const MetricSpace& space) {
  const int n = space.size();
  InvariantProfile p{ExtendedRational::infinity(), ExtendedRational::infinity(),
                     ExtendedRational::infinity(), ExtendedRational::infinity()};

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      p.s = ExtendedRational::min(p.s, space.dist(i, j));

  // Distinct unordered pairs; they may share one point.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  for (size_t a = 0; a < pairs.size(); ++a)
    for (size_t b = a + 1; b < pairs.size(); ++b) {
      Rational gap = space.dist(pairs[a].first, pairs[a].second) -
                     space.dist(pairs[b].first, pairs[b].second);
      if (gap < 0) gap = -gap;
      p.e = ExtendedRational::min(p.e, gap);
    }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        p.t = ExtendedRational::min(p.t, space.dist(i, j) + space.dist(j, k) - space.dist(i, k));
      }
    }

  p.delta = ExtendedRational::min(p.s, ExtendedRational::min(p.e, p.t));
  return p;
}

bool is_general_position(const MetricSpace& space) {
  return invariant_profile(space).delta > ExtendedRational(0);
}

namespace {

void require_subset(const MetricSpace& space, std::span<const int> set, const char* name) {
  if (set.empty()) fail(Errc::empty_subset, std::string(name) + " is empty");
  for (int v : set)
    if (v < 0 || v >= space.size())
      fail(Errc::invalid_argument,
           std::string(name) + " contains out-of-range index " + std::to_string(v + 1));
}

}  // namespace

std::pair<Rational, Rational> set_distances(const MetricSpace& space, std::span<const int> a,
                                            std::span<const int> b) {
  require_subset(space, a, "A");
  require_subset(space, b, "B");
  Rational low = space.dist(a[0], b[0]);
  Rational high = low;
  for (int x : a)
    for (int y : b) {
      const Rational& d = space.dist(x, y);
      if (d < low) low = d;
      if (d > high) high = d;
    }
  return {low, high};
}

Rational hausdorff_distance(const MetricSpace& space, std::span<const int> a,
                            std::span<const int> b) {
  require_subset(space, a, "A");
  require_subset(space, b, "B");
  Rational worst(0);
  auto side = [&](std::span<const int> from, std::span<const int> to) {
    for (int x : from) {
      Rational nearest = space.dist(x, to[0]);
      for (int y : to) {
        const Rational& d = space.dist(x, y);
        if (d < nearest) nearest = d;
      }
      if (nearest > worst) worst = nearest;
    }
  };
  side(a, b);
  side(b, a);
  return worst;
}

}  // namespace ghml
