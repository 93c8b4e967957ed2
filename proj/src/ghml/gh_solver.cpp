#include "ghml/gh_solver.hpp"

#include "ghml/error.hpp"

#include <algorithm>
#include <functional>

namespace ghml {

namespace {

Rational abs_diff(const Rational& a, const Rational& b) { return a >= b ? a - b : b - a; }

std::vector<std::pair<int, int>> mask_tuple_pairs(const std::vector<std::uint32_t>& masks, int r) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < static_cast<int>(masks.size()); ++i)
    for (int j = 0; j < r; ++j)
      if (masks[i] & (std::uint32_t(1) << j)) pairs.emplace_back(i, j);
  return pairs;
}

Rational mask_tuple_distortion(const std::vector<std::uint32_t>& masks, const MetricSpace& x,
                               const MetricSpace& y) {
  auto pairs = mask_tuple_pairs(masks, y.size());
  Rational worst(0);
  for (size_t a = 0; a < pairs.size(); ++a)
    for (size_t b = a + 1; b < pairs.size(); ++b) {
      Rational diff = abs_diff(x.dist(pairs[a].first, pairs[b].first),
                               y.dist(pairs[a].second, pairs[b].second));
      if (diff > worst) worst = diff;
    }
  return worst;
}

// One right point per left point, chosen greedily by local distortion, then
// the uncovered right points attached where they cost least. Gives the
// branch-and-bound a useful starting upper bound.
std::vector<std::uint32_t> greedy_masks(const MetricSpace& x, const MetricSpace& y) {
  const int l = x.size();
  const int r = y.size();
  std::vector<int> pick(l, 0);
  for (int i = 0; i < l; ++i) {
    int best_j = -1;
    Rational best_inc(0);
    for (int j = 0; j < r; ++j) {
      Rational inc(0);
      for (int k = 0; k < i; ++k) {
        Rational diff = abs_diff(x.dist(i, k), y.dist(j, pick[k]));
        if (diff > inc) inc = diff;
      }
      if (best_j < 0 || inc < best_inc) {
        best_j = j;
        best_inc = inc;
      }
    }
    pick[i] = best_j;
  }
  std::vector<std::uint32_t> masks(l, 0);
  std::vector<char> covered(r, 0);
  for (int i = 0; i < l; ++i) {
    masks[i] |= std::uint32_t(1) << pick[i];
    covered[pick[i]] = 1;
  }
  for (int j = 0; j < r; ++j) {
    if (covered[j]) continue;
    int best_i = -1;
    Rational best_inc(0);
    for (int i = 0; i < l; ++i) {
      Rational inc(0);
      for (int k = 0; k < l; ++k)
        for (int jj = 0; jj < r; ++jj)
          if (masks[k] & (std::uint32_t(1) << jj)) {
            Rational diff = abs_diff(x.dist(i, k), y.dist(j, jj));
            if (diff > inc) inc = diff;
          }
      if (best_i < 0 || inc < best_inc) {
        best_i = i;
        best_inc = inc;
      }
    }
    masks[best_i] |= std::uint32_t(1) << j;
  }
  return masks;
}

struct BnbSearch {
  const MetricSpace& x;
  const MetricSpace& y;
  int l;
  int r;
  std::uint32_t full_row;
  bool collect_all;
  Rational best;
  Rational lower;
  bool stop = false;
  std::vector<std::uint32_t> current;
  std::vector<std::uint32_t> witness;
  std::vector<std::pair<std::vector<std::uint32_t>, Rational>> leaves;
  std::uint64_t nodes = 0;

  BnbSearch(const MetricSpace& x_, const MetricSpace& y_, bool collect_all_, Rational best_,
            std::vector<std::uint32_t> witness_, Rational lower_)
      : x(x_),
        y(y_),
        l(x_.size()),
        r(y_.size()),
        full_row((std::uint32_t(1) << r) - 1),
        collect_all(collect_all_),
        best(std::move(best_)),
        lower(std::move(lower_)),
        current(static_cast<size_t>(l), 0),
        witness(std::move(witness_)) {}

  // Distortion contributed by giving `mask` to left point `depth`, folded
  // into `running`; returns true when the branch is already prunable.
  bool folded_distortion(int depth, std::uint32_t mask, Rational& running) const {
    auto prunable = [&] { return collect_all ? running > best : running >= best; };
    for (int a = 0; a < r; ++a) {
      if (!(mask & (std::uint32_t(1) << a))) continue;
      for (int b = a + 1; b < r; ++b) {
        if (!(mask & (std::uint32_t(1) << b))) continue;
        const Rational& d = y.dist(a, b);  // against d_X(depth, depth) = 0
        if (d > running) {
          running = d;
          if (prunable()) return true;
        }
      }
      for (int k = 0; k < depth; ++k) {
        const Rational& dx = x.dist(depth, k);
        for (int b = 0; b < r; ++b) {
          if (!(current[k] & (std::uint32_t(1) << b))) continue;
          Rational diff = abs_diff(dx, y.dist(a, b));
          if (diff > running) {
            running = diff;
            if (prunable()) return true;
          }
        }
      }
    }
    return prunable();
  }

  void recurse(int depth, std::uint32_t covered, const Rational& running) {
    if (stop) return;
    if (depth == l) {
      if (covered != full_row) return;
      if (collect_all) {
        if (running < best) best = running;
        leaves.emplace_back(current, running);
      } else if (running < best) {
        best = running;
        witness = current;
        if (best == lower) stop = true;
      }
      return;
    }
    for (std::uint32_t mask = 1; mask <= full_row; ++mask) {
      ++nodes;
      Rational next = running;
      if (folded_distortion(depth, mask, next)) continue;
      current[depth] = mask;
      recurse(depth + 1, covered | mask, next);
      if (stop) return;
    }
  }
};

GhResult finish_complete(const MetricSpace& x, const MetricSpace& y,
                         std::vector<std::pair<std::vector<std::uint32_t>, Rational>> leaves,
                         const Rational& best, std::uint64_t nodes) {
  const int r = y.size();
  std::vector<std::pair<std::uint64_t, std::vector<std::uint32_t>>> keep;
  for (auto& [masks, dis] : leaves) {
    if (dis != best) continue;
    std::uint64_t key = 0;
    for (int i = 0; i < static_cast<int>(masks.size()); ++i)
      key |= std::uint64_t(masks[i]) << (i * r);
    keep.emplace_back(key, std::move(masks));
  }
  std::sort(keep.begin(), keep.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Correspondence> optimal;
  optimal.reserve(keep.size());
  for (auto& [key, masks] : keep)
    optimal.emplace_back(x.size(), y.size(), mask_tuple_pairs(masks, r));
  return GhResult{best / 2, std::move(optimal), true, nodes};
}

}  // namespace

GhResult gh_distance_exhaustive(const MetricSpace& x, const MetricSpace& y) {
  const int l = x.size();
  const int r = y.size();
  bool have = false;
  Rational best(0);
  std::vector<std::uint64_t> minimizers;
  std::uint64_t nodes = 0;
  for_each_correspondence_mask(l, r, [&](std::uint64_t mask) {
    ++nodes;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < r; ++j)
        if (mask & (std::uint64_t(1) << (i * r + j))) pairs.emplace_back(i, j);
    Rational dis(0);
    for (size_t a = 0; a < pairs.size(); ++a)
      for (size_t b = a + 1; b < pairs.size(); ++b) {
        Rational diff = abs_diff(x.dist(pairs[a].first, pairs[b].first),
                                 y.dist(pairs[a].second, pairs[b].second));
        if (diff > dis) dis = diff;
      }
    if (!have || dis < best) {
      have = true;
      best = dis;
      minimizers.clear();
    }
    if (dis == best) minimizers.push_back(mask);
  });
  std::vector<Correspondence> optimal;
  optimal.reserve(minimizers.size());
  for (std::uint64_t mask : minimizers) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < r; ++j)
        if (mask & (std::uint64_t(1) << (i * r + j))) pairs.emplace_back(i, j);
    optimal.emplace_back(l, r, std::move(pairs));
  }
  return GhResult{best / 2, std::move(optimal), true, nodes};
}

GhResult gh_distance_exact(const MetricSpace& x, const MetricSpace& y) {
  const int l = x.size();
  const int r = y.size();
  if (r > 20 || l > 64)
    fail(Errc::size_too_large_for_enumeration, "space too large for the exact solver");

  const auto seed = greedy_masks(x, y);
  const Rational seed_dis = mask_tuple_distortion(seed, x, y);
  const Rational lower = abs_diff(x.diameter(), y.diameter());
  const bool collect_all = l * r <= kAllMinimizersCellCap;

  if (!collect_all && seed_dis == lower) {
    std::vector<Correspondence> optimal;
    optimal.emplace_back(l, r, mask_tuple_pairs(seed, r));
    return GhResult{seed_dis / 2, std::move(optimal), false, 0};
  }

  BnbSearch search(x, y, collect_all, seed_dis, seed, lower);
  search.recurse(0, 0, Rational(0));

  if (collect_all) return finish_complete(x, y, std::move(search.leaves), search.best, search.nodes);

  std::vector<Correspondence> optimal;
  optimal.emplace_back(l, r, mask_tuple_pairs(search.witness, r));
  return GhResult{search.best / 2, std::move(optimal), false, search.nodes};
}

std::optional<std::vector<int>> is_isometric(const MetricSpace& x, const MetricSpace& y) {
  if (x.size() != y.size()) return std::nullopt;
  const int n = x.size();
  auto sorted_distances = [](const MetricSpace& s) {
    std::vector<Rational> v;
    for (int i = 0; i < s.size(); ++i)
      for (int j = i + 1; j < s.size(); ++j) v.push_back(s.dist(i, j));
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted_distances(x) != sorted_distances(y)) return std::nullopt;

  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> extend = [&](int i) -> bool {
    if (i == n) return true;
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (int k = 0; k < i; ++k)
        if (x.dist(i, k) != y.dist(c, perm[k])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      perm[i] = c;
      used[c] = true;
      if (extend(i + 1)) return true;
      used[c] = false;
      perm[i] = -1;
    }
    return false;
  };
  if (extend(0)) return perm;
  return std::nullopt;
}

bool gh_scaling_check(const MetricSpace& x, const MetricSpace& y, const Rational& lambda) {
  const Rational plain = gh_distance_exact(x, y).distance;
  const Rational scaled = gh_distance_exact(x.scaled(lambda), y.scaled(lambda)).distance;
  return scaled == plain * lambda;
}

}  // namespace ghml
