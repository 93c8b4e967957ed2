#include "ghml/partition.hpp"

#include "ghml/error.hpp"

#include <algorithm>
#include <numeric>

namespace ghml {

namespace {

// Block label of every point, or empty if the partition is not a partition.
std::vector<int> block_of_point(const LabeledPartition& partition, int point_count) {
  std::vector<int> owner(point_count, -1);
  if (static_cast<int>(partition.blocks.size()) != partition.reference_n) return {};
  for (int b = 0; b < static_cast<int>(partition.blocks.size()); ++b) {
    if (partition.blocks[b].empty()) return {};
    for (int p : partition.blocks[b]) {
      if (p < 0 || p >= point_count || owner[p] != -1) return {};
      owner[p] = b;
    }
  }
  for (int o : owner)
    if (o == -1) return {};
  return owner;
}

void check_epsilon_range(const MetricSpace& m, const Rational& epsilon) {
  if (epsilon <= 0) fail(Errc::epsilon_out_of_range, "epsilon must be positive");
  const ExtendedRational cap = invariant_profile(m).s / 2;
  if (ExtendedRational(epsilon) > cap)
    fail(Errc::epsilon_out_of_range,
         "epsilon " + epsilon.str() + " exceeds s(M)/2 = " + cap.str());
}

}  // namespace

CanonicalPartitionResult canonical_partition_result(const MetricSpace& m, const MetricSpace& x,
                                                    const Rational& epsilon) {
  check_epsilon_range(m, epsilon);
  const GhResult gh = gh_distance_exact(m, x);
  if (!(2 * gh.distance < epsilon))
    fail(Errc::not_in_ball,
         "2 d_GH(M,X) = " + Rational(2 * gh.distance).str() + " is not below epsilon = " +
             epsilon.str());

  const Correspondence& r = gh.optimal.front();
  LabeledPartition partition;
  partition.reference_n = m.size();
  partition.blocks.assign(m.size(), {});
  for (auto [i, j] : r.pairs()) partition.blocks[i].push_back(j);

  if (block_of_point(partition, x.size()).empty())
    fail(Errc::property_check_failed, "optimal correspondence did not induce a partition");
  if (!verify_partition(m, x, epsilon, partition))
    fail(Errc::property_check_failed, "canonical partition failed its defining properties");
  return CanonicalPartitionResult{std::move(partition), gh.distance};
}

LabeledPartition canonical_partition(const MetricSpace& m, const MetricSpace& x,
                                     const Rational& epsilon) {
  return canonical_partition_result(m, x, epsilon).partition;
}

bool partition_blocks_small(const MetricSpace& x, const LabeledPartition& partition,
                            const Rational& epsilon) {
  for (const auto& block : partition.blocks)
    for (size_t a = 0; a < block.size(); ++a)
      for (size_t b = a + 1; b < block.size(); ++b)
        if (x.dist(block[a], block[b]) >= epsilon) return false;
  return true;
}

bool partition_matches_reference(const MetricSpace& m, const MetricSpace& x,
                                 const LabeledPartition& partition, const Rational& epsilon) {
  const int n = partition.reference_n;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int p : partition.blocks[i])
        for (int q : partition.blocks[j]) {
          Rational diff = x.dist(p, q) - m.dist(i, j);
          if (diff < 0) diff = -diff;
          if (diff >= epsilon) return false;
        }
  return true;
}

bool verify_partition(const MetricSpace& m, const MetricSpace& x, const Rational& epsilon,
                      const LabeledPartition& partition) {
  if (partition.reference_n != m.size()) return false;
  if (block_of_point(partition, x.size()).empty()) return false;
  return partition_blocks_small(x, partition, epsilon) &&
         partition_matches_reference(m, x, partition, epsilon);
}

bool labeling_is_unique(const MetricSpace& m, const MetricSpace& x, const Rational& epsilon) {
  const LabeledPartition base = canonical_partition(m, x, epsilon);
  const int n = base.reference_n;
  if (n > 8)
    fail(Errc::size_too_large_for_enumeration, "relabeling search is capped at 8 blocks");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  int valid = 0;
  do {
    LabeledPartition relabeled;
    relabeled.reference_n = n;
    relabeled.blocks.resize(n);
    for (int i = 0; i < n; ++i) relabeled.blocks[order[i]] = base.blocks[i];
    if (verify_partition(m, x, epsilon, relabeled)) ++valid;
  } while (std::next_permutation(order.begin(), order.end()));
  return valid == 1;
}

BlockDecomposition decompose_optimal(const Correspondence& r, const LabeledPartition& px,
                                     const LabeledPartition& py, bool strong) {
  const int n = px.reference_n;
  if (py.reference_n != n) fail(Errc::size_mismatch, "partitions have different reference sizes");
  const std::vector<int> bx = block_of_point(px, r.left_n());
  const std::vector<int> by = block_of_point(py, r.right_n());
  if (bx.empty() || by.empty())
    fail(Errc::invalid_argument, "partition does not cover the correspondence's sides");

  std::vector<int> psi(n, -1);
  for (auto [p, q] : r.pairs()) {
    const int i = bx[p];
    const int j = by[q];
    if (psi[i] == -1)
      psi[i] = j;
    else if (psi[i] != j)
      fail(Errc::not_block_structured,
           "block " + std::to_string(i + 1) + " is related to blocks " +
               std::to_string(psi[i] + 1) + " and " + std::to_string(j + 1),
           {i + 1, psi[i] + 1, j + 1});
  }
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (psi[i] == -1 || seen[psi[i]])
      fail(Errc::not_block_structured, "induced block map is not a bijection");
    seen[psi[i]] = true;
  }

  BlockDecomposition out;
  out.psi = psi;
  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<int, int>> sub;
    for (auto [p, q] : r.pairs())
      if (bx[p] == i) sub.emplace_back(p, q);
    out.blocks.emplace_back(r.left_n(), r.right_n(), std::move(sub));
  }

  // Each sub-relation must cover its block pair; anything else means the
  // inputs broke a precondition.
  for (int i = 0; i < n; ++i) {
    auto left_block = px.blocks[i];
    auto right_block = py.blocks[psi[i]];
    std::sort(left_block.begin(), left_block.end());
    std::sort(right_block.begin(), right_block.end());
    if (out.blocks[i].preimage(right_block) != left_block ||
        out.blocks[i].image(left_block) != right_block)
      fail(Errc::property_check_failed, "sub-relation does not cover its block pair");
  }

  if (strong)
    for (int i = 0; i < n; ++i)
      if (psi[i] != i)
        fail(Errc::psi_not_identity,
             "psi maps block " + std::to_string(i + 1) + " to " + std::to_string(psi[i] + 1),
             {i + 1, psi[i] + 1});
  return out;
}

}  // namespace ghml
