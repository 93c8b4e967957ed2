#pragma once

#include "ghml/gh_solver.hpp"
#include "ghml/metric_space.hpp"
#include "ghml/relation.hpp"

#include <vector>

namespace ghml {

// Ordered blocks X_1..X_n of a space, labeled by points of a reference
// space of size reference_n. Blocks are disjoint, nonempty, and cover the
// space; indices 0-based and sorted within each block.
struct LabeledPartition {
  int reference_n = 0;
  std::vector<std::vector<int>> blocks;
};

// Block i = R(i) for the first optimal correspondence R between m and x in
// deterministic solver order. Requires 0 < epsilon <= s(M)/2 (no upper bound
// for a one-point M) and 2 d_GH(M, X) < epsilon, checked exactly.
LabeledPartition canonical_partition(const MetricSpace& m, const MetricSpace& x,
                                     const Rational& epsilon);

// Same computation, also handing back d_GH(M, X) from the ball check.
struct CanonicalPartitionResult {
  LabeledPartition partition;
  Rational gh_distance;
};
CanonicalPartitionResult canonical_partition_result(const MetricSpace& m, const MetricSpace& x,
                                                    const Rational& epsilon);

// Pure check of the two defining properties for this labeling:
// (1) diam X_i < epsilon, (2) | |xx'| - |ij|_M | < epsilon for x in X_i,
// x' in X_j. Structurally invalid partitions yield false.
bool verify_partition(const MetricSpace& m, const MetricSpace& x, const Rational& epsilon,
                      const LabeledPartition& partition);

// The individual properties, exposed for the diameter-from-property-2 check.
bool partition_blocks_small(const MetricSpace& x, const LabeledPartition& partition,
                            const Rational& epsilon);
bool partition_matches_reference(const MetricSpace& m, const MetricSpace& x,
                                 const LabeledPartition& partition, const Rational& epsilon);

// True iff exactly one labeling of the canonical block set satisfies
// verify_partition, decided by trying all n! relabelings (n <= 8).
bool labeling_is_unique(const MetricSpace& m, const MetricSpace& x, const Rational& epsilon);

// psi and the per-block sub-relations of a block-structured correspondence;
// blocks[i] relates X_i to Y_psi(i), in original coordinates.
struct BlockDecomposition {
  std::vector<int> psi;
  std::vector<Relation> blocks;
};

// Splits an optimal correspondence along canonical partitions. Throws
// NotBlockStructured when R relates one X-block to two Y-blocks (which means
// a precondition was violated), and PsiNotIdentity in strong mode when the
// induced bijection is not the identity.
BlockDecomposition decompose_optimal(const Correspondence& r, const LabeledPartition& px,
                                     const LabeledPartition& py, bool strong);

}  // namespace ghml
