#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghml/error.hpp"
#include "ghml/gh_solver.hpp"
#include "ghml/metric_space.hpp"
#include "ghml/partition.hpp"

#include <algorithm>
#include <random>
#include <vector>

using namespace ghml;

namespace {

MetricSpace space345() {
  return MetricSpace::validate({{Rational(0), Rational(3), Rational(4)},
                                {Rational(3), Rational(0), Rational(5)},
                                {Rational(4), Rational(5), Rational(0)}});
}

// The four-point thickening of the 3,4,5 space: point 1 blown up to a pair
// at distance 1/10, the other distances nudged off their reference values.
MetricSpace blowup345() {
  const Rational d01(1, 10), d02(3), d12(61, 20), d03(4), d13(199, 50), d23(5);
  return MetricSpace::validate({{Rational(0), d01, d02, d03},
                                {d01, Rational(0), d12, d13},
                                {d02, d12, Rational(0), d23},
                                {d03, d13, d23, Rational(0)}});
}

// Blocks of the given sizes placed at m's points: cross distances copy m,
// intra distances are small distinct rationals below `tiny`.
MetricSpace blow_up(const MetricSpace& m, const std::vector<int>& sizes, const Rational& tiny) {
  std::vector<int> owner;
  for (int b = 0; b < static_cast<int>(sizes.size()); ++b)
    for (int c = 0; c < sizes[b]; ++c) owner.push_back(b);
  const int total = static_cast<int>(owner.size());
  int pairs = 0;
  for (int s : sizes) pairs += s * (s - 1) / 2;
  std::vector<std::vector<Rational>> rows(total, std::vector<Rational>(total, Rational(0)));
  int k = 1;
  for (int p = 0; p < total; ++p)
    for (int q = p + 1; q < total; ++q) {
      if (owner[p] == owner[q]) {
        rows[p][q] = rows[q][p] = tiny / 2 + tiny * k / (2 * (pairs + 1));
        ++k;
      } else {
        rows[p][q] = rows[q][p] = m.dist(owner[p], owner[q]);
      }
    }
  return MetricSpace::validate(rows);
}

std::vector<std::vector<int>> as_sorted_family(std::vector<std::vector<int>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

}  // namespace

TEST_CASE("canonical partition of the reference itself is all singletons") {
  const MetricSpace m = space345();
  const LabeledPartition p = canonical_partition(m, m, Rational(1, 4));
  REQUIRE(p.blocks.size() == 3);
  CHECK(p.blocks[0] == std::vector<int>{0});
  CHECK(p.blocks[1] == std::vector<int>{1});
  CHECK(p.blocks[2] == std::vector<int>{2});
}

TEST_CASE("canonical partition of the four-point thickening") {
  const MetricSpace m = space345();
  const MetricSpace x = blowup345();
  // the blow-up correspondence has distortion 1/10 < 1/4
  const LabeledPartition p = canonical_partition(m, x, Rational(1, 4));
  CHECK(p.blocks[0] == std::vector<int>{0, 1});
  CHECK(p.blocks[1] == std::vector<int>{2});
  CHECK(p.blocks[2] == std::vector<int>{3});
  CHECK(verify_partition(m, x, Rational(1, 4), p));
}

TEST_CASE("one-point reference: a single block and no epsilon cap") {
  const MetricSpace x = space345();
  const LabeledPartition p = canonical_partition(MetricSpace::point(), x, Rational(6));
  REQUIRE(p.blocks.size() == 1);
  CHECK(p.blocks[0] == std::vector<int>{0, 1, 2});
  CHECK(verify_partition(MetricSpace::point(), x, Rational(6), p));
}

TEST_CASE("epsilon range and ball membership are enforced") {
  const MetricSpace m = space345();
  CHECK_THROWS_WITH_AS(canonical_partition(m, m, Rational(2)), doctest::Contains("s(M)/2"),
                       const Error&);
  CHECK_THROWS_AS(canonical_partition(m, m, Rational(0)), const Error&);
  // a faraway space: diam 50 two-point space
  const MetricSpace far = MetricSpace::validate({{Rational(0), Rational(50)},
                                                 {Rational(50), Rational(0)}});
  try {
    canonical_partition(m, far, Rational(1, 4));
    FAIL("expected NotInBall");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_in_ball);
  }
}

TEST_CASE("verify_partition rejects wrong labelings and fat blocks") {
  const MetricSpace m = space345();
  const MetricSpace x = blowup345();
  const Rational eps(1, 4);
  const LabeledPartition good = canonical_partition(m, x, eps);
  CHECK(verify_partition(m, x, eps, good));

  LabeledPartition swapped = good;
  std::swap(swapped.blocks[0], swapped.blocks[1]);
  CHECK(!verify_partition(m, x, eps, swapped));

  // a block of diameter >= eps fails property (1)
  LabeledPartition fat;
  fat.reference_n = 3;
  fat.blocks = {{0, 1, 2}, {3}, {}};
  CHECK(!verify_partition(m, x, eps, fat));  // also structurally bad: empty block
  fat.blocks = {{0, 2}, {1}, {3}};
  CHECK(!partition_blocks_small(x, fat, eps));
  CHECK(!verify_partition(m, x, eps, fat));
}

TEST_CASE("property (2) alone bounds the block diameters") {
  const MetricSpace m = space345();
  const MetricSpace x = blowup345();
  const Rational eps(1, 4);
  const LabeledPartition p = canonical_partition(m, x, eps);
  REQUIRE(partition_matches_reference(m, x, p, eps));
  for (const auto& block : p.blocks)
    for (size_t a = 0; a < block.size(); ++a)
      for (size_t b = a + 1; b < block.size(); ++b)
        CHECK(x.dist(block[a], block[b]) <= eps);
}

TEST_CASE("labeling uniqueness") {
  SUBCASE("n = 3 in general position, epsilon within half min{s, e}") {
    const MetricSpace m = space345();
    CHECK(labeling_is_unique(m, blowup345(), Rational(1, 4)));
    CHECK(labeling_is_unique(m, m, Rational(1, 2)));
  }
  SUBCASE("n = 2 with nonisometric blocks has two numerations") {
    const MetricSpace m = MetricSpace::validate({{Rational(0), Rational(3)},
                                                 {Rational(3), Rational(0)}});
    const MetricSpace x = blow_up(m, {2, 1}, Rational(1, 10));
    CHECK(!labeling_is_unique(m, x, Rational(1, 4)));
  }
  SUBCASE("n = 1 is trivially unique") {
    CHECK(labeling_is_unique(MetricSpace::point(), space345(), Rational(20)));
  }
}

TEST_CASE("unlabeled partition is independent of the optimal correspondence") {
  const MetricSpace m = space345();
  std::mt19937_64 rng(4242);
  for (int round = 0; round < 20; ++round) {
    std::vector<int> sizes{1, 1, 1};
    sizes[static_cast<int>(rng() % 3)] = 2;
    const Rational tiny(1 + static_cast<int>(rng() % 50), 400);
    const MetricSpace x = blow_up(m, sizes, tiny);
    const Rational eps(1, 2);  // s(M)/2 would be 3/2; stay within min{s,e}/2
    const GhResult gh = gh_distance_exact(m, x);
    REQUIRE(gh.complete);
    REQUIRE(2 * gh.distance < eps);
    std::vector<std::vector<std::vector<int>>> families;
    for (const auto& r : gh.optimal) {
      std::vector<std::vector<int>> blocks(m.size());
      for (auto [i, j] : r.pairs()) blocks[i].push_back(j);
      families.push_back(as_sorted_family(blocks));
    }
    for (const auto& family : families) CHECK(family == families.front());
  }
}

TEST_CASE("labeled partition is unique across optimal correspondences") {
  // n >= 3, e(M) > 0, eps <= min{s(M), e(M)}/2: every optimal correspondence
  // induces the same labeled blocks
  const MetricSpace m = space345();
  const Rational eps(1, 2);
  std::mt19937_64 rng(9001);
  for (int round = 0; round < 20; ++round) {
    std::vector<int> sizes{1, 1, 1};
    sizes[static_cast<int>(rng() % 3)] = 1 + static_cast<int>(rng() % 2);
    const MetricSpace x = blow_up(m, sizes, Rational(1 + static_cast<int>(rng() % 60), 500));
    const GhResult gh = gh_distance_exact(m, x);
    REQUIRE(gh.complete);
    REQUIRE(2 * gh.distance < eps);
    std::vector<std::vector<int>> first;
    for (const auto& r : gh.optimal) {
      std::vector<std::vector<int>> blocks(m.size());
      for (auto [i, j] : r.pairs()) blocks[i].push_back(j);
      for (auto& b : blocks) std::sort(b.begin(), b.end());
      if (first.empty())
        first = blocks;
      else
        CHECK(blocks == first);
    }
  }
}

TEST_CASE("decompose_optimal splits along blocks") {
  const MetricSpace m = space345();
  const MetricSpace x = blowup345();
  const Rational eps(1, 4);
  const LabeledPartition px = canonical_partition(m, x, eps);

  SUBCASE("identity on X = Y") {
    const GhResult gh = gh_distance_exact(x, x);
    bool checked_identity = false;
    for (const auto& r : gh.optimal) {
      const BlockDecomposition d = decompose_optimal(r, px, px, false);
      CHECK(d.psi == std::vector<int>{0, 1, 2});
      if (r.pairs() ==
          std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {2, 2}, {3, 3}}) {
        checked_identity = true;
        for (const auto& sub : d.blocks) CHECK(distortion(sub, x, x) == 0);
      }
    }
    CHECK(checked_identity);
  }

  SUBCASE("every optimal correspondence between two thickenings has psi = identity") {
    // second space: the reference with its cross distances nudged
    const MetricSpace y = MetricSpace::validate(
        {{Rational(0), Rational(301, 100), Rational(399, 100)},
         {Rational(301, 100), Rational(0), Rational(501, 100)},
         {Rational(399, 100), Rational(501, 100), Rational(0)}});
    REQUIRE(2 * gh_distance_exact(m, y).distance < eps);
    const LabeledPartition py = canonical_partition(m, y, eps);
    const GhResult gh = gh_distance_exact(x, y);
    REQUIRE(gh.complete);
    for (const auto& r : gh.optimal) {
      const BlockDecomposition d = decompose_optimal(r, px, py, true);
      CHECK(d.psi == std::vector<int>{0, 1, 2});
      // the union of the sub-relations is the decomposed correspondence
      std::vector<std::pair<int, int>> merged;
      for (const auto& sub : d.blocks)
        merged.insert(merged.end(), sub.pairs().begin(), sub.pairs().end());
      std::sort(merged.begin(), merged.end());
      CHECK(merged == r.pairs());
    }
  }
}

TEST_CASE("swapped two-block construction yields a transposition") {
  const MetricSpace m = MetricSpace::validate({{Rational(0), Rational(4)},
                                               {Rational(4), Rational(0)}});
  // X: singleton then pair; Y: pair then singleton (isometric spaces)
  const MetricSpace x = blow_up(m, {1, 2}, Rational(1, 10));
  const MetricSpace y = blow_up(m, {2, 1}, Rational(1, 10));

  // hand-picked valid labelings that realize the swap
  LabeledPartition px{2, {{0}, {1, 2}}};
  LabeledPartition py{2, {{0, 1}, {2}}};
  const Rational eps(1);  // s(M)/4 = 1
  REQUIRE(verify_partition(m, x, eps, px));
  REQUIRE(verify_partition(m, y, eps, py));

  const GhResult gh = gh_distance_exact(x, y);
  REQUIRE(gh.distance == 0);
  REQUIRE(gh.complete);
  bool saw_transposition = false;
  for (const auto& r : gh.optimal) {
    const BlockDecomposition d = decompose_optimal(r, px, py, false);
    if (d.psi == std::vector<int>{1, 0}) saw_transposition = true;
    CHECK_THROWS_AS(decompose_optimal(r, px, py, true), const Error&);
  }
  CHECK(saw_transposition);
}

TEST_CASE("decompose_optimal rejects block-mixing correspondences") {
  const MetricSpace m = space345();
  const MetricSpace x = blowup345();
  const LabeledPartition px = canonical_partition(m, x, Rational(1, 4));
  // the full relation mixes every block
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) all.emplace_back(i, j);
  const Correspondence mixing(4, 4, all);
  try {
    decompose_optimal(mixing, px, px, false);
    FAIL("expected NotBlockStructured");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_block_structured);
  }
}
