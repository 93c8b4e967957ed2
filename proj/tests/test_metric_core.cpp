#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghml/error.hpp"
#include "ghml/metric_space.hpp"
#include "ghml/rational.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

using namespace ghml;

namespace {

MetricSpace from_upper(const std::vector<std::vector<Rational>>& upper) {
  const int n = static_cast<int>(upper.size()) + 1;
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 1; j < n; ++j) rows[i][j] = rows[j][i] = upper[i][j - i - 1];
  return MetricSpace::validate(rows);
}

MetricSpace space345() { return from_upper({{Rational(3), Rational(4)}, {Rational(5)}}); }

// Independent routes to the three invariants: s and e through the sorted
// distance list, t through unordered triples with all three pivots.
ExtendedRational oracle_s(const MetricSpace& x) {
  std::vector<Rational> d;
  for (int i = 0; i < x.size(); ++i)
    for (int j = i + 1; j < x.size(); ++j) d.push_back(x.dist(i, j));
  if (d.empty()) return ExtendedRational::infinity();
  return *std::min_element(d.begin(), d.end());
}

ExtendedRational oracle_e(const MetricSpace& x) {
  std::vector<Rational> d;
  for (int i = 0; i < x.size(); ++i)
    for (int j = i + 1; j < x.size(); ++j) d.push_back(x.dist(i, j));
  if (d.size() < 2) return ExtendedRational::infinity();
  std::sort(d.begin(), d.end());
  Rational best = d[1] - d[0];
  for (size_t k = 2; k < d.size(); ++k) best = std::min(best, d[k] - d[k - 1]);
  return best;
}

ExtendedRational oracle_t(const MetricSpace& x) {
  ExtendedRational best = ExtendedRational::infinity();
  for (int i = 0; i < x.size(); ++i)
    for (int j = i + 1; j < x.size(); ++j)
      for (int k = j + 1; k < x.size(); ++k) {
        best = ExtendedRational::min(best, x.dist(i, j) + x.dist(j, k) - x.dist(i, k));
        best = ExtendedRational::min(best, x.dist(i, k) + x.dist(k, j) - x.dist(i, j));
        best = ExtendedRational::min(best, x.dist(j, i) + x.dist(i, k) - x.dist(j, k));
      }
  return best;
}

// Smallest candidate r with A inside the r-neighborhood of B and vice versa.
Rational oracle_hausdorff(const MetricSpace& x, std::vector<int> a, std::vector<int> b) {
  std::vector<Rational> candidates;
  for (int p : a)
    for (int q : b) candidates.push_back(x.dist(p, q));
  std::sort(candidates.begin(), candidates.end());
  auto within = [&](const std::vector<int>& from, const std::vector<int>& to, const Rational& r) {
    for (int p : from) {
      bool ok = false;
      for (int q : to)
        if (x.dist(p, q) <= r) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
    return true;
  };
  for (const Rational& r : candidates)
    if (within(a, b, r) && within(b, a, r)) return r;
  return candidates.back();
}

// Valid by construction: distances in [1, 2) satisfy every triangle strictly.
MetricSpace random_space(std::mt19937_64& rng, int n) {
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      rows[i][j] = rows[j][i] = Rational(1) + Rational(static_cast<int>(rng() % 1000), 1000);
  return MetricSpace::validate(rows);
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::internal_error;
}

}  // namespace

TEST_CASE("validate accepts a two-point space") {
  const MetricSpace x = MetricSpace::validate({{Rational(0), Rational(3)},
                                               {Rational(3), Rational(0)}});
  CHECK(x.size() == 2);
  CHECK(x.dist(0, 1) == 3);
}

TEST_CASE("validate reports the first violated axiom with its witnesses") {
  try {
    MetricSpace::validate({{Rational(0), Rational(1)}, {Rational(2), Rational(0)}});
    FAIL("expected NotSymmetric");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_symmetric);
    CHECK(e.where() == std::vector<int>{1, 2});
  }

  try {
    MetricSpace::validate({{Rational(0), Rational(1), Rational(5)},
                           {Rational(1), Rational(0), Rational(1)},
                           {Rational(5), Rational(1), Rational(0)}});
    FAIL("expected TriangleViolation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::triangle_violation);
    CHECK(e.where() == std::vector<int>{1, 2, 3});
  }

  CHECK(code_of([] {
          MetricSpace::validate({{Rational(1)}});
        }) == Errc::nonzero_diagonal);
  CHECK(code_of([] {
          MetricSpace::validate({{Rational(0), Rational(0)}, {Rational(0), Rational(0)}});
        }) == Errc::nonpositive_off_diagonal);
  CHECK(code_of([] {
          MetricSpace::validate({{Rational(0), Rational(-1)}, {Rational(-1), Rational(0)}});
        }) == Errc::nonpositive_off_diagonal);
}

TEST_CASE("invariant profile of the 3,4,5 space") {
  const InvariantProfile p = invariant_profile(space345());
  CHECK(p.s == ExtendedRational(3));
  CHECK(p.e == ExtendedRational(1));
  CHECK(p.t == ExtendedRational(2));
  CHECK(p.delta == ExtendedRational(1));
}

TEST_CASE("invariant profile degenerate sizes") {
  const InvariantProfile one = invariant_profile(MetricSpace::point());
  CHECK(!one.s.is_finite());
  CHECK(!one.e.is_finite());
  CHECK(!one.t.is_finite());
  CHECK(!one.delta.is_finite());

  const MetricSpace two = MetricSpace::validate({{Rational(0), Rational(7)},
                                                 {Rational(7), Rational(0)}});
  const InvariantProfile p = invariant_profile(two);
  CHECK(p.s == ExtendedRational(7));
  CHECK(!p.e.is_finite());
  CHECK(!p.t.is_finite());
  CHECK(p.delta == ExtendedRational(7));
}

TEST_CASE("profile matches the independent oracles on random spaces") {
  std::mt19937_64 rng(20240811);
  for (int round = 0; round < 60; ++round) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const MetricSpace x = random_space(rng, n);
    const InvariantProfile p = invariant_profile(x);
    CHECK(p.s == oracle_s(x));
    CHECK(p.e == oracle_e(x));
    CHECK(p.t == oracle_t(x));
    CHECK(p.delta == ExtendedRational::min(p.s, ExtendedRational::min(p.e, p.t)));
    CHECK(is_general_position(x) == (p.delta > ExtendedRational(0)));
  }
}

TEST_CASE("general position") {
  CHECK(is_general_position(space345()));
  CHECK(is_general_position(MetricSpace::point()));
  const MetricSpace equilateral = from_upper({{Rational(1), Rational(1)}, {Rational(1)}});
  CHECK(!is_general_position(equilateral));  // repeated distances force e = 0
}

TEST_CASE("scaling") {
  const MetricSpace x = space345();
  const MetricSpace doubled = x.scaled(Rational(2));
  CHECK(doubled.dist(0, 1) == 6);
  CHECK(doubled.dist(0, 2) == 8);
  CHECK(doubled.dist(1, 2) == 10);
  CHECK(x.scaled(Rational(1)).same_matrix(x));
  CHECK(code_of([&] { x.scaled(Rational(0)); }) == Errc::nonpositive_scale);
  CHECK(code_of([&] { x.scaled(Rational(-2)); }) == Errc::nonpositive_scale);

  const InvariantProfile p = invariant_profile(doubled);
  CHECK(p.s == ExtendedRational(6));
  CHECK(p.e == ExtendedRational(2));
  CHECK(p.t == ExtendedRational(4));
}

TEST_CASE("profile scaling homogeneity on random spaces") {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 25; ++round) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const MetricSpace x = random_space(rng, n);
    const Rational lambda(static_cast<int>(1 + rng() % 40), 8);
    const InvariantProfile p = invariant_profile(x);
    const InvariantProfile q = invariant_profile(x.scaled(lambda));
    CHECK(q.s == p.s.scaled(lambda));
    CHECK(q.e == p.e.scaled(lambda));
    CHECK(q.t == p.t.scaled(lambda));
    CHECK(q.delta == p.delta.scaled(lambda));
  }
}

TEST_CASE("diameter") {
  CHECK(space345().diameter() == 5);
  CHECK(MetricSpace::point().diameter() == 0);
  CHECK(space345().scaled(Rational(7, 2)).diameter() == Rational(35, 2));
}

TEST_CASE("set distances") {
  const MetricSpace x = space345();
  const std::vector<int> p0{0}, p1{1}, p2{2}, p01{0, 1};
  CHECK(set_distances(x, p0, p1) == std::pair{Rational(3), Rational(3)});
  CHECK(set_distances(x, p01, p2) == std::pair{Rational(4), Rational(5)});
  CHECK(set_distances(x, p01, p01) == std::pair{Rational(0), Rational(3)});
  CHECK(code_of([&] { set_distances(x, {}, p1); }) == Errc::empty_subset);
}

TEST_CASE("hausdorff distance") {
  const MetricSpace x = space345();
  const std::vector<int> p0{0}, p12{1, 2}, all{0, 1, 2};
  CHECK(hausdorff_distance(x, all, all) == 0);
  CHECK(hausdorff_distance(x, p0, p0) == 0);
  // one-sided nearest distances are (3, then max(3,4)); fixed by the oracle
  CHECK(oracle_hausdorff(x, {0}, {1, 2}) == 4);
  CHECK(hausdorff_distance(x, p0, p12) == 4);
  CHECK(code_of([&] { hausdorff_distance(x, p0, {}); }) == Errc::empty_subset);
}

TEST_CASE("hausdorff properties on random spaces") {
  std::mt19937_64 rng(991);
  for (int round = 0; round < 40; ++round) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const MetricSpace x = random_space(rng, n);
    std::vector<int> a, b;
    for (int i = 0; i < n; ++i) {
      if (rng() % 2) a.push_back(i);
      if (rng() % 2) b.push_back(i);
    }
    if (a.empty()) a.push_back(static_cast<int>(rng() % n));
    if (b.empty()) b.push_back(static_cast<int>(rng() % n));
    const Rational d = hausdorff_distance(x, a, b);
    CHECK(d == hausdorff_distance(x, b, a));
    CHECK(d == oracle_hausdorff(x, a, b));
    CHECK(hausdorff_distance(x, a, a) == 0);
  }
}

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("+7") == Rational(7));
  CHECK(parse_rational(" 4/8 ") == Rational(1, 2));
  CHECK(to_string(Rational(10, 4)) == "5/2");
  CHECK(to_string(Rational(-3)) == "-3");
  CHECK(code_of([] { parse_rational("x"); }) == Errc::parse_error);
  CHECK(code_of([] { parse_rational("1/0"); }) == Errc::parse_error);
  CHECK(code_of([] { parse_rational("1.5"); }) == Errc::parse_error);
  CHECK(code_of([] { parse_rational(""); }) == Errc::parse_error);

  CHECK(parse_extended_rational("inf") == ExtendedRational::infinity());
  CHECK(ExtendedRational::infinity() > ExtendedRational(Rational(1000000)));
  CHECK(ExtendedRational::min(ExtendedRational::infinity(), ExtendedRational(2)) ==
        ExtendedRational(2));
  CHECK(ExtendedRational::infinity().scaled(Rational(3)) == ExtendedRational::infinity());
  CHECK((ExtendedRational::infinity() / 4) == ExtendedRational::infinity());
}
