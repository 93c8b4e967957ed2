#include "ghml/local_isometry.hpp"

#include "ghml/error.hpp"
#include "ghml/gh_solver.hpp"

#include <algorithm>
#include <numeric>

namespace ghml {

ExtendedRational epsilon_bound(const MetricSpace& m, const MetricSpace& n) {
  if (m.size() != n.size()) fail(Errc::size_mismatch, "centers must have equal point counts");
  if (!is_general_position(m) || !is_general_position(n))
    fail(Errc::not_general_position, "both centers must be in general position");
  const InvariantProfile pm = invariant_profile(m);
  const InvariantProfile pn = invariant_profile(n);
  ExtendedRational bound = pm.s / 4;
  bound = ExtendedRational::min(bound, pm.e / 4);
  bound = ExtendedRational::min(bound, pm.t / 3);
  bound = ExtendedRational::min(bound, pn.s / 4);
  bound = ExtendedRational::min(bound, pn.e / 4);
  bound = ExtendedRational::min(bound, pn.t / 3);
  return bound;
}

MetricSpace remap_metric(const MetricSpace& m, const MetricSpace& n, const MetricSpace& x,
                         const Rational& epsilon) {
  if (m.size() != n.size()) fail(Errc::size_mismatch, "M and N must have equal point counts");

  const InvariantProfile pm = invariant_profile(m);
  const InvariantProfile pn = invariant_profile(n);
  ExtendedRational weak = pm.s / 2;
  weak = ExtendedRational::min(weak, pn.s.scaled(Rational(2, 3)));
  weak = ExtendedRational::min(weak, pn.t / 3);
  if (epsilon <= 0 || ExtendedRational(epsilon) > weak)
    fail(Errc::epsilon_out_of_range,
         "epsilon " + epsilon.str() + " outside (0, " + weak.str() + "]");

  const auto [partition, distance_mx] = canonical_partition_result(m, x, epsilon);
  std::vector<int> owner(x.size(), -1);
  for (int b = 0; b < static_cast<int>(partition.blocks.size()); ++b)
    for (int p : partition.blocks[b]) owner[p] = b;

  auto rows = x.rows();
  for (int p = 0; p < x.size(); ++p)
    for (int q = 0; q < x.size(); ++q) {
      const int i = owner[p];
      const int j = owner[q];
      if (i != j) rows[p][q] += n.dist(i, j) - m.dist(i, j);
    }

  MetricSpace v = [&] {
    try {
      return MetricSpace::validate(rows);
    } catch (const Error& e) {
      fail(Errc::metric_violation,
           std::string("remapped distances are not a metric: ") + e.what(), e.where());
    }
  }();

  const Rational distance_nv = gh_distance_exact(n, v).distance;
  if (distance_nv > distance_mx)
    fail(Errc::property_check_failed, "d_GH(N,V) exceeds d_GH(M,X) after remap");
  if (is_general_position(m) && is_general_position(n) &&
      ExtendedRational(epsilon) <= epsilon_bound(m, n) && distance_nv != distance_mx)
    fail(Errc::property_check_failed, "d_GH(N,V) differs from d_GH(M,X) under the isometry bound");
  return v;
}

MetricSpace permuted_space(const MetricSpace& m, const std::vector<int>& tau) {
  const int n = m.size();
  if (static_cast<int>(tau.size()) != n)
    fail(Errc::not_a_permutation, "permutation length differs from the point count");
  std::vector<bool> seen(n, false);
  for (int v : tau) {
    if (v < 0 || v >= n || seen[v])
      fail(Errc::not_a_permutation, "not a permutation of the point range");
    seen[v] = true;
  }
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[tau[i]][tau[j]] = m.dist(i, j);
  return MetricSpace::validate(rows);
}

BallMap::BallMap(MetricSpace m, MetricSpace n, Rational epsilon)
    : m_(std::move(m)), n_(std::move(n)), epsilon_(std::move(epsilon)) {
  const ExtendedRational bound = epsilon_bound(m_, n_);
  if (epsilon_ <= 0 || ExtendedRational(epsilon_) > bound)
    fail(Errc::epsilon_out_of_range,
         "epsilon " + epsilon_.str() + " outside (0, " + bound.str() + "]");
}

BallMap BallMap::with_default_epsilon(MetricSpace m, MetricSpace n) {
  const ExtendedRational bound = epsilon_bound(m, n);
  Rational eps = bound.is_finite() ? bound.value() : Rational(1);
  return BallMap(std::move(m), std::move(n), std::move(eps));
}

namespace {

// Witness with block sizes 1..n placed at M's points: cross-block distances
// copy M exactly, intra-block distances are distinct rationals strictly
// between eps/8 and eps/4, so the blow-up correspondence certifies
// 2 d_GH(M, X) < eps.
MetricSpace sn_witness(const MetricSpace& m, const Rational& epsilon) {
  const int n = m.size();
  const int total = n * (n + 1) / 2;
  std::vector<int> owner;
  for (int b = 0; b < n; ++b)
    for (int c = 0; c <= b; ++c) owner.push_back(b);

  int intra_pairs = 0;
  for (int b = 0; b < n; ++b) intra_pairs += b * (b + 1) / 2;

  const Rational low = epsilon / 8;
  std::vector<std::vector<Rational>> rows(total, std::vector<Rational>(total, Rational(0)));
  int k = 1;
  for (int p = 0; p < total; ++p)
    for (int q = p + 1; q < total; ++q) {
      if (owner[p] == owner[q]) {
        rows[p][q] = rows[q][p] = low + low * k / (intra_pairs + 1);
        ++k;
      } else {
        rows[p][q] = rows[q][p] = m.dist(owner[p], owner[q]);
      }
    }
  return MetricSpace::validate(rows);
}

}  // namespace

SnOrbit sn_isometries(const MetricSpace& m, std::optional<Rational> epsilon) {
  const int n = m.size();
  if (n < 3) fail(Errc::invalid_argument, "the S_n family needs at least three points");
  if (n > 6) fail(Errc::size_too_large_for_enumeration, "S_n orbit is capped at 6 points");
  if (!is_general_position(m))
    fail(Errc::not_general_position, "the center must be in general position");

  std::vector<std::vector<int>> taus;
  std::vector<int> tau(n);
  std::iota(tau.begin(), tau.end(), 0);
  ExtendedRational bound = ExtendedRational::infinity();
  do {
    taus.push_back(tau);
    bound = ExtendedRational::min(bound, epsilon_bound(m, permuted_space(m, tau)));
  } while (std::next_permutation(tau.begin(), tau.end()));

  Rational eps = epsilon.value_or(bound.value());
  if (eps <= 0 || ExtendedRational(eps) > bound)
    fail(Errc::epsilon_out_of_range, "epsilon " + eps.str() + " outside (0, " + bound.str() + "]");

  SnOrbit orbit{eps, std::move(taus), {}, sn_witness(m, eps), {}, true};

  if (2 * gh_distance_exact(m, orbit.witness).distance >= eps)
    fail(Errc::witness_construction_failed, "witness fell outside the ball");

  for (const auto& t : orbit.taus) {
    BallMap map(m, permuted_space(m, t), eps);
    orbit.images.push_back(map.apply(orbit.witness));
    orbit.maps.push_back(std::move(map));
  }
  for (size_t a = 0; a < orbit.images.size() && orbit.pairwise_non_isometric; ++a)
    for (size_t b = a + 1; b < orbit.images.size(); ++b)
      if (is_isometric(orbit.images[a], orbit.images[b])) {
        orbit.pairwise_non_isometric = false;
        break;
      }
  return orbit;
}

ConePoint ConePoint::apex() { return ConePoint(); }

ConePoint::ConePoint(Rational lambda, MetricSpace space) {
  if (lambda <= 0) fail(Errc::nonpositive_scale, "cone scaling factor must be positive");
  payload_.emplace(std::move(lambda), std::move(space));
}

const Rational& ConePoint::lambda() const {
  if (is_apex()) fail(Errc::not_in_cone, "the apex has no scaling factor");
  return payload_->first;
}

const MetricSpace& ConePoint::space() const {
  if (is_apex()) fail(Errc::not_in_cone, "the apex has no space payload");
  return payload_->second;
}

ConePoint cone_map(const BallMap& map, const ConePoint& point) {
  if (point.is_apex()) return ConePoint::apex();
  if (2 * gh_distance_exact(map.domain_center(), point.space()).distance >= map.epsilon())
    fail(Errc::not_in_cone, "the cone point's space lies outside the domain ball");
  return ConePoint(point.lambda(), map.apply(point.space()));
}

}  // namespace ghml
