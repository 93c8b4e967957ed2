#pragma once

#include "ghml/metric_space.hpp"
#include "ghml/partition.hpp"
#include "ghml/rational.hpp"

#include <optional>
#include <vector>

namespace ghml {

// Admissible radius for the ball isometry between two same-size general
// position spaces: min{s(M)/4, e(M)/4, t(M)/3, s(N)/4, e(N)/4, t(N)/3}.
// Infinite exactly when both spaces are one-point.
ExtendedRational epsilon_bound(const MetricSpace& m, const MetricSpace& n);

// Metric change along the canonical partition of X with respect to M: within
// each block distances are kept, across blocks X_i, X_j each distance is
// shifted by |ij|_N - |ij|_M. Requires the same point count for M and N and
// 0 < epsilon <= min{s(M)/2, 2 s(N)/3, t(N)/3}. The output is re-validated
// and d_GH(N, V) <= d_GH(M, X) is asserted exactly; when epsilon also
// satisfies epsilon_bound(M, N), equality is asserted as well.
MetricSpace remap_metric(const MetricSpace& m, const MetricSpace& n, const MetricSpace& x,
                         const Rational& epsilon);

// The space with point i renumbered tau(i); tau is 0-based here.
MetricSpace permuted_space(const MetricSpace& m, const std::vector<int>& tau);

// The ball isometry between U_epsilon(M) and U_epsilon(N), for centers of
// equal size in general position and epsilon within epsilon_bound.
class BallMap {
 public:
  BallMap(MetricSpace m, MetricSpace n, Rational epsilon);

  // epsilon = epsilon_bound(M, N) when finite, 1 otherwise (a pair of
  // one-point centers has no upper restriction).
  static BallMap with_default_epsilon(MetricSpace m, MetricSpace n);

  const MetricSpace& domain_center() const { return m_; }
  const MetricSpace& codomain_center() const { return n_; }
  const Rational& epsilon() const { return epsilon_; }

  MetricSpace apply(const MetricSpace& x) const { return remap_metric(m_, n_, x, epsilon_); }
  BallMap inverse() const { return BallMap(n_, m_, epsilon_); }

 private:
  MetricSpace m_;
  MetricSpace n_;
  Rational epsilon_;
};

// The S_n family D_{M,M^tau,eps} together with a distinctness certificate: a
// witness with block sizes 1..n whose n! images are pairwise non-isometric.
struct SnOrbit {
  Rational epsilon;
  std::vector<std::vector<int>> taus;  // lexicographic order, 0-based
  std::vector<BallMap> maps;
  MetricSpace witness;
  std::vector<MetricSpace> images;
  bool pairwise_non_isometric;
};

SnOrbit sn_isometries(const MetricSpace& m, std::optional<Rational> epsilon = std::nullopt);

// A point of the cone over a ball: the apex (one-point space) or a positive
// scaling factor attached to a space from the ball.
class ConePoint {
 public:
  static ConePoint apex();
  ConePoint(Rational lambda, MetricSpace space);

  bool is_apex() const { return !payload_.has_value(); }
  const Rational& lambda() const;
  const MetricSpace& space() const;

 private:
  ConePoint() = default;
  std::optional<std::pair<Rational, MetricSpace>> payload_;
};

// Apex goes to apex; (lambda, X) goes to (lambda, D(X)) for X in the domain
// ball, which matches the scaled map D_{lambda M, lambda N, lambda eps}.
ConePoint cone_map(const BallMap& map, const ConePoint& point);

}  // namespace ghml
