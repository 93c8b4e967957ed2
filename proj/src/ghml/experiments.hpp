#pragma once

#include "ghml/generators.hpp"
#include "ghml/local_isometry.hpp"
#include "ghml/rational.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace ghml {

inline constexpr const char* kReportSchema = "gh-metric-lab/report-v1";

struct ExperimentConfig {
  std::uint64_t seed = 0;
  int n = 3;
  int trials = 1;
  int cluster_size_max = 2;
  Rational epsilon_fraction = Rational(1);  // fraction of the admissible bound
  int max_total_points = 8;

  void check() const;
  static ExperimentConfig from_json(const std::string& text);
  nlohmann::ordered_json to_json() const;
};

struct ExperimentReport {
  nlohmann::ordered_json doc;
  bool aggregate_pass = false;

  std::string to_string() const { return doc.dump(2); }
};

// Per trial: general position centers M, N; X, Y sampled in U_epsilon(M);
// verdict is d_GH(X, Y) = d_GH(D(X), D(Y)) exactly, plus the exact inverse
// round-trip of both images.
ExperimentReport run_isometry_experiment(const ExperimentConfig& config);

// Per trial: the n! maps D_{M,M^tau} on a fresh general position M, with the
// pairwise non-isometry verdict of the witness images.
ExperimentReport run_sn_experiment(const ExperimentConfig& config);

// Per trial: exact lambda-homogeneity of d_GH on random small spaces, and
// structural apex fixing of the cone map.
ExperimentReport run_cone_experiment(const ExperimentConfig& config);

// Report form of sn_isometries for one given center.
ExperimentReport sn_orbit_report(const MetricSpace& m, std::optional<Rational> epsilon);

}  // namespace ghml
