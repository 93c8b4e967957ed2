#include "ghml/experiments.hpp"

#include "ghml/error.hpp"
#include "ghml/gh_solver.hpp"
#include "ghml/space_io.hpp"

#include <algorithm>
#include <vector>

namespace ghml {

using nlohmann::ordered_json;

void ExperimentConfig::check() const {
  if (n < 1) fail(Errc::invalid_argument, "n must be at least 1");
  if (trials < 1) fail(Errc::invalid_argument, "trials must be at least 1");
  if (cluster_size_max < 1) fail(Errc::invalid_argument, "cluster_size_max must be at least 1");
  if (epsilon_fraction <= 0 || epsilon_fraction > 1)
    fail(Errc::invalid_argument, "epsilon_fraction must lie in (0, 1]");
  if (max_total_points < n)
    fail(Errc::invalid_argument, "max_total_points cannot be below n");
}

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, std::string("invalid config JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(Errc::parse_error, "config must be a JSON object");
  ExperimentConfig config;
  if (doc.contains("seed")) config.seed = doc["seed"].get<std::uint64_t>();
  if (doc.contains("n")) config.n = doc["n"].get<int>();
  if (doc.contains("trials")) config.trials = doc["trials"].get<int>();
  if (doc.contains("cluster_size_max"))
    config.cluster_size_max = doc["cluster_size_max"].get<int>();
  if (doc.contains("epsilon_fraction"))
    config.epsilon_fraction = parse_rational(doc["epsilon_fraction"].get<std::string>());
  if (doc.contains("max_total_points"))
    config.max_total_points = doc["max_total_points"].get<int>();
  config.check();
  return config;
}

ordered_json ExperimentConfig::to_json() const {
  return ordered_json{{"seed", seed},
                      {"n", n},
                      {"trials", trials},
                      {"cluster_size_max", cluster_size_max},
                      {"epsilon_fraction", epsilon_fraction.str()},
                      {"max_total_points", max_total_points}};
}

namespace {

ordered_json report_header(const char* experiment, const ExperimentConfig& config) {
  return ordered_json{{"schema", kReportSchema},
                      {"experiment", experiment},
                      {"prng", Prng::kAlgorithm},
                      {"config", config.to_json()}};
}

std::vector<int> sample_cluster_sizes(Prng& rng, const ExperimentConfig& config) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<int> sizes(config.n);
    int total = 0;
    for (int& s : sizes) {
      s = 1 + static_cast<int>(rng.uniform_below(config.cluster_size_max));
      total += s;
    }
    if (total <= config.max_total_points) return sizes;
  }
  fail(Errc::generation_failed, "could not sample cluster sizes under the point cap");
}

ordered_json sizes_json(const std::vector<int>& sizes) {
  return ordered_json(sizes);
}

}  // namespace

ExperimentReport run_isometry_experiment(const ExperimentConfig& config) {
  config.check();
  Prng rng(config.seed);
  ordered_json trials = ordered_json::array();
  bool all_pass = true;
  std::uint64_t nodes = 0;

  for (int trial = 0; trial < config.trials; ++trial) {
    const MetricSpace m = gen_general_position(rng, config.n, Rational(1));
    const MetricSpace n = gen_general_position(rng, config.n, Rational(1));
    const ExtendedRational bound = epsilon_bound(m, n);
    const Rational eps =
        config.epsilon_fraction * (bound.is_finite() ? bound.value() : Rational(1));

    const auto sizes_x = sample_cluster_sizes(rng, config);
    const auto sizes_y = sample_cluster_sizes(rng, config);
    const MetricSpace x = gen_in_ball(rng, m, eps, sizes_x).space;
    const MetricSpace y = gen_in_ball(rng, m, eps, sizes_y).space;

    const BallMap map(m, n, eps);
    const MetricSpace v = map.apply(x);
    const MetricSpace w = map.apply(y);

    const GhResult before = gh_distance_exact(x, y);
    const GhResult after = gh_distance_exact(v, w);
    nodes += before.nodes + after.nodes;

    const bool distances_equal = before.distance == after.distance;
    const bool round_trip = map.inverse().apply(v).same_matrix(x) &&
                            map.inverse().apply(w).same_matrix(y);
    const bool pass = distances_equal && round_trip;
    all_pass = all_pass && pass;

    trials.push_back(ordered_json{{"index", trial},
                                  {"M", space_to_json(m)},
                                  {"N", space_to_json(n)},
                                  {"epsilon", eps.str()},
                                  {"cluster_sizes_x", sizes_json(sizes_x)},
                                  {"cluster_sizes_y", sizes_json(sizes_y)},
                                  {"X", space_to_json(x)},
                                  {"Y", space_to_json(y)},
                                  {"d_gh_xy", before.distance.str()},
                                  {"d_gh_images", after.distance.str()},
                                  {"distances_equal", distances_equal},
                                  {"round_trip_exact", round_trip},
                                  {"pass", pass}});
  }

  ordered_json doc = report_header("isometry", config);
  doc["trials"] = std::move(trials);
  doc["aggregate_pass"] = all_pass;
  doc["solver_nodes"] = nodes;
  return ExperimentReport{std::move(doc), all_pass};
}

ExperimentReport run_sn_experiment(const ExperimentConfig& config) {
  config.check();
  if (config.n < 3) fail(Errc::invalid_argument, "the S_n experiment needs n >= 3");
  Prng rng(config.seed);
  ordered_json trials = ordered_json::array();
  bool all_pass = true;

  for (int trial = 0; trial < config.trials; ++trial) {
    const MetricSpace m = gen_general_position(rng, config.n, Rational(1));
    SnOrbit orbit = sn_isometries(m);

    int non_isometric_pairs = 0;
    for (size_t a = 0; a < orbit.images.size(); ++a)
      for (size_t b = a + 1; b < orbit.images.size(); ++b)
        if (!is_isometric(orbit.images[a], orbit.images[b])) ++non_isometric_pairs;
    const int total_pairs =
        static_cast<int>(orbit.images.size() * (orbit.images.size() - 1) / 2);
    const bool pass = orbit.pairwise_non_isometric && non_isometric_pairs == total_pairs;
    all_pass = all_pass && pass;

    trials.push_back(ordered_json{{"index", trial},
                                  {"M", space_to_json(m)},
                                  {"epsilon", orbit.epsilon.str()},
                                  {"maps", orbit.maps.size()},
                                  {"witness_points", orbit.witness.size()},
                                  {"non_isometric_pairs", non_isometric_pairs},
                                  {"total_pairs", total_pairs},
                                  {"pass", pass}});
  }

  ordered_json doc = report_header("sn-orbit", config);
  doc["trials"] = std::move(trials);
  doc["aggregate_pass"] = all_pass;
  return ExperimentReport{std::move(doc), all_pass};
}

ExperimentReport run_cone_experiment(const ExperimentConfig& config) {
  config.check();
  Prng rng(config.seed);
  ordered_json trials = ordered_json::array();
  bool all_pass = true;

  for (int trial = 0; trial < config.trials; ++trial) {
    // lambda-homogeneity on random valid spaces of up to 4 points
    const int nx = 1 + static_cast<int>(rng.uniform_below(4));
    const int ny = 1 + static_cast<int>(rng.uniform_below(4));
    const MetricSpace x = gen_general_position(rng, nx, Rational(1));
    const MetricSpace y = gen_general_position(rng, ny, Rational(1));
    const Rational lambda =
        Rational(1 + static_cast<int>(rng.uniform_below(3 * kRationalGridDenominator)),
                 kRationalGridDenominator);
    const bool homogeneous = gh_scaling_check(x, y, lambda);

    // apex fixing and payload mapping through a cone over a small ball
    const MetricSpace m = gen_general_position(rng, 3, Rational(1));
    const MetricSpace n = gen_general_position(rng, 3, Rational(1));
    const BallMap map = BallMap::with_default_epsilon(m, n);
    const bool apex_fixed = cone_map(map, ConePoint::apex()).is_apex();
    const ConePoint image = cone_map(map, ConePoint(lambda, m));
    const bool payload_ok =
        !image.is_apex() && image.lambda() == lambda && image.space().same_matrix(map.apply(m));

    const bool pass = homogeneous && apex_fixed && payload_ok;
    all_pass = all_pass && pass;

    trials.push_back(ordered_json{{"index", trial},
                                  {"X", space_to_json(x)},
                                  {"Y", space_to_json(y)},
                                  {"lambda", lambda.str()},
                                  {"homogeneous", homogeneous},
                                  {"apex_fixed", apex_fixed},
                                  {"payload_ok", payload_ok},
                                  {"pass", pass}});
  }

  ordered_json doc = report_header("cone", config);
  doc["trials"] = std::move(trials);
  doc["aggregate_pass"] = all_pass;
  return ExperimentReport{std::move(doc), all_pass};
}

ExperimentReport sn_orbit_report(const MetricSpace& m, std::optional<Rational> epsilon) {
  SnOrbit orbit = sn_isometries(m, std::move(epsilon));
  ordered_json maps = ordered_json::array();
  for (size_t i = 0; i < orbit.maps.size(); ++i) {
    std::vector<int> tau_one_based;
    for (int v : orbit.taus[i]) tau_one_based.push_back(v + 1);
    maps.push_back(ordered_json{{"tau", tau_one_based},
                                {"map", ball_map_to_json(orbit.maps[i])},
                                {"image", space_to_json(orbit.images[i])}});
  }
  ordered_json doc{{"schema", kReportSchema},
                   {"experiment", "sn-orbit"},
                   {"M", space_to_json(m)},
                   {"epsilon", orbit.epsilon.str()},
                   {"witness", space_to_json(orbit.witness)},
                   {"maps", std::move(maps)},
                   {"pairwise_non_isometric", orbit.pairwise_non_isometric},
                   {"aggregate_pass", orbit.pairwise_non_isometric}};
  return ExperimentReport{std::move(doc), orbit.pairwise_non_isometric};
}

}  // namespace ghml
