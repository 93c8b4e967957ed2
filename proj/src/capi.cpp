#include "ghml.h"

#include "ghml/error.hpp"
#include "ghml/experiments.hpp"
#include "ghml/generators.hpp"
#include "ghml/gh_solver.hpp"
#include "ghml/local_isometry.hpp"
#include "ghml/metric_space.hpp"
#include "ghml/partition.hpp"
#include "ghml/rational.hpp"
#include "ghml/space_io.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

struct ghml_space {
  ghml::MetricSpace impl;
};

namespace {

thread_local std::string g_last_error;

ghml_status map_errc(ghml::Errc code) {
  using ghml::Errc;
  switch (code) {
    case Errc::parse_error: return GHML_ERR_PARSE;
    case Errc::not_symmetric: return GHML_ERR_NOT_SYMMETRIC;
    case Errc::nonzero_diagonal: return GHML_ERR_NONZERO_DIAGONAL;
    case Errc::nonpositive_off_diagonal: return GHML_ERR_NONPOSITIVE_OFF_DIAGONAL;
    case Errc::triangle_violation: return GHML_ERR_TRIANGLE_VIOLATION;
    case Errc::size_mismatch: return GHML_ERR_SIZE_MISMATCH;
    case Errc::empty_subset: return GHML_ERR_EMPTY_SUBSET;
    case Errc::nonpositive_scale: return GHML_ERR_NONPOSITIVE_SCALE;
    case Errc::size_too_large_for_enumeration: return GHML_ERR_SIZE_TOO_LARGE;
    case Errc::epsilon_out_of_range: return GHML_ERR_EPSILON_OUT_OF_RANGE;
    case Errc::not_in_ball: return GHML_ERR_NOT_IN_BALL;
    case Errc::property_check_failed: return GHML_ERR_PROPERTY_CHECK_FAILED;
    case Errc::not_block_structured: return GHML_ERR_NOT_BLOCK_STRUCTURED;
    case Errc::psi_not_identity: return GHML_ERR_PSI_NOT_IDENTITY;
    case Errc::not_a_permutation: return GHML_ERR_NOT_A_PERMUTATION;
    case Errc::not_general_position: return GHML_ERR_NOT_GENERAL_POSITION;
    case Errc::metric_violation: return GHML_ERR_METRIC_VIOLATION;
    case Errc::invalid_cluster_spec: return GHML_ERR_INVALID_CLUSTER_SPEC;
    case Errc::generation_failed: return GHML_ERR_GENERATION_FAILED;
    case Errc::witness_construction_failed: return GHML_ERR_WITNESS_CONSTRUCTION_FAILED;
    case Errc::not_in_cone: return GHML_ERR_NOT_IN_CONE;
    case Errc::invalid_argument: return GHML_ERR_INVALID_ARGUMENT;
    case Errc::internal_error: return GHML_ERR_INTERNAL;
  }
  return GHML_ERR_INTERNAL;
}

template <typename Fn>
ghml_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return GHML_OK;
  } catch (const ghml::Error& e) {
    g_last_error = e.what();
    return map_errc(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GHML_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return GHML_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) ghml::fail(ghml::Errc::invalid_argument, what);
}

std::vector<int> to_zero_based(const int* values, int len, int point_count, const char* what) {
  require(values != nullptr || len == 0, "null index array");
  std::vector<int> out;
  out.reserve(static_cast<size_t>(len));
  for (int k = 0; k < len; ++k) {
    if (values[k] < 1 || values[k] > point_count)
      ghml::fail(ghml::Errc::invalid_argument,
                 std::string(what) + " contains out-of-range index " + std::to_string(values[k]));
    out.push_back(values[k] - 1);
  }
  return out;
}

std::optional<ghml::Rational> optional_rational(const char* text) {
  if (text == nullptr) return std::nullopt;
  return ghml::parse_rational(text);
}

ghml_status run_experiment(const char* config_json, char** report_json, int* aggregate_pass,
                           ghml::ExperimentReport (*runner)(const ghml::ExperimentConfig&)) {
  return guarded([&] {
    require(config_json && report_json, "null argument");
    const auto config = ghml::ExperimentConfig::from_json(config_json);
    const auto report = runner(config);
    *report_json = copy_string(report.to_string());
    if (aggregate_pass) *aggregate_pass = report.aggregate_pass ? 1 : 0;
  });
}

}  // namespace

extern "C" {

const char* ghml_status_name(ghml_status status) {
  switch (status) {
    case GHML_OK: return "Ok";
    case GHML_ERR_PARSE: return "ParseError";
    case GHML_ERR_NOT_SYMMETRIC: return "NotSymmetric";
    case GHML_ERR_NONZERO_DIAGONAL: return "NonzeroDiagonal";
    case GHML_ERR_NONPOSITIVE_OFF_DIAGONAL: return "NonpositiveOffDiagonal";
    case GHML_ERR_TRIANGLE_VIOLATION: return "TriangleViolation";
    case GHML_ERR_SIZE_MISMATCH: return "SizeMismatch";
    case GHML_ERR_EMPTY_SUBSET: return "EmptySubset";
    case GHML_ERR_NONPOSITIVE_SCALE: return "NonpositiveScale";
    case GHML_ERR_SIZE_TOO_LARGE: return "SizeTooLargeForEnumeration";
    case GHML_ERR_EPSILON_OUT_OF_RANGE: return "EpsilonOutOfRange";
    case GHML_ERR_NOT_IN_BALL: return "NotInBall";
    case GHML_ERR_PROPERTY_CHECK_FAILED: return "PropertyCheckFailed";
    case GHML_ERR_NOT_BLOCK_STRUCTURED: return "NotBlockStructured";
    case GHML_ERR_PSI_NOT_IDENTITY: return "PsiNotIdentity";
    case GHML_ERR_NOT_A_PERMUTATION: return "NotAPermutation";
    case GHML_ERR_NOT_GENERAL_POSITION: return "NotGeneralPosition";
    case GHML_ERR_METRIC_VIOLATION: return "MetricViolation";
    case GHML_ERR_INVALID_CLUSTER_SPEC: return "InvalidClusterSpec";
    case GHML_ERR_GENERATION_FAILED: return "GenerationFailed";
    case GHML_ERR_WITNESS_CONSTRUCTION_FAILED: return "WitnessConstructionFailed";
    case GHML_ERR_NOT_IN_CONE: return "NotInCone";
    case GHML_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case GHML_ERR_INTERNAL: return "InternalError";
  }
  return "UnknownError";
}

const char* ghml_last_error(void) { return g_last_error.c_str(); }

void ghml_string_free(char* text) { std::free(text); }

ghml_status ghml_space_from_json(const char* text, ghml_space** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new ghml_space{ghml::space_from_json(text)};
  });
}

ghml_status ghml_space_from_csv(const char* text, ghml_space** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new ghml_space{ghml::space_from_csv(text)};
  });
}

void ghml_space_free(ghml_space* space) { delete space; }

int ghml_space_point_count(const ghml_space* space) {
  return space == nullptr ? 0 : space->impl.size();
}

ghml_status ghml_space_to_json(const ghml_space* space, char** out) {
  return guarded([&] {
    require(space && out, "null argument");
    *out = copy_string(ghml::space_to_json_string(space->impl));
  });
}

ghml_status ghml_space_distance(const ghml_space* space, int i, int j, char** out) {
  return guarded([&] {
    require(space && out, "null argument");
    const int n = space->impl.size();
    require(i >= 1 && i <= n && j >= 1 && j <= n, "point index out of range");
    *out = copy_string(space->impl.dist(i - 1, j - 1).str());
  });
}

ghml_status ghml_space_scale(const ghml_space* space, const char* lambda, ghml_space** out) {
  return guarded([&] {
    require(space && lambda && out, "null argument");
    *out = new ghml_space{space->impl.scaled(ghml::parse_rational(lambda))};
  });
}

ghml_status ghml_space_permute(const ghml_space* space, const int* tau, int n, ghml_space** out) {
  return guarded([&] {
    require(space && tau && out && n >= 0, "null argument");
    std::vector<int> perm;
    for (int k = 0; k < n; ++k) perm.push_back(tau[k] - 1);
    *out = new ghml_space{ghml::permuted_space(space->impl, perm)};
  });
}

ghml_status ghml_space_diameter(const ghml_space* space, char** out) {
  return guarded([&] {
    require(space && out, "null argument");
    *out = copy_string(space->impl.diameter().str());
  });
}

ghml_status ghml_invariants(const ghml_space* space, char** json_out) {
  return guarded([&] {
    require(space && json_out, "null argument");
    const ghml::InvariantProfile p = ghml::invariant_profile(space->impl);
    nlohmann::ordered_json doc{
        {"s", p.s.str()}, {"e", p.e.str()}, {"t", p.t.str()}, {"delta", p.delta.str()}};
    *json_out = copy_string(doc.dump());
  });
}

ghml_status ghml_is_general_position(const ghml_space* space, int* out) {
  return guarded([&] {
    require(space && out, "null argument");
    *out = ghml::is_general_position(space->impl) ? 1 : 0;
  });
}

ghml_status ghml_set_distances(const ghml_space* space, const int* a, int a_len, const int* b,
                               int b_len, char** low, char** high) {
  return guarded([&] {
    require(space && low && high, "null argument");
    const auto sa = to_zero_based(a, a_len, space->impl.size(), "A");
    const auto sb = to_zero_based(b, b_len, space->impl.size(), "B");
    const auto [lo, hi] = ghml::set_distances(space->impl, sa, sb);
    *low = copy_string(lo.str());
    *high = copy_string(hi.str());
  });
}

ghml_status ghml_hausdorff_distance(const ghml_space* space, const int* a, int a_len,
                                    const int* b, int b_len, char** out) {
  return guarded([&] {
    require(space && out, "null argument");
    const auto sa = to_zero_based(a, a_len, space->impl.size(), "A");
    const auto sb = to_zero_based(b, b_len, space->impl.size(), "B");
    *out = copy_string(ghml::hausdorff_distance(space->impl, sa, sb).str());
  });
}

ghml_status ghml_gh_distance(const ghml_space* x, const ghml_space* y, int all_optimal,
                             char** json_out) {
  return guarded([&] {
    require(x && y && json_out, "null argument");
    const ghml::GhResult result = ghml::gh_distance_exact(x->impl, y->impl);
    nlohmann::ordered_json doc{{"distance", result.distance.str()}};
    if (all_optimal) {
      nlohmann::ordered_json list = nlohmann::ordered_json::array();
      for (const auto& corr : result.optimal) {
        nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
        for (auto [i, j] : corr.pairs()) pairs.push_back({i + 1, j + 1});
        list.push_back(std::move(pairs));
      }
      doc["complete"] = result.complete;
      doc["optimal"] = std::move(list);
      doc["nodes"] = result.nodes;
    }
    *json_out = copy_string(doc.dump());
  });
}

ghml_status ghml_is_isometric(const ghml_space* x, const ghml_space* y, int* found,
                              int* bijection) {
  return guarded([&] {
    require(x && y && found, "null argument");
    const auto result = ghml::is_isometric(x->impl, y->impl);
    *found = result.has_value() ? 1 : 0;
    if (result && bijection)
      for (size_t k = 0; k < result->size(); ++k) bijection[k] = (*result)[k] + 1;
  });
}

ghml_status ghml_epsilon_bound(const ghml_space* m, const ghml_space* n, char** out) {
  return guarded([&] {
    require(m && n && out, "null argument");
    *out = copy_string(ghml::epsilon_bound(m->impl, n->impl).str());
  });
}

ghml_status ghml_canonical_partition(const ghml_space* m, const ghml_space* x,
                                     const char* epsilon, char** json_out) {
  return guarded([&] {
    require(m && x && epsilon && json_out, "null argument");
    const auto partition =
        ghml::canonical_partition(m->impl, x->impl, ghml::parse_rational(epsilon));
    *json_out = copy_string(ghml::partition_to_json(partition).dump());
  });
}

ghml_status ghml_remap(const ghml_space* m, const ghml_space* n, const ghml_space* x,
                       const char* epsilon, ghml_space** out) {
  return guarded([&] {
    require(m && n && x && out, "null argument");
    if (epsilon == nullptr) {
      const auto map = ghml::BallMap::with_default_epsilon(m->impl, n->impl);
      *out = new ghml_space{map.apply(x->impl)};
    } else {
      *out = new ghml_space{
          ghml::remap_metric(m->impl, n->impl, x->impl, ghml::parse_rational(epsilon))};
    }
  });
}

ghml_status ghml_gen_general_position(uint64_t seed, int n, const char* scale_hint,
                                      ghml_space** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const ghml::Rational hint =
        scale_hint ? ghml::parse_rational(scale_hint) : ghml::Rational(1);
    *out = new ghml_space{ghml::gen_general_position(seed, n, hint)};
  });
}

ghml_status ghml_gen_in_ball(uint64_t seed, const ghml_space* m, const char* epsilon,
                             const int* cluster_sizes, int k, ghml_space** out) {
  return guarded([&] {
    require(m && cluster_sizes && out, "null argument");
    ghml::Rational eps(1);
    if (epsilon != nullptr) {
      eps = ghml::parse_rational(epsilon);
    } else {
      const auto s = ghml::invariant_profile(m->impl).s;
      if (s.is_finite()) eps = s.value() / 2;
    }
    std::vector<int> sizes(cluster_sizes, cluster_sizes + k);
    *out = new ghml_space{ghml::gen_in_ball(seed, m->impl, eps, sizes).space};
  });
}

ghml_status ghml_run_isometry_experiment(const char* config_json, char** report_json,
                                         int* aggregate_pass) {
  return run_experiment(config_json, report_json, aggregate_pass,
                        ghml::run_isometry_experiment);
}

ghml_status ghml_run_sn_experiment(const char* config_json, char** report_json,
                                   int* aggregate_pass) {
  return run_experiment(config_json, report_json, aggregate_pass, ghml::run_sn_experiment);
}

ghml_status ghml_run_cone_experiment(const char* config_json, char** report_json,
                                     int* aggregate_pass) {
  return run_experiment(config_json, report_json, aggregate_pass, ghml::run_cone_experiment);
}

ghml_status ghml_sn_orbit(const ghml_space* m, const char* epsilon, char** report_json,
                          int* all_distinct) {
  return guarded([&] {
    require(m && report_json, "null argument");
    const auto report = ghml::sn_orbit_report(m->impl, optional_rational(epsilon));
    *report_json = copy_string(report.to_string());
    if (all_distinct) *all_distinct = report.aggregate_pass ? 1 : 0;
  });
}

}  // extern "C"
