#pragma once

#include "ghml/local_isometry.hpp"
#include "ghml/metric_space.hpp"
#include "ghml/partition.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace ghml {

// Space files: {"n": 3, "d": [["0","3","4"],["3","0","5"],["4","5","0"]]},
// entries rational strings "p/q" or "p". The CSV alternative is n lines of n
// comma-separated rational strings.
MetricSpace space_from_json(const std::string& text);
MetricSpace space_from_csv(const std::string& text);

nlohmann::ordered_json space_to_json(const MetricSpace& space);
std::string space_to_json_string(const MetricSpace& space);

// {"labels": [...]}: the 1-based block label of every point, in point order.
nlohmann::ordered_json partition_to_json(const LabeledPartition& partition);

// {"M": space, "N": space, "epsilon": rational string}
nlohmann::ordered_json ball_map_to_json(const BallMap& map);

}  // namespace ghml
