#include "ghml/space_io.hpp"

#include "ghml/error.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace ghml {

using nlohmann::ordered_json;

MetricSpace space_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("d"))
    fail(Errc::parse_error, "space JSON must be an object with \"n\" and \"d\"");
  if (!doc["n"].is_number_integer())
    fail(Errc::parse_error, "\"n\" must be an integer");
  const int n = doc["n"].get<int>();
  const auto& d = doc["d"];
  if (!d.is_array() || static_cast<int>(d.size()) != n)
    fail(Errc::parse_error, "\"d\" must be an array of n rows");
  std::vector<std::vector<Rational>> rows(n);
  for (int i = 0; i < n; ++i) {
    if (!d[i].is_array() || static_cast<int>(d[i].size()) != n)
      fail(Errc::parse_error, "row " + std::to_string(i + 1) + " must have n entries");
    for (const auto& cell : d[i]) {
      if (!cell.is_string())
        fail(Errc::parse_error, "distances must be rational strings like \"3\" or \"3/2\"");
      rows[i].push_back(parse_rational(cell.get<std::string>()));
    }
  }
  return MetricSpace::validate(rows);
}

MetricSpace space_from_csv(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<Rational> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(parse_rational(cell));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(Errc::parse_error, "CSV input contains no rows");
  for (const auto& row : rows)
    if (row.size() != rows.size())
      fail(Errc::parse_error, "CSV matrix must be square");
  return MetricSpace::validate(rows);
}

ordered_json space_to_json(const MetricSpace& space) {
  ordered_json d = ordered_json::array();
  for (int i = 0; i < space.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < space.size(); ++j) row.push_back(space.dist(i, j).str());
    d.push_back(std::move(row));
  }
  return ordered_json{{"n", space.size()}, {"d", std::move(d)}};
}

std::string space_to_json_string(const MetricSpace& space) { return space_to_json(space).dump(); }

ordered_json partition_to_json(const LabeledPartition& partition) {
  int points = 0;
  for (const auto& block : partition.blocks) points += static_cast<int>(block.size());
  std::vector<int> labels(points, 0);
  for (int b = 0; b < static_cast<int>(partition.blocks.size()); ++b)
    for (int p : partition.blocks[b]) labels[p] = b + 1;
  return ordered_json{{"labels", labels}};
}

ordered_json ball_map_to_json(const BallMap& map) {
  return ordered_json{{"M", space_to_json(map.domain_center())},
                      {"N", space_to_json(map.codomain_center())},
                      {"epsilon", map.epsilon().str()}};
}

}  // namespace ghml
