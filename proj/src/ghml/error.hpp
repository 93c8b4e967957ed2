#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ghml {

enum class Errc {
  parse_error,
  not_symmetric,
  nonzero_diagonal,
  nonpositive_off_diagonal,
  triangle_violation,
  size_mismatch,
  empty_subset,
  nonpositive_scale,
  size_too_large_for_enumeration,
  epsilon_out_of_range,
  not_in_ball,
  property_check_failed,
  not_block_structured,
  psi_not_identity,
  not_a_permutation,
  not_general_position,
  metric_violation,
  invalid_cluster_spec,
  generation_failed,
  witness_construction_failed,
  not_in_cone,
  invalid_argument,
  internal_error,
};

// Stable name used in messages, JSON error reports and the C API.
const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  // `where` holds 1-based point indices identifying the witness of the
  // violation, e.g. {i, j, k} for a broken triangle.
  Error(Errc code, std::string message, std::vector<int> where = {})
      : std::runtime_error(std::move(message)), code_(code), where_(std::move(where)) {}

  Errc code() const { return code_; }
  const std::vector<int>& where() const { return where_; }

 private:
  Errc code_;
  std::vector<int> where_;
};

[[noreturn]] void fail(Errc code, std::string message, std::vector<int> where = {});

}  // namespace ghml
