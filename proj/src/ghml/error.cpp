#include "ghml/error.hpp"

namespace ghml {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::parse_error: return "ParseError";
    case Errc::not_symmetric: return "NotSymmetric";
    case Errc::nonzero_diagonal: return "NonzeroDiagonal";
    case Errc::nonpositive_off_diagonal: return "NonpositiveOffDiagonal";
    case Errc::triangle_violation: return "TriangleViolation";
    case Errc::size_mismatch: return "SizeMismatch";
    case Errc::empty_subset: return "EmptySubset";
    case Errc::nonpositive_scale: return "NonpositiveScale";
    case Errc::size_too_large_for_enumeration: return "SizeTooLargeForEnumeration";
    case Errc::epsilon_out_of_range: return "EpsilonOutOfRange";
    case Errc::not_in_ball: return "NotInBall";
    case Errc::property_check_failed: return "PropertyCheckFailed";
    case Errc::not_block_structured: return "NotBlockStructured";
    case Errc::psi_not_identity: return "PsiNotIdentity";
    case Errc::not_a_permutation: return "NotAPermutation";
    case Errc::not_general_position: return "NotGeneralPosition";
    case Errc::metric_violation: return "MetricViolation";
    case Errc::invalid_cluster_spec: return "InvalidClusterSpec";
    case Errc::generation_failed: return "GenerationFailed";
    case Errc::witness_construction_failed: return "WitnessConstructionFailed";
    case Errc::not_in_cone: return "NotInCone";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::internal_error: return "InternalError";
  }
  return "UnknownError";
}

void fail(Errc code, std::string message, std::vector<int> where) {
  throw Error(code, std::move(message), std::move(where));
}

}  // namespace ghml
