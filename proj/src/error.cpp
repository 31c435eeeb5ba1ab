#include "fmbend/error.hpp"

namespace fmb {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MissingPosition: return "MissingPosition";
    case ErrorCode::TooFewFixed: return "TooFewFixed";
    case ErrorCode::DegenerateHull: return "DegenerateHull";
    case ErrorCode::NotPlanar: return "NotPlanar";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnknownCell: return "UnknownCell";
    case ErrorCode::NotAPath: return "NotAPath";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::NotACactus: return "NotACactus";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::NotCollinear: return "NotCollinear";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::ConstructionIncomplete: return "ConstructionIncomplete";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::DuplicateX: return "DuplicateX";
    case ErrorCode::InfeasibleForAllPartitions: return "InfeasibleForAllPartitions";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvalidSkeleton: return "InvalidSkeleton";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InvariantError: return "InvariantError";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
  }
  return "Unknown";
}

}  // namespace fmb
