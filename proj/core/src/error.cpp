#include "tlalg/error.hpp"

namespace tlalg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::NotASubspace: return "not-a-subspace";
    case ErrorCode::SingularMatrix: return "singular-matrix";
    case ErrorCode::MissingFace: return "missing-face";
    case ErrorCode::NonIncreasingTuple: return "non-increasing-tuple";
    case ErrorCode::DuplicateSimplex: return "duplicate-simplex";
    case ErrorCode::VertexOutOfRange: return "vertex-out-of-range";
    case ErrorCode::Disconnected: return "disconnected";
    case ErrorCode::InvalidMap: return "invalid-map";
    case ErrorCode::SourceTargetMismatch: return "source-target-mismatch";
    case ErrorCode::RelationViolation: return "relation-violation";
    case ErrorCode::UnknownGenerator: return "unknown-generator";
    case ErrorCode::NotFlat: return "not-flat";
    case ErrorCode::NotClosed: return "not-closed";
    case ErrorCode::NotACocycle: return "not-a-cocycle";
    case ErrorCode::NotInvariant: return "not-invariant";
    case ErrorCode::BaseMismatch: return "base-mismatch";
    case ErrorCode::UnsupportedRank: return "unsupported-rank";
    case ErrorCode::UnsupportedBase: return "unsupported-base";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::SchemaViolation: return "schema-violation";
    case ErrorCode::FileNotFound: return "file-not-found";
  }
  return "unknown";
}

}  // namespace tlalg
