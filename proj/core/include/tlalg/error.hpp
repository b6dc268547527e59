#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tlalg {

/// Machine-readable failure categories. Every core error carries exactly one.
enum class ErrorCode {
  DimensionMismatch,
  NotASubspace,
  SingularMatrix,
  MissingFace,
  NonIncreasingTuple,
  DuplicateSimplex,
  VertexOutOfRange,
  Disconnected,
  InvalidMap,
  SourceTargetMismatch,
  RelationViolation,
  UnknownGenerator,
  NotFlat,
  NotClosed,
  NotACocycle,
  NotInvariant,
  BaseMismatch,
  UnsupportedRank,
  UnsupportedBase,
  InvalidArgument,
  ParseError,
  SchemaViolation,
  FileNotFound,
};

std::string_view to_string(ErrorCode code);

/// Core exception type. `witnesses` holds the offending simplices (vertex
/// tuples) when the failure is localized, e.g. non-flat triangles.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::vector<int>> witnesses = {})
      : std::runtime_error(message), code_(code), witnesses_(std::move(witnesses)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::vector<int>>& witnesses() const noexcept { return witnesses_; }

 private:
  ErrorCode code_;
  std::vector<std::vector<int>> witnesses_;
};

}  // namespace tlalg
