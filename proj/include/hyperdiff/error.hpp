#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperdiff {

enum class ErrorKind {
  UnknownVertex,
  DuplicateVertex,
  DimensionOutOfRange,
  VertexSetMismatch,
  TooManyVertices,
  GradeMismatch,
  GradeParity,
  NotSimplicial,
  NotCosimplicial,
  NotAChainMap,
  KindMismatch,
  Parse,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hyperdiff
