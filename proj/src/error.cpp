#include "hyperdiff/error.hpp"

namespace hyperdiff {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::DimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorKind::VertexSetMismatch: return "VertexSetMismatch";
    case ErrorKind::TooManyVertices: return "TooManyVertices";
    case ErrorKind::GradeMismatch: return "GradeMismatch";
    case ErrorKind::GradeParity: return "GradeParity";
    case ErrorKind::NotSimplicial: return "NotSimplicial";
    case ErrorKind::NotCosimplicial: return "NotCosimplicial";
    case ErrorKind::NotAChainMap: return "NotAChainMap";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace hyperdiff
