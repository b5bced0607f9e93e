#include "matchstick/error.hpp"

namespace matchstick {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "SyntaxError";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kNotSimple: return "NotSimple";
    case ErrorCode::kAsymmetricAdjacency: return "AsymmetricAdjacency";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kNonPlanarEmbedding: return "NonPlanarEmbedding";
    case ErrorCode::kNonPolygonFace: return "NonPolygonFace";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kNotAQuadrilateral: return "NotAQuadrilateral";
    case ErrorCode::kDiagonalNotOpposite: return "DiagonalNotOpposite";
    case ErrorCode::kDiagonalExists: return "DiagonalExists";
    case ErrorCode::kVertexGainsTooManyDiagonals: return "VertexGainsTooManyDiagonals";
    case ErrorCode::kDegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, int line)
    : std::runtime_error(std::string(to_string(code)) + ": " + message +
                         (line > 0 ? " (line " + std::to_string(line) + ")" : "")),
      code_(code),
      line_(line) {}

}  // namespace matchstick
