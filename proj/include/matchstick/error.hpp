#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace matchstick {

enum class ErrorCode {
  kSyntax,
  kUnknownVertex,
  kNotSimple,
  kAsymmetricAdjacency,
  kDisconnected,
  kNonPlanarEmbedding,
  kNonPolygonFace,
  kPreconditionViolated,
  kNotAQuadrilateral,
  kDiagonalNotOpposite,
  kDiagonalExists,
  kVertexGainsTooManyDiagonals,
  kDegreeOutOfRange,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above. Parse
// errors additionally carry the 1-based input line (0 when not applicable).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0);

  ErrorCode code() const noexcept { return code_; }
  int line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  int line_;
};

}  // namespace matchstick
