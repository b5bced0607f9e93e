#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "matchstick/charge.hpp"
#include "matchstick/geometry.hpp"

namespace matchstick {

struct PositiveVertex {
  VertexId vertex = 0;
  int degree = 0;
  std::map<int, int> face_counts;
  Rational charge;
  std::string classification;
};

/// A hypothesis of the discharging argument, checked on the input.
struct PreconditionCheck {
  std::string name;
  std::string statement;
  bool pass = true;
  std::vector<std::string> details;
};

struct AugmentationSummary {
  int diagonals = 0;
  int v6 = 0;
  int v7 = 0;
  Rational charge_total_before;
  Rational charge_total_after;
};

inline constexpr const char* kVerdictCertified = "contradiction-certified";
inline constexpr const char* kVerdictPreconditions = "input violated preconditions";
inline constexpr const char* kVerdictIdentityFailure = "identity failed";

struct AuditReport {
  AuditMode mode = AuditMode::kExact5Regular;
  bool geometric = false;
  std::vector<IdentityCheck> identities;
  std::optional<AugmentationSummary> augmentation;
  std::vector<PositiveVertex> positive_vertices;
  std::vector<PentagonReport> pentagons;
  std::vector<PreconditionCheck> preconditions;
  std::string verdict;
  std::string failed_precondition;
  /// Per-vertex charge used for the verdict (f_tilde or f_hat) on the audited map.
  std::map<VertexId, Rational> charges;

  bool identities_hold() const;
  nlohmann::ordered_json to_json() const;
};

/// "five triangles", "four triangles plus a tetragon", "four triangles plus a
/// pentagon" or "other".
std::string classify_vertex(int degree, const std::map<int, int>& face_counts);

/// Runs the whole charge pipeline on a map.
///
/// With coordinates, the drawing is validated and, in exact mode, every
/// detected diamond is split before the per-pentagon analysis; min-degree
/// mode refuses drawings that contain diamonds. Degree conditions and the
/// diamond refusal raise kPreconditionViolated.
///
/// Since every valid map satisfies the charge identities, the term groups
/// cannot all be non-positive; the verdict names the first failing
/// precondition.
AuditReport audit(const PlanarMap& map, const std::optional<Coordinates>& coords, AuditMode mode,
                  double tolerance = kDefaultTolerance);

}  // namespace matchstick
