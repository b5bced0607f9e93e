#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matchstick/map.hpp"
#include "matchstick/rational.hpp"

namespace matchstick {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

using Coordinates = std::map<VertexId, Point>;

inline constexpr double kDefaultTolerance = 1e-6;

/// A plane map drawn with straight edges; the target edge length is 1.
struct GeometricMap {
  PlanarMap map;
  Coordinates coords;
  double tolerance = kDefaultTolerance;

  const Point& at(VertexId v) const;
};

/// Parses `<id>: <x> <y>` lines; blank lines and `#` comments are ignored.
Coordinates parse_coordinates(std::string_view text);
/// Shortest round-trip decimal notation, vertices by ascending id.
std::string serialize_coordinates(const Coordinates& coords);

double distance(const Point& a, const Point& b);
/// Twice the signed area of (a, b, c); positive when counterclockwise.
double orient(const Point& a, const Point& b, const Point& c);
double segment_distance(const Point& a, const Point& b, const Point& c, const Point& d);
/// True when the open segments cross at a single interior point of both.
bool segments_properly_cross(const Point& a, const Point& b, const Point& c, const Point& d, double eps);

struct CheckResult {
  std::string name;
  bool pass = true;
  std::vector<std::string> details;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool pass() const;
  const CheckResult* find(std::string_view name) const;
};

/// Runs every matchstick check and reports each one: coordinates present,
/// unit lengths, coincident vertices, crossings, overlaps, rotation
/// consistency and, when k is given, k-regularity. Never throws on a failed
/// check.
///
/// Two edges overlap when they share more than one point, or exactly one
/// point that is not a common endpoint; the proper-crossing case is reported
/// separately under "crossings".
ValidationReport validate_matchstick(const GeometricMap& gmap, std::optional<int> k = std::nullopt);

/// Vertices whose counterclockwise angular order of neighbors differs from
/// the stored rotation.
std::vector<VertexId> rotation_mismatches(const GeometricMap& gmap);

struct TriangleCount {
  int count = 0;
  int degree = 0;
  /// A degree-5 vertex in a drawing that passes validation.
  bool bound_applies = false;
  bool within_bound = true;  // count <= 4 whenever bound_applies
};

/// Number of bounded triangular faces at v. When the face is fully drawn, the
/// outer face is recognised by its positive area and skipped.
TriangleCount count_triangles_at(const GeometricMap& gmap, VertexId v);
/// Degree-5 vertices with five triangles in a valid unit-edge drawing; always
/// empty for genuine inputs.
std::vector<VertexId> triangle_bound_violations(const GeometricMap& gmap);

struct Diamond {
  std::size_t face = 0;
  VertexId a = 0;  // endpoints of the short diagonal, a < b
  VertexId b = 0;
  double diagonal = 0.0;
};

/// Bounded convex quadrilateral faces whose short diagonal has unit length
/// within tolerance, ordered by face id.
std::vector<Diamond> detect_diamonds(const GeometricMap& gmap);

/// Signed area of a face polygon. In a drawing consistent with the rotation
/// system bounded faces are negative and the outer face positive.
double signed_area(const GeometricMap& gmap, const Face& face);

/// Builds the rotation system of a straight-line drawing by sorting each
/// vertex's neighbors by angle.
PlanarMap map_from_drawing(const std::vector<Edge>& edges, const Coordinates& coords);

struct SvgOptions {
  bool labels = false;
  /// Optional per-vertex charge; positive values render red, negative blue,
  /// zero grey.
  std::map<VertexId, Rational> charges;
  double scale = 100.0;
};

/// Deterministic SVG 1.1 drawing: one line element per edge, viewBox from the
/// bounding box with a 5% margin.
std::string render_svg(const GeometricMap& gmap, const SvgOptions& options = {});

}  // namespace matchstick
