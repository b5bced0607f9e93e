#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace matchstick {

/// Vertex identifiers are positive integers.
using VertexId = int;

/// Per-vertex counterclockwise neighbor cycle, keyed by vertex id.
using RotationTable = std::map<VertexId, std::vector<VertexId>>;

using Edge = std::pair<VertexId, VertexId>;

/// A face as the closed walk traced from the rotation system. Dart i of the
/// face runs from boundary[i] to boundary[(i + 1) % size()].
struct Face {
  std::vector<VertexId> boundary;

  std::size_t size() const { return boundary.size(); }
  /// True when the walk never revisits a vertex.
  bool is_polygon() const;
  bool contains(VertexId v) const;
};

/// A connected simple plane map given by its rotation system.
///
/// Faces are traced with the rule: the dart after (u, v) is (v, w) where w
/// follows u in the rotation at v. With counterclockwise rotations a face lies to
/// the right of each of its darts, so bounded faces are walked clockwise and
/// the outer face counterclockwise. Construction
/// rejects asymmetric tables, loops, parallel edges, disconnected tables and
/// rotation systems whose traced faces fail |V| - |E| + |F| = 2.
///
/// Instances are immutable once built.
class PlanarMap {
 public:
  /// The empty map (no vertices). It is the only map exempt from the Euler
  /// check.
  PlanarMap() = default;

  static PlanarMap build(const RotationTable& table);

  const std::vector<VertexId>& vertices() const { return ids_; }
  bool has_vertex(VertexId v) const;
  /// Position of v in vertices(). Throws kUnknownVertex.
  std::size_t index_of(VertexId v) const;

  const std::vector<VertexId>& rotation(VertexId v) const;
  int degree(VertexId v) const { return static_cast<int>(rotation(v).size()); }
  bool has_edge(VertexId u, VertexId v) const;

  std::size_t vertex_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t face_count() const { return faces_.size(); }
  bool empty() const { return ids_.empty(); }

  /// Edges as (smaller id, larger id), sorted.
  std::vector<Edge> edges() const;
  /// Faces in tracing order; a face id is its index in this list.
  const std::vector<Face>& faces() const { return faces_; }
  /// Id of the face on which the dart (u, v) lies.
  std::size_t face_of_dart(VertexId u, VertexId v) const;

  RotationTable rotation_table() const;

  /// The same map with every rotation reversed.
  PlanarMap mirrored() const;

  /// Same vertex ids and the same cyclic rotations.
  bool operator==(const PlanarMap& other) const;

 private:
  std::vector<VertexId> ids_;
  std::vector<std::vector<VertexId>> rotation_;
  std::vector<Face> faces_;
  // dart_face_[i][j] = face of the dart from ids_[i] to rotation_[i][j].
  std::vector<std::vector<std::size_t>> dart_face_;
  std::size_t edge_count_ = 0;
};

/// Face counts by size. Sizes are walk lengths, so a face that revisits a
/// vertex is counted by its full boundary length.
struct FaceCensus {
  std::map<int, long> counts;
  long faces = 0;
  long edges = 0;

  long count(int size) const;
  /// Sum of |F_i| equals |F|.
  bool face_total_holds() const;
  /// Sum of i |F_i| equals 2|E|.
  bool handshake_holds() const;
};

FaceCensus face_census(const PlanarMap& map);

struct DegreeSummary {
  std::vector<int> degrees;  // aligned with PlanarMap::vertices()
  std::map<int, int> histogram;
  int min_degree = 0;
  int max_degree = 0;

  bool is_regular() const { return !degrees.empty() && min_degree == max_degree; }
  bool is_regular(int k) const { return is_regular() && min_degree == k; }
  bool min_degree_at_least(int k) const { return !degrees.empty() && min_degree >= k; }
};

DegreeSummary degree_sequence(const PlanarMap& map);

/// Euler characteristic |V| - |E| + |F|.
long euler_characteristic(const PlanarMap& map);

/// Parses the map text format: one `<id>: <n1> ... <nk>` line per vertex,
/// neighbors in counterclockwise order. Blank lines and `#` comments are
/// ignored. Syntax problems raise kSyntax with the line number; semantic
/// problems raise the errors of PlanarMap::build.
PlanarMap parse_map(std::string_view text);

/// Canonical text: vertices by ascending id, each cycle rotated to start at
/// its smallest neighbor.
std::string serialize_map(const PlanarMap& map);

}  // namespace matchstick
