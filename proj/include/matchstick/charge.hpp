#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "matchstick/map.hpp"
#include "matchstick/rational.hpp"

namespace matchstick {

/// Weight an i-gonal face contributes to each of its corners: (10 - 3i) / i.
Rational face_weight(int face_size);

/// Discharging record of one vertex.
///
/// face_counts[i] is the number of i-gonal faces at the vertex, counted once
/// per corner. On polygon-faced maps that is the number of distinct faces, so
/// the counts sum to the degree.
struct VertexCharge {
  VertexId vertex = 0;
  int degree = 0;
  std::map<int, int> face_counts;
  Rational f;        // sum_i (10 - 3i) f_i / i
  Rational f_tilde;  // f - 2 (d - 5)
  Rational f_hat;    // 10 - 2d + f

  int count(int face_size) const;
};

/// Builds the record for a vertex from the sizes of its incident faces.
VertexCharge charge_from_face_sizes(VertexId vertex, std::span<const int> face_sizes);

struct ChargeTotals {
  Rational f;
  Rational f_tilde;
  Rational f_hat;
};

struct ChargeTable {
  std::vector<VertexCharge> vertices;  // aligned with PlanarMap::vertices()
  ChargeTotals totals;

  const VertexCharge& at(VertexId v) const;
};

/// Per-vertex charges. Requires every face to be a polygon (kNonPolygonFace).
ChargeTable vertex_charges(const PlanarMap& map);

/// sum_v f(v), counted corner by corner. Defined for every map.
Rational vertexwise_charge_sum(const PlanarMap& map);
/// sum_i (10 - 3i) |F_i|.
Rational facewise_charge_sum(const FaceCensus& census);

enum class AuditMode { kExact5Regular, kMinDegree5 };

std::string to_string(AuditMode mode);

/// One exact identity: expected and computed values with a stable name.
struct IdentityCheck {
  std::string name;
  std::string statement;
  Rational expected;
  Rational computed;

  bool pass() const { return expected == computed; }
};

/// Global charge identities for a map.
///
/// Exact mode (5-regular maps): sum_i (10 - 3i)|F_i| = 20 and sum_v f(v) = 20.
/// Min-degree mode (minimum degree >= 5): sum_i (10 - 3i)|F_i| =
/// 20 + sum_{d >= 6} 2(d - 5) v_d and sum_v f_hat(v) = 20.
/// Throws kPreconditionViolated when the degree condition fails.
std::vector<IdentityCheck> global_identity_check(const PlanarMap& map, AuditMode mode);

/// A quadrilateral face and the opposite pair joined by the new diagonal.
struct DiamondSplit {
  std::size_t face = 0;
  VertexId a = 0;
  VertexId b = 0;
};

struct AugmentationResult {
  PlanarMap map;
  int diagonals_added = 0;
  int v6 = 0;
  int v7 = 0;
  Rational charge_total_before;
  Rational charge_total_after;
  /// Increment identity always; the degree and modified-charge identities
  /// only when the input was 5-regular.
  std::vector<IdentityCheck> checks;
};

/// Splits each listed quadrilateral face by its diagonal. Face ids refer to
/// the input map. Errors: kNotAQuadrilateral, kDiagonalNotOpposite,
/// kVertexGainsTooManyDiagonals (more than two new diagonals at a vertex),
/// kDiagonalExists (the pair is already adjacent, or listed twice).
AugmentationResult augment_diamonds(const PlanarMap& map, std::span<const DiamondSplit> diamonds);

enum class ChargeKind { kTilde, kHat };

struct PentagonTerm {
  VertexId vertex = 0;
  Rational ratio;  // charge / f_5
  /// d = 5, four triangles and this pentagon.
  bool positive_type = false;
};

struct PentagonReport {
  std::size_t face = 0;
  std::vector<PentagonTerm> terms;
  int positive_count = 0;  // x
  Rational sum;
  bool flagged = false;
  std::string note;
};

/// Per-pentagon aggregation of charge / f_5 over each pentagonal face.
///
/// kTilde requires every degree in {5, 6, 7}; kHat requires degrees >= 5.
/// Violations raise kDegreeOutOfRange. Requires polygon faces.
std::vector<PentagonReport> pentagon_reports(const PlanarMap& map, ChargeKind kind = ChargeKind::kTilde);

/// Same, from an already computed charge table.
std::vector<PentagonReport> pentagon_reports(const PlanarMap& map, const ChargeTable& charges,
                                             ChargeKind kind);

// Local case analysis ------------------------------------------------------

struct LocalConfig {
  int degree = 0;
  std::map<int, int> face_counts;  // face size -> multiplicity
  Rational ratio;                  // f_tilde / f_5

  int count(int face_size) const;
};

struct OracleOptions {
  std::vector<int> degrees{5, 6, 7};
  int face_size_cap = 10;
  int max_triangles = 4;
};

struct OracleBound {
  std::string name;
  std::string statement;
  Rational bound;
  Rational observed_max;
  std::size_t rows = 0;
  std::size_t violations = 0;
  bool attained = false;
};

struct OracleTable {
  OracleOptions options;
  std::vector<LocalConfig> rows;
  std::vector<OracleBound> bounds;

  std::size_t violations() const;
};

/// Enumerates every multiset of d face sizes in [3, cap] with at most
/// max_triangles triangles and at least one pentagon, for each requested
/// degree, and checks the case bounds on f_tilde / f_5:
///   f_5 >= 2            -> <= -1/2
///   f_5 = 1, d >= 6     -> <= -4/3
///   f_5 = 1, d = 5      -> <= 1/3, with equality iff f_3 = 4
///   ratio > -1/2        -> d = 5, f_3 = 4, f_5 = 1
/// Degrees must lie in {5, 6, 7}; cap must be at least 3.
OracleTable local_config_oracle(const OracleOptions& options = {});

struct PentagonBoundRow {
  int positive = 0;  // x
  Rational max_sum;
  std::size_t configurations = 0;
};

struct PentagonBound {
  std::vector<PentagonBoundRow> rows;  // x = 0..5
  Rational max_over_admissible;        // max over x <= 3
  bool holds = false;                  // max_over_admissible <= 0
  bool equality_at_three = false;
};

/// Exhausts every multiset of five per-vertex ratios drawn from the oracle
/// rows and records the largest pentagon sum for each count x of
/// positive-type vertices.
PentagonBound pentagon_bound_check(const OracleTable& table);

}  // namespace matchstick
