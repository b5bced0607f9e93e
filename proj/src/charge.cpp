#include "matchstick/charge.hpp"

#include <algorithm>
#include <set>

#include "matchstick/error.hpp"

namespace matchstick {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational face_weight(int face_size) { return Rational(10 - 3 * face_size, face_size); }

int VertexCharge::count(int face_size) const {
  auto it = face_counts.find(face_size);
  return it == face_counts.end() ? 0 : it->second;
}

VertexCharge charge_from_face_sizes(VertexId vertex, std::span<const int> face_sizes) {
  VertexCharge c;
  c.vertex = vertex;
  c.degree = static_cast<int>(face_sizes.size());
  for (int size : face_sizes) {
    ++c.face_counts[size];
    c.f += face_weight(size);
  }
  c.f_tilde = c.f - 2 * (c.degree - 5);
  c.f_hat = 10 - 2 * c.degree + c.f;
  return c;
}

const VertexCharge& ChargeTable::at(VertexId v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v,
                             [](const VertexCharge& c, VertexId id) { return c.vertex < id; });
  if (it == vertices.end() || it->vertex != v) {
    throw Error(ErrorCode::kUnknownVertex, "no charge for vertex " + std::to_string(v));
  }
  return *it;
}

ChargeTable vertex_charges(const PlanarMap& map) {
  const auto& faces = map.faces();
  for (std::size_t id = 0; id < faces.size(); ++id) {
    if (!faces[id].is_polygon()) {
      throw Error(ErrorCode::kNonPolygonFace,
                  "face " + std::to_string(id) + " revisits a vertex along its boundary");
    }
  }
  ChargeTable table;
  table.vertices.reserve(map.vertex_count());
  std::vector<int> sizes;
  for (VertexId v : map.vertices()) {
    sizes.clear();
    for (VertexId u : map.rotation(v)) sizes.push_back(static_cast<int>(faces[map.face_of_dart(v, u)].size()));
    table.vertices.push_back(charge_from_face_sizes(v, sizes));
    const VertexCharge& c = table.vertices.back();
    table.totals.f += c.f;
    table.totals.f_tilde += c.f_tilde;
    table.totals.f_hat += c.f_hat;
  }
  return table;
}

Rational vertexwise_charge_sum(const PlanarMap& map) {
  Rational total;
  for (VertexId v : map.vertices()) {
    for (VertexId u : map.rotation(v)) {
      total += face_weight(static_cast<int>(map.faces()[map.face_of_dart(v, u)].size()));
    }
  }
  return total;
}

Rational facewise_charge_sum(const FaceCensus& census) {
  Rational total;
  for (const auto& [size, n] : census.counts) total += Rational(10 - 3 * size) * n;
  return total;
}

std::string to_string(AuditMode mode) {
  return mode == AuditMode::kExact5Regular ? "exact-5-regular" : "min-degree-5";
}

std::vector<IdentityCheck> global_identity_check(const PlanarMap& map, AuditMode mode) {
  const DegreeSummary degrees = degree_sequence(map);
  if (mode == AuditMode::kExact5Regular && !degrees.is_regular(5)) {
    throw Error(ErrorCode::kPreconditionViolated, "map is not 5-regular (degrees " +
                                                      std::to_string(degrees.min_degree) + ".." +
                                                      std::to_string(degrees.max_degree) + ")");
  }
  if (mode == AuditMode::kMinDegree5 && !degrees.min_degree_at_least(5)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "minimum degree " + std::to_string(degrees.min_degree) + " is below 5");
  }

  const FaceCensus census = face_census(map);
  const long v = static_cast<long>(map.vertex_count());
  const long e = static_cast<long>(map.edge_count());
  const long f = static_cast<long>(map.face_count());
  long face_total = 0, handshake = 0;
  for (const auto& [size, n] : census.counts) {
    face_total += n;
    handshake += size * n;
  }

  std::vector<IdentityCheck> checks;
  checks.push_back({"euler", "|V| - |E| + |F| = 2", 2, v - e + f});
  if (mode == AuditMode::kExact5Regular) {
    checks.push_back({"regularity", "2|E| = 5|V|", 5 * v, 2 * e});
  }
  checks.push_back({"face-total", "sum_i |F_i| = |F|", f, face_total});
  checks.push_back({"handshake", "sum_i i |F_i| = 2|E|", 2 * e, handshake});

  const Rational facewise = facewise_charge_sum(census);
  const Rational vertexwise = vertexwise_charge_sum(map);
  if (mode == AuditMode::kExact5Regular) {
    checks.push_back({"charge-facewise", "sum_i (10 - 3i) |F_i| = 20", 20, facewise});
    checks.push_back({"charge-vertexwise", "sum_v f(v) = 20", 20, vertexwise});
  } else {
    long excess = 0;
    for (const auto& [d, n] : degrees.histogram) {
      if (d >= 6) excess += 2L * (d - 5) * n;
    }
    checks.push_back({"charge-facewise-excess", "sum_i (10 - 3i) |F_i| = 20 + sum_{d>=6} 2(d-5) v_d",
                      20 + excess, facewise});
    checks.push_back({"charge-hat", "sum_v f_hat(v) = 20", 20, vertexwise + 10 * v - 4 * e});
  }
  return checks;
}

AugmentationResult augment_diamonds(const PlanarMap& map, std::span<const DiamondSplit> diamonds) {
  const auto& faces = map.faces();
  // (vertex, predecessor on the face walk) -> vertex inserted right after it.
  std::map<std::pair<VertexId, VertexId>, VertexId> inserts;
  std::map<VertexId, int> gained;
  std::set<Edge> added;
  std::set<std::size_t> used_faces;

  for (const DiamondSplit& d : diamonds) {
    if (d.face >= faces.size()) {
      throw Error(ErrorCode::kInvalidArgument, "no face " + std::to_string(d.face));
    }
    const Face& face = faces[d.face];
    if (face.size() != 4 || !face.is_polygon()) {
      throw Error(ErrorCode::kNotAQuadrilateral,
                  "face " + std::to_string(d.face) + " has " + std::to_string(face.size()) + " sides");
    }
    if (!used_faces.insert(d.face).second) {
      throw Error(ErrorCode::kDiagonalExists, "face " + std::to_string(d.face) + " listed twice");
    }
    const auto& b = face.boundary;
    const auto pos_a = std::find(b.begin(), b.end(), d.a) - b.begin();
    const auto pos_b = std::find(b.begin(), b.end(), d.b) - b.begin();
    if (pos_a == 4 || pos_b == 4 || (pos_a + 2) % 4 != pos_b) {
      throw Error(ErrorCode::kDiagonalNotOpposite,
                  std::to_string(d.a) + "-" + std::to_string(d.b) + " is not a diagonal of face " +
                      std::to_string(d.face));
    }
    const Edge key = std::minmax(d.a, d.b);
    if (map.has_edge(d.a, d.b) || !added.insert(key).second) {
      throw Error(ErrorCode::kDiagonalExists,
                  std::to_string(d.a) + "-" + std::to_string(d.b) + " is already an edge");
    }
    for (VertexId end : {d.a, d.b}) {
      if (++gained[end] > 2) {
        throw Error(ErrorCode::kVertexGainsTooManyDiagonals,
                    "vertex " + std::to_string(end) + " would gain more than two diagonals");
      }
    }
    inserts[{d.a, b[(pos_a + 3) % 4]}] = d.b;
    inserts[{d.b, b[(pos_b + 3) % 4]}] = d.a;
  }

  RotationTable table;
  for (VertexId v : map.vertices()) {
    auto& cycle = table[v];
    for (VertexId u : map.rotation(v)) {
      cycle.push_back(u);
      if (auto it = inserts.find({v, u}); it != inserts.end()) cycle.push_back(it->second);
    }
  }

  AugmentationResult result;
  result.map = PlanarMap::build(table);
  result.diagonals_added = static_cast<int>(diamonds.size());
  for (VertexId v : result.map.vertices()) {
    const int d = result.map.degree(v);
    if (d == 6) ++result.v6;
    if (d == 7) ++result.v7;
  }
  result.charge_total_before = vertexwise_charge_sum(map);
  result.charge_total_after = vertexwise_charge_sum(result.map);

  const int q = result.diagonals_added;
  result.checks.push_back({"diagonal-increment", "sum f (after) = sum f (before) + 4 * diagonals",
                           result.charge_total_before + 4 * q, result.charge_total_after});
  if (degree_sequence(map).is_regular(5)) {
    long excess = 0;
    for (VertexId v : result.map.vertices()) excess += result.map.degree(v) - 5;
    result.checks.push_back({"diagonal-degree", "2 * diagonals = v6 + 2 v7", 2 * q, result.v6 + 2 * result.v7});
    result.checks.push_back({"modified-charge", "sum f - 2 v6 - 4 v7 = 20", 20,
                             result.charge_total_after - 2 * excess});
  }
  return result;
}

std::vector<PentagonReport> pentagon_reports(const PlanarMap& map, ChargeKind kind) {
  return pentagon_reports(map, vertex_charges(map), kind);
}

std::vector<PentagonReport> pentagon_reports(const PlanarMap& map, const ChargeTable& charges,
                                             ChargeKind kind) {
  for (const VertexCharge& c : charges.vertices) {
    const bool ok = kind == ChargeKind::kTilde ? (c.degree >= 5 && c.degree <= 7) : c.degree >= 5;
    if (!ok) {
      throw Error(ErrorCode::kDegreeOutOfRange,
                  "vertex " + std::to_string(c.vertex) + " has degree " + std::to_string(c.degree) +
                      (kind == ChargeKind::kTilde ? ", expected 5, 6 or 7" : ", expected at least 5"));
    }
  }

  std::vector<PentagonReport> reports;
  const auto& faces = map.faces();
  for (std::size_t id = 0; id < faces.size(); ++id) {
    if (faces[id].size() != 5) continue;
    PentagonReport report;
    report.face = id;
    for (VertexId v : faces[id].boundary) {
      const VertexCharge& c = charges.at(v);
      const Rational charge = kind == ChargeKind::kTilde ? c.f_tilde : c.f_hat;
      PentagonTerm term;
      term.vertex = v;
      term.ratio = charge / c.count(5);
      term.positive_type = c.degree == 5 && c.count(3) == 4 && c.count(5) == 1;
      report.positive_count += term.positive_type ? 1 : 0;
      report.sum += term.ratio;
      report.terms.push_back(term);
    }
    if (report.positive_count >= 4) {
      report.flagged = true;
      report.note = std::to_string(report.positive_count) +
                    " vertices carry four triangles plus this pentagon; a unit-edge pentagon admits at "
                    "most three (three such vertices force a chain of three equilateral triangles)";
    }
    if (report.sum > 0) {
      report.flagged = true;
      if (!report.note.empty()) report.note += "; ";
      report.note += "pentagon sum " + to_string(report.sum) + " is positive";
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace matchstick
