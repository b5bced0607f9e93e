#include "matchstick/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "matchstick/error.hpp"

namespace matchstick {

const Point& GeometricMap::at(VertexId v) const {
  auto it = coords.find(v);
  if (it == coords.end()) throw Error(ErrorCode::kUnknownVertex, "no coordinates for vertex " + std::to_string(v));
  return it->second;
}

namespace {

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view token, int line, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kSyntax, std::string("expected ") + what + ", got '" + std::string(token) + "'", line);
  }
  return value;
}

std::string format_decimal(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
  if (ec != std::errc{}) return std::to_string(value);
  return std::string(buf, ptr);
}

}  // namespace

Coordinates parse_coordinates(std::string_view text) {
  Coordinates coords;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (tokens(line).empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorCode::kSyntax, "missing ':' after vertex id", line_no);
    const auto head = tokens(line.substr(0, colon));
    const auto rest = tokens(line.substr(colon + 1));
    if (head.size() != 1) throw Error(ErrorCode::kSyntax, "expected a single vertex id before ':'", line_no);
    if (rest.size() != 2) throw Error(ErrorCode::kSyntax, "expected two coordinates", line_no);
    const int id = parse_number<int>(head[0], line_no, "a vertex id");
    if (id <= 0) throw Error(ErrorCode::kSyntax, "vertex ids must be positive", line_no);
    const Point p{parse_number<double>(rest[0], line_no, "a number"), parse_number<double>(rest[1], line_no, "a number")};
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw Error(ErrorCode::kSyntax, "non-finite coordinate", line_no);
    if (!coords.emplace(id, p).second) {
      throw Error(ErrorCode::kSyntax, "vertex " + std::to_string(id) + " given twice", line_no);
    }
  }
  return coords;
}

std::string serialize_coordinates(const Coordinates& coords) {
  std::string out;
  for (const auto& [id, p] : coords) {
    out += std::to_string(id) + ": " + format_decimal(p.x) + " " + format_decimal(p.y) + "\n";
  }
  return out;
}

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

double orient(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

namespace {

double point_segment_distance(const Point& p, const Point& a, const Point& b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, Point{a.x + t * dx, a.y + t * dy});
}

// Signed distance of c from the line through a and b.
double side(const Point& a, const Point& b, const Point& c) {
  const double len = distance(a, b);
  return len > 0.0 ? orient(a, b, c) / len : 0.0;
}

}  // namespace

double segment_distance(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (segments_properly_cross(a, b, c, d, 0.0)) return 0.0;
  return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                   point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

bool segments_properly_cross(const Point& a, const Point& b, const Point& c, const Point& d, double eps) {
  const double s1 = side(a, b, c), s2 = side(a, b, d);
  const double s3 = side(c, d, a), s4 = side(c, d, b);
  auto opposite = [eps](double p, double q) { return (p > eps && q < -eps) || (p < -eps && q > eps); };
  return opposite(s1, s2) && opposite(s3, s4);
}

bool ValidationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* ValidationReport::find(std::string_view name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<VertexId> rotation_mismatches(const GeometricMap& gmap) {
  std::vector<VertexId> bad;
  for (VertexId v : gmap.map.vertices()) {
    const auto& rot = gmap.map.rotation(v);
    if (rot.size() < 3) continue;
    const Point& p = gmap.at(v);
    std::vector<std::pair<double, VertexId>> by_angle;
    for (VertexId u : rot) {
      const Point& q = gmap.at(u);
      by_angle.emplace_back(std::atan2(q.y - p.y, q.x - p.x), u);
    }
    std::sort(by_angle.begin(), by_angle.end());
    const auto start = std::find(rot.begin(), rot.end(), by_angle.front().second) - rot.begin();
    for (std::size_t i = 0; i < rot.size(); ++i) {
      if (rot[(static_cast<std::size_t>(start) + i) % rot.size()] != by_angle[i].second) {
        bad.push_back(v);
        break;
      }
    }
  }
  return bad;
}

ValidationReport validate_matchstick(const GeometricMap& gmap, std::optional<int> k) {
  ValidationReport report;
  const PlanarMap& map = gmap.map;
  const double eps = gmap.tolerance;
  auto name_edge = [](const Edge& e) { return std::to_string(e.first) + "-" + std::to_string(e.second); };

  CheckResult present{"coordinates"};
  for (VertexId v : map.vertices()) {
    if (!gmap.coords.count(v)) {
      present.pass = false;
      present.details.push_back("vertex " + std::to_string(v) + " has no coordinates");
    }
  }
  report.checks.push_back(present);
  if (!present.pass) {
    for (const char* name : {"unit-lengths", "coincident-vertices", "crossings", "overlaps", "rotation"}) {
      report.checks.push_back({name, false, {"skipped: coordinates missing"}});
    }
  } else {
    const std::vector<Edge> edges = map.edges();

    CheckResult lengths{"unit-lengths"};
    for (const Edge& e : edges) {
      const double len = distance(gmap.at(e.first), gmap.at(e.second));
      if (std::abs(len - 1.0) > eps) {
        lengths.pass = false;
        std::ostringstream msg;
        msg.precision(12);
        msg << "edge " << name_edge(e) << " has length " << len;
        lengths.details.push_back(msg.str());
      }
    }
    report.checks.push_back(lengths);

    CheckResult coincident{"coincident-vertices"};
    const auto& ids = map.vertices();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        if (distance(gmap.at(ids[i]), gmap.at(ids[j])) <= eps) {
          coincident.pass = false;
          coincident.details.push_back("vertices " + std::to_string(ids[i]) + " and " + std::to_string(ids[j]) +
                                       " coincide");
        }
      }
    }
    report.checks.push_back(coincident);

    CheckResult crossings{"crossings"};
    CheckResult overlaps{"overlaps"};
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        const auto [a, b] = edges[i];
        const auto [c, d] = edges[j];
        const std::string pair = name_edge(edges[i]) + " and " + name_edge(edges[j]);
        const int shared = (a == c) + (a == d) + (b == c) + (b == d);
        if (shared == 0) {
          const Point &pa = gmap.at(a), &pb = gmap.at(b), &pc = gmap.at(c), &pd = gmap.at(d);
          if (segments_properly_cross(pa, pb, pc, pd, eps)) {
            crossings.pass = false;
            crossings.details.push_back(pair + " cross");
          } else if (segment_distance(pa, pb, pc, pd) <= eps) {
            overlaps.pass = false;
            overlaps.details.push_back(pair + " touch or overlap");
          }
        } else {
          const VertexId common = (a == c || a == d) ? a : b;
          const VertexId x = a == common ? b : a;
          const VertexId y = c == common ? d : c;
          const Point &pp = gmap.at(common), &px = gmap.at(x), &py = gmap.at(y);
          if (point_segment_distance(px, pp, py) <= eps || point_segment_distance(py, pp, px) <= eps) {
            overlaps.pass = false;
            overlaps.details.push_back(pair + " overlap along a common direction");
          }
        }
      }
    }
    report.checks.push_back(crossings);
    report.checks.push_back(overlaps);

    CheckResult rotation{"rotation"};
    for (VertexId v : rotation_mismatches(gmap)) {
      rotation.pass = false;
      rotation.details.push_back("angular order at vertex " + std::to_string(v) + " differs from the rotation");
    }
    report.checks.push_back(rotation);
  }

  if (k) {
    CheckResult regular{"regularity"};
    for (VertexId v : map.vertices()) {
      if (map.degree(v) != *k) {
        regular.pass = false;
        regular.details.push_back("vertex " + std::to_string(v) + " has degree " + std::to_string(map.degree(v)) +
                                  ", expected " + std::to_string(*k));
      }
    }
    if (map.empty()) {
      regular.pass = false;
      regular.details.push_back("map is empty");
    }
    report.checks.push_back(regular);
  }
  return report;
}

namespace {

// Bounded triangular faces at v. With coordinates the outer face (positive
// area) is excluded; without them every triangular face counts.
int triangles_at(const GeometricMap& gmap, VertexId v) {
  int count = 0;
  for (VertexId u : gmap.map.rotation(v)) {
    const Face& f = gmap.map.faces()[gmap.map.face_of_dart(v, u)];
    if (f.size() != 3) continue;
    const bool drawn = std::all_of(f.boundary.begin(), f.boundary.end(),
                                   [&](VertexId w) { return gmap.coords.count(w) > 0; });
    if (drawn && signed_area(gmap, f) > 0.0) continue;
    ++count;
  }
  return count;
}

}  // namespace

TriangleCount count_triangles_at(const GeometricMap& gmap, VertexId v) {
  TriangleCount out;
  out.degree = gmap.map.degree(v);
  out.count = triangles_at(gmap, v);
  out.bound_applies = out.degree == 5 && validate_matchstick(gmap).pass();
  out.within_bound = !out.bound_applies || out.count <= 4;
  return out;
}

std::vector<VertexId> triangle_bound_violations(const GeometricMap& gmap) {
  std::vector<VertexId> bad;
  if (!validate_matchstick(gmap).pass()) return bad;
  for (VertexId v : gmap.map.vertices()) {
    if (gmap.map.degree(v) != 5) continue;
    if (triangles_at(gmap, v) > 4) bad.push_back(v);
  }
  return bad;
}

double signed_area(const GeometricMap& gmap, const Face& face) {
  double twice = 0.0;
  const auto& b = face.boundary;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const Point& p = gmap.at(b[i]);
    const Point& q = gmap.at(b[(i + 1) % b.size()]);
    twice += p.x * q.y - q.x * p.y;
  }
  return twice / 2.0;
}

std::vector<Diamond> detect_diamonds(const GeometricMap& gmap) {
  std::vector<Diamond> out;
  const double eps = gmap.tolerance;
  const auto& faces = gmap.map.faces();
  for (std::size_t id = 0; id < faces.size(); ++id) {
    const Face& face = faces[id];
    if (face.size() != 4 || !face.is_polygon()) continue;
    if (signed_area(gmap, face) >= 0.0) continue;  // the outer face
    const auto& b = face.boundary;
    bool convex = true, unit_sides = true;
    for (std::size_t i = 0; i < 4; ++i) {
      const Point &p = gmap.at(b[i]), &q = gmap.at(b[(i + 1) % 4]), &r = gmap.at(b[(i + 2) % 4]);
      if (side(p, q, r) >= -eps) convex = false;  // bounded faces turn clockwise
      if (std::abs(distance(p, q) - 1.0) > eps) unit_sides = false;
    }
    if (!convex || !unit_sides) continue;
    const double d02 = distance(gmap.at(b[0]), gmap.at(b[2]));
    const double d13 = distance(gmap.at(b[1]), gmap.at(b[3]));
    const bool first = d02 <= d13;
    const double shorter = first ? d02 : d13;
    if (std::abs(shorter - 1.0) > eps) continue;
    const VertexId u = first ? b[0] : b[1];
    const VertexId w = first ? b[2] : b[3];
    out.push_back({id, std::min(u, w), std::max(u, w), shorter});
  }
  return out;
}

PlanarMap map_from_drawing(const std::vector<Edge>& edges, const Coordinates& coords) {
  std::map<VertexId, std::vector<VertexId>> adjacency;
  for (const auto& [id, p] : coords) adjacency[id];
  for (const auto& [u, v] : edges) {
    if (!coords.count(u) || !coords.count(v)) {
      throw Error(ErrorCode::kUnknownVertex,
                  "edge " + std::to_string(u) + "-" + std::to_string(v) + " has an endpoint without coordinates");
    }
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  RotationTable table;
  for (auto& [v, nbrs] : adjacency) {
    const Point& p = coords.at(v);
    std::sort(nbrs.begin(), nbrs.end(), [&](VertexId a, VertexId b) {
      const Point &qa = coords.at(a), &qb = coords.at(b);
      return std::atan2(qa.y - p.y, qa.x - p.x) < std::atan2(qb.y - p.y, qb.x - p.x);
    });
    table.emplace(v, nbrs);
  }
  return PlanarMap::build(table);
}

}  // namespace matchstick
