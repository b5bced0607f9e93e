#include "matchstick/map.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <set>
#include <sstream>

#include "matchstick/error.hpp"

namespace matchstick {

bool Face::is_polygon() const {
  std::vector<VertexId> sorted = boundary;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool Face::contains(VertexId v) const {
  return std::find(boundary.begin(), boundary.end(), v) != boundary.end();
}

namespace {

std::size_t position_in(const std::vector<VertexId>& cycle, VertexId v) {
  auto it = std::find(cycle.begin(), cycle.end(), v);
  return static_cast<std::size_t>(it - cycle.begin());
}

}  // namespace

PlanarMap PlanarMap::build(const RotationTable& table) {
  PlanarMap m;
  if (table.empty()) return m;

  m.ids_.reserve(table.size());
  for (const auto& [id, cycle] : table) {
    if (id <= 0) {
      throw Error(ErrorCode::kInvalidArgument, "vertex id " + std::to_string(id) + " is not positive");
    }
    m.ids_.push_back(id);
    m.rotation_.push_back(cycle);
  }

  std::size_t darts = 0;
  for (std::size_t i = 0; i < m.ids_.size(); ++i) {
    const VertexId v = m.ids_[i];
    std::set<VertexId> seen;
    for (VertexId u : m.rotation_[i]) {
      if (!table.count(u)) {
        throw Error(ErrorCode::kUnknownVertex,
                    "vertex " + std::to_string(v) + " lists undeclared neighbor " + std::to_string(u));
      }
      if (u == v) throw Error(ErrorCode::kNotSimple, "loop at vertex " + std::to_string(v));
      if (!seen.insert(u).second) {
        throw Error(ErrorCode::kNotSimple,
                    "parallel edge " + std::to_string(v) + "-" + std::to_string(u));
      }
    }
    darts += m.rotation_[i].size();
  }
  for (std::size_t i = 0; i < m.ids_.size(); ++i) {
    const VertexId v = m.ids_[i];
    for (VertexId u : m.rotation_[i]) {
      const auto& back = table.at(u);
      if (std::find(back.begin(), back.end(), v) == back.end()) {
        throw Error(ErrorCode::kAsymmetricAdjacency,
                    std::to_string(v) + " lists " + std::to_string(u) + " but not vice versa");
      }
    }
  }
  m.edge_count_ = darts / 2;

  // Connectivity.
  std::vector<char> reached(m.ids_.size(), 0);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  reached[0] = 1;
  std::size_t reached_count = 1;
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop();
    for (VertexId u : m.rotation_[i]) {
      const std::size_t j = m.index_of(u);
      if (!reached[j]) {
        reached[j] = 1;
        ++reached_count;
        frontier.push(j);
      }
    }
  }
  if (reached_count != m.ids_.size()) {
    throw Error(ErrorCode::kDisconnected,
                std::to_string(m.ids_.size() - reached_count) + " vertices unreachable from " +
                    std::to_string(m.ids_.front()));
  }

  // Face tracing.
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  m.dart_face_.resize(m.ids_.size());
  for (std::size_t i = 0; i < m.ids_.size(); ++i) m.dart_face_[i].assign(m.rotation_[i].size(), kUnset);

  if (m.edge_count_ == 0) {
    m.faces_.push_back(Face{});
  }
  for (std::size_t i = 0; i < m.ids_.size(); ++i) {
    for (std::size_t j = 0; j < m.rotation_[i].size(); ++j) {
      if (m.dart_face_[i][j] != kUnset) continue;
      const std::size_t face_id = m.faces_.size();
      Face face;
      std::size_t vi = i, pos = j;
      while (m.dart_face_[vi][pos] == kUnset) {
        m.dart_face_[vi][pos] = face_id;
        face.boundary.push_back(m.ids_[vi]);
        const VertexId from = m.ids_[vi];
        const std::size_t wi = m.index_of(m.rotation_[vi][pos]);
        const auto& rot = m.rotation_[wi];
        pos = (position_in(rot, from) + 1) % rot.size();
        vi = wi;
      }
      m.faces_.push_back(std::move(face));
    }
  }

  const long chi = euler_characteristic(m);
  if (chi != 2) {
    throw Error(ErrorCode::kNonPlanarEmbedding,
                "|V| - |E| + |F| = " + std::to_string(chi) + ", expected 2");
  }
  return m;
}

bool PlanarMap::has_vertex(VertexId v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

std::size_t PlanarMap::index_of(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) {
    throw Error(ErrorCode::kUnknownVertex, "no vertex " + std::to_string(v));
  }
  return static_cast<std::size_t>(it - ids_.begin());
}

const std::vector<VertexId>& PlanarMap::rotation(VertexId v) const { return rotation_[index_of(v)]; }

bool PlanarMap::has_edge(VertexId u, VertexId v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& rot = rotation(u);
  return std::find(rot.begin(), rot.end(), v) != rot.end();
}

std::vector<Edge> PlanarMap::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    for (VertexId u : rotation_[i]) {
      if (ids_[i] < u) out.emplace_back(ids_[i], u);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t PlanarMap::face_of_dart(VertexId u, VertexId v) const {
  const std::size_t i = index_of(u);
  const std::size_t pos = position_in(rotation_[i], v);
  if (pos == rotation_[i].size()) {
    throw Error(ErrorCode::kUnknownVertex,
                "no edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  return dart_face_[i][pos];
}

RotationTable PlanarMap::rotation_table() const {
  RotationTable table;
  for (std::size_t i = 0; i < ids_.size(); ++i) table.emplace(ids_[i], rotation_[i]);
  return table;
}

bool PlanarMap::operator==(const PlanarMap& other) const {
  if (ids_ != other.ids_) return false;
  for (std::size_t i = 0; i < rotation_.size(); ++i) {
    const auto& a = rotation_[i];
    const auto& b = other.rotation_[i];
    if (a.size() != b.size()) return false;
    if (a.empty()) continue;
    auto start = std::find(b.begin(), b.end(), a.front());
    if (start == b.end()) return false;
    std::vector<VertexId> shifted(start, b.end());
    shifted.insert(shifted.end(), b.begin(), start);
    if (shifted != a) return false;
  }
  return true;
}

PlanarMap PlanarMap::mirrored() const {
  RotationTable table = rotation_table();
  for (auto& [id, cycle] : table) std::reverse(cycle.begin(), cycle.end());
  return build(table);
}

long FaceCensus::count(int size) const {
  auto it = counts.find(size);
  return it == counts.end() ? 0 : it->second;
}

bool FaceCensus::face_total_holds() const {
  long total = 0;
  for (const auto& [size, n] : counts) total += n;
  return total == faces;
}

bool FaceCensus::handshake_holds() const {
  long total = 0;
  for (const auto& [size, n] : counts) total += static_cast<long>(size) * n;
  return total == 2 * edges;
}

FaceCensus face_census(const PlanarMap& map) {
  FaceCensus census;
  for (const Face& f : map.faces()) ++census.counts[static_cast<int>(f.size())];
  census.faces = static_cast<long>(map.face_count());
  census.edges = static_cast<long>(map.edge_count());
  return census;
}

DegreeSummary degree_sequence(const PlanarMap& map) {
  DegreeSummary s;
  for (VertexId v : map.vertices()) {
    const int d = map.degree(v);
    s.degrees.push_back(d);
    ++s.histogram[d];
  }
  if (!s.degrees.empty()) {
    auto [lo, hi] = std::minmax_element(s.degrees.begin(), s.degrees.end());
    s.min_degree = *lo;
    s.max_degree = *hi;
  }
  return s;
}

long euler_characteristic(const PlanarMap& map) {
  return static_cast<long>(map.vertex_count()) - static_cast<long>(map.edge_count()) +
         static_cast<long>(map.face_count());
}

namespace {

int parse_int(std::string_view token, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kSyntax, "expected an integer, got '" + std::string(token) + "'", line);
  }
  if (value <= 0) {
    throw Error(ErrorCode::kSyntax, "vertex ids must be positive, got " + std::string(token), line);
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

PlanarMap parse_map(std::string_view text) {
  RotationTable table;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (split_ws(line).empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::kSyntax, "missing ':' after vertex id", line_no);
    }
    const auto head = split_ws(line.substr(0, colon));
    if (head.size() != 1) throw Error(ErrorCode::kSyntax, "expected a single vertex id before ':'", line_no);
    const VertexId id = parse_int(head[0], line_no);
    std::vector<VertexId> cycle;
    for (std::string_view tok : split_ws(line.substr(colon + 1))) cycle.push_back(parse_int(tok, line_no));
    if (!table.emplace(id, std::move(cycle)).second) {
      throw Error(ErrorCode::kSyntax, "vertex " + std::to_string(id) + " declared twice", line_no);
    }
    if (end == text.size()) break;
  }
  return PlanarMap::build(table);
}

std::string serialize_map(const PlanarMap& map) {
  std::ostringstream out;
  for (VertexId v : map.vertices()) {
    std::vector<VertexId> cycle = map.rotation(v);
    if (!cycle.empty()) std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    out << v << ':';
    for (VertexId u : cycle) out << ' ' << u;
    out << '\n';
  }
  return out.str();
}

}  // namespace matchstick
