#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "matchstick/error.hpp"
#include "matchstick/search.hpp"

namespace matchstick {

bool DegreeRule::accepts(const PlanarMap& map) const {
  const DegreeSummary d = degree_sequence(map);
  return kind == Kind::kRegular ? d.is_regular(k) : d.min_degree_at_least(k);
}

std::string DegreeRule::describe() const {
  return (kind == Kind::kRegular ? "regular-" : "min-degree-") + std::to_string(k);
}

void validate_spec(const SearchSpec& spec) {
  const int k = spec.rule.k;
  if (spec.rule.kind == DegreeRule::Kind::kRegular) {
    if (k >= 6) {
      throw Error(ErrorCode::kInvalidArgument,
                  "k = " + std::to_string(k) +
                      " rejected: no finite regular plane map of valency k >= 6 exists. Euler's relation "
                      "|V| - |E| + |F| = 2 with 2|E| = k|V| and 3|F| <= 2|E| gives (6 - k)|V| >= 12");
    }
    if (k < 2) throw Error(ErrorCode::kInvalidArgument, "k must be in {2, 3, 4, 5}");
  } else if (k < 1 || k > 5) {
    throw Error(ErrorCode::kInvalidArgument,
                "minimum degree must be in {1, ..., 5}; degree >= 6 everywhere contradicts Euler's relation");
  }
  if (spec.max_edges < 0) throw Error(ErrorCode::kInvalidArgument, "max_edges must be non-negative");
  if (!(spec.time_budget_seconds > 0.0)) throw Error(ErrorCode::kInvalidArgument, "time budget must be positive");
}

namespace {

// 0-based rotation system used during generation.
using Rotation = std::vector<std::vector<int>>;

constexpr int kSeparator = -1;

int position(const std::vector<int>& cycle, int v) {
  return static_cast<int>(std::find(cycle.begin(), cycle.end(), v) - cycle.begin());
}

// Code from one root dart; gives up (returns false) as soon as the partial
// code exceeds `best`.
bool code_from_root(const Rotation& rot, int root, int start, const std::vector<int>* best, std::vector<int>& code) {
  const std::size_t n = rot.size();
  std::vector<int> label(n, -1), ref(n, 0), order;
  order.reserve(n);
  label[root] = 0;
  ref[root] = start;
  order.push_back(root);
  code.clear();
  bool tied = best != nullptr;
  auto emit = [&](int value) {
    if (tied) {
      const int other = (*best)[code.size()];
      if (value > other) return false;
      if (value < other) tied = false;
    }
    code.push_back(value);
    return true;
  };
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const int w = order[idx];
    const auto& cycle = rot[w];
    const int d = static_cast<int>(cycle.size());
    for (int t = 0; t < d; ++t) {
      const int u = cycle[(ref[w] + t) % d];
      if (label[u] < 0) {
        label[u] = static_cast<int>(order.size());
        ref[u] = position(rot[u], w);
        order.push_back(u);
      }
      if (!emit(label[u])) return false;
    }
    if (!emit(kSeparator)) return false;
  }
  return true;
}

std::vector<int> canonical(const Rotation& rot) {
  std::vector<int> best, code;
  bool have = false;
  for (int v = 0; v < static_cast<int>(rot.size()); ++v) {
    const int d = static_cast<int>(rot[v].size());
    for (int s = 0; s < std::max(d, 1); ++s) {
      if (d == 0 && rot.size() > 1) break;
      if (code_from_root(rot, v, s, have ? &best : nullptr, code)) {
        if (!have || code < best) best = code;
        have = true;
      }
    }
  }
  return best;
}

Rotation to_rotation(const PlanarMap& map) {
  Rotation rot(map.vertex_count());
  for (std::size_t i = 0; i < map.vertex_count(); ++i) {
    for (VertexId u : map.rotation(map.vertices()[i])) rot[i].push_back(static_cast<int>(map.index_of(u)));
  }
  return rot;
}

PlanarMap to_map(const Rotation& rot) {
  RotationTable table;
  for (std::size_t i = 0; i < rot.size(); ++i) {
    auto& cycle = table[static_cast<VertexId>(i + 1)];
    for (int u : rot[i]) cycle.push_back(u + 1);
  }
  return PlanarMap::build(table);
}

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x + 2);
      h *= 1099511628211ULL;
    }
    return h;
  }
};

struct Limits {
  DegreeRule rule;
  int max_edges = 0;
  int max_vertices = 0;
  int max_degree = 0;  // 0 = unbounded
};

bool within_limits(const Rotation& rot, const Limits& lim) {
  const int n = static_cast<int>(rot.size());
  if (n > lim.max_vertices) return false;
  int deficit = 0;
  int darts = 0;
  for (const auto& c : rot) {
    const int d = static_cast<int>(c.size());
    darts += d;
    if (lim.max_degree > 0 && d > lim.max_degree) return false;
    deficit += std::max(0, lim.rule.k - d);
  }
  return deficit <= 2 * (lim.max_edges - darts / 2);
}

bool satisfies(const Rotation& rot, const DegreeRule& rule) {
  if (rot.empty()) return false;
  for (const auto& c : rot) {
    const int d = static_cast<int>(c.size());
    if (rule.kind == DegreeRule::Kind::kRegular ? d != rule.k : d < rule.k) return false;
  }
  return true;
}

// Faces as lists of corners (vertex, index in its rotation of the incoming
// neighbor), traced with the same successor rule as PlanarMap.
std::vector<std::vector<std::pair<int, int>>> corners_by_face(const Rotation& rot) {
  std::vector<std::vector<std::pair<int, int>>> faces;
  std::vector<std::vector<char>> used(rot.size());
  for (std::size_t v = 0; v < rot.size(); ++v) used[v].assign(rot[v].size(), 0);
  for (int v = 0; v < static_cast<int>(rot.size()); ++v) {
    for (int j = 0; j < static_cast<int>(rot[v].size()); ++j) {
      if (used[v][j]) continue;
      std::vector<std::pair<int, int>> face;
      int a = v, pos = j;
      while (!used[a][pos]) {
        used[a][pos] = 1;
        const int b = rot[a][pos];
        const int back = position(rot[b], a);
        // Corner at b between incoming a and outgoing rot[b][back + 1].
        face.emplace_back(b, back);
        pos = (back + 1) % static_cast<int>(rot[b].size());
        a = b;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

// Inserts `added` right after rotation index `after` at vertex v.
void insert_after(Rotation& rot, int v, int after, int added) {
  auto& c = rot[v];
  c.insert(c.begin() + (c.empty() ? 0 : after + 1), added);
}

}  // namespace

std::vector<int> canonical_code(const PlanarMap& map, bool merge_mirrors) {
  Rotation rot = to_rotation(map);
  std::vector<int> code = canonical(rot);
  if (merge_mirrors) {
    for (auto& c : rot) std::reverse(c.begin(), c.end());
    code = std::min(code, canonical(rot));
  }
  return code;
}

EnumerationStats enumerate_maps(const SearchSpec& spec, const std::function<void(const PlanarMap&)>& sink) {
  validate_spec(spec);
  EnumerationStats stats;
  Limits lim;
  lim.rule = spec.rule;
  lim.max_edges = spec.max_edges;
  lim.max_vertices = spec.max_edges == 0 ? 1 : (2 * spec.max_edges) / spec.rule.k;
  lim.max_degree = spec.rule.kind == DegreeRule::Kind::kRegular ? spec.rule.k : 0;

  std::vector<Rotation> level{Rotation(1)};
  if (!within_limits(level.front(), lim)) level.clear();
  for (int edges = 0; !level.empty(); ++edges) {
    stats.level_sizes.push_back(level.size());
    for (const Rotation& rot : level) {
      if (satisfies(rot, spec.rule)) {
        sink(to_map(rot));
        ++stats.emitted;
      }
    }
    if (edges == spec.max_edges) break;

    std::unordered_set<std::vector<int>, VectorHash> seen;
    std::vector<std::pair<std::vector<int>, Rotation>> next;
    auto offer = [&](Rotation&& child) {
      if (!within_limits(child, lim)) return;
      std::vector<int> code = canonical(child);
      if (seen.insert(code).second) next.emplace_back(std::move(code), std::move(child));
    };

    for (const Rotation& rot : level) {
      const int n = static_cast<int>(rot.size());
      // A new leaf in some corner.
      for (int v = 0; v < n; ++v) {
        const int d = static_cast<int>(rot[v].size());
        for (int j = 0; j < std::max(d, 1); ++j) {
          Rotation child = rot;
          child.push_back({v});
          insert_after(child, v, j, n);
          offer(std::move(child));
        }
      }
      // A new edge across a face between two corners at distinct,
      // non-adjacent vertices.
      for (const auto& face : corners_by_face(rot)) {
        for (std::size_t x = 0; x < face.size(); ++x) {
          for (std::size_t y = x + 1; y < face.size(); ++y) {
            const auto [u, cu] = face[x];
            const auto [w, cw] = face[y];
            if (u == w) continue;
            if (std::find(rot[u].begin(), rot[u].end(), w) != rot[u].end()) continue;
            Rotation child = rot;
            insert_after(child, u, cu, w);
            insert_after(child, w, cw, u);
            offer(std::move(child));
          }
        }
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [code, rot] : next) level.push_back(std::move(rot));
  }
  return stats;
}

std::vector<PlanarMap> enumerate_maps(const SearchSpec& spec) {
  std::vector<PlanarMap> out;
  enumerate_maps(spec, [&](const PlanarMap& m) { out.push_back(m); });
  return out;
}

}  // namespace matchstick
