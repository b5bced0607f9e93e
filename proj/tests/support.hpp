#pragma once

// Test-only constructions. Maps here come from 3D point sets, so their face
// structure is known independently of the library's own catalog.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include "matchstick/map.hpp"

namespace testing {

using Vec3 = std::array<double, 3>;

inline Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

// Pairs of points at the minimum pairwise distance (0-based indices).
inline std::vector<std::pair<int, int>> shortest_pairs(const std::vector<Vec3>& pts) {
  double best = 1e300;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, norm(sub(pts[i], pts[j])));
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (norm(sub(pts[i], pts[j])) < best * (1 + 1e-9)) out.emplace_back(int(i), int(j));
  return out;
}

// Rotation system of a graph drawn on a convex-ish surface around the
// centroid: neighbors sorted counterclockwise as seen from outside. Vertex
// ids are index + 1.
inline matchstick::RotationTable surface_rotation(const std::vector<Vec3>& pts,
                                                  const std::vector<std::pair<int, int>>& edges) {
  Vec3 c{0, 0, 0};
  for (const Vec3& p : pts)
    for (int k = 0; k < 3; ++k) c[k] += p[k] / double(pts.size());
  std::vector<std::vector<int>> adj(pts.size());
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  matchstick::RotationTable table;
  for (std::size_t v = 0; v < pts.size(); ++v) {
    const Vec3 n = sub(pts[v], c);
    Vec3 e1 = sub(pts[adj[v][0]], pts[v]);
    const double along = dot(e1, n) / dot(n, n);
    for (int k = 0; k < 3; ++k) e1[k] -= along * n[k];
    const Vec3 e2 = cross(n, e1);
    std::vector<std::pair<double, int>> order;
    for (int w : adj[v]) {
      const Vec3 d = sub(pts[w], pts[v]);
      order.emplace_back(std::atan2(dot(d, e2), dot(d, e1)), w + 1);
    }
    std::sort(order.begin(), order.end());
    auto& row = table[int(v) + 1];
    for (auto [angle, w] : order) row.push_back(w);
  }
  return table;
}

inline std::vector<Vec3> icosahedron_points() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<Vec3> pts;
  for (double a : {-1.0, 1.0})
    for (double b : {-phi, phi}) {
      pts.push_back({0, a, b});
      pts.push_back({a, b, 0});
      pts.push_back({b, 0, a});
    }
  return pts;
}

// Snub cube: even permutations of (+-1, +-1/t, +-t) with an even number of
// plus signs and odd permutations with an odd number, t the tribonacci
// constant.
inline std::vector<Vec3> snub_cube_points() {
  const double t = (1 + std::cbrt(19 + 3 * std::sqrt(33.0)) + std::cbrt(19 - 3 * std::sqrt(33.0))) / 3;
  const std::array<double, 3> base{1, 1 / t, t};
  const std::array<std::array<int, 3>, 3> even{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
  const std::array<std::array<int, 3>, 3> odd{{{1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};
  std::vector<Vec3> pts;
  for (int signs = 0; signs < 8; ++signs) {
    int plus = 0;
    std::array<double, 3> s{};
    for (int k = 0; k < 3; ++k) {
      const bool positive = (signs >> k) & 1;
      plus += positive;
      s[k] = positive ? base[k] : -base[k];
    }
    for (const auto& p : plus % 2 == 0 ? even : odd) pts.push_back({s[p[0]], s[p[1]], s[p[2]]});
  }
  return pts;
}

inline matchstick::PlanarMap polyhedron(const std::vector<Vec3>& pts) {
  return matchstick::PlanarMap::build(surface_rotation(pts, shortest_pairs(pts)));
}

// A 5-regular map with a band of n quadrilaterals between two antiprism
// bands, capped by two apexes of degree n (so n = 5 keeps it 5-regular).
// Every band vertex lies on two quadrilaterals, so splitting neighboring
// quadrilaterals can push a vertex to degree 7.
inline matchstick::PlanarMap banded_map(int n = 5) {
  std::vector<Vec3> pts;
  std::vector<std::pair<int, int>> edges;
  const double step = 2 * std::numbers::pi / n;
  pts.push_back({0, 0, 2});
  const std::array<double, 4> height{1.0, 0.3, -0.3, -1.0};
  const std::array<double, 4> offset{0.0, 0.5, 0.5, 0.0};
  for (int r = 0; r < 4; ++r)
    for (int i = 0; i < n; ++i)
      pts.push_back({std::cos(step * (i + offset[r])), std::sin(step * (i + offset[r])), height[r]});
  pts.push_back({0, 0, -2});
  auto at = [n](int r, int i) { return 1 + r * n + ((i % n) + n) % n; };
  const int bottom = 1 + 4 * n;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(0, at(0, i));
    edges.emplace_back(bottom, at(3, i));
    for (int r = 0; r < 4; ++r) edges.emplace_back(at(r, i), at(r, i + 1));
    edges.emplace_back(at(1, i), at(0, i));
    edges.emplace_back(at(1, i), at(0, i + 1));
    edges.emplace_back(at(1, i), at(2, i));
    edges.emplace_back(at(2, i), at(3, i));
    edges.emplace_back(at(2, i), at(3, i + 1));
  }
  return matchstick::PlanarMap::build(surface_rotation(pts, edges));
}

// Face ids of quadrilaterals, in face order.
inline std::vector<std::size_t> quadrilaterals(const matchstick::PlanarMap& map) {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < map.faces().size(); ++f)
    if (map.faces()[f].size() == 4) out.push_back(f);
  return out;
}

}  // namespace testing
