#include <cmath>
#include <numbers>

#include "matchstick/error.hpp"
#include "matchstick/search.hpp"

namespace matchstick {

namespace {

const double kH = std::sqrt(3.0) / 2.0;

CatalogEntry drawn(std::string name, const std::vector<Edge>& edges, Coordinates coords, std::string provenance,
                   bool keep_coords = true) {
  CatalogEntry e;
  e.name = std::move(name);
  e.map = map_from_drawing(edges, coords);
  if (keep_coords) e.coords = std::move(coords);
  e.provenance = std::move(provenance);
  return e;
}

CatalogEntry twin_pentagon_fans() {
  // Inner pentagon p, a ring of ten alternating m/c vertices, outer pentagon q.
  // Every pentagon vertex sits on four triangles; all degrees are 5.
  Coordinates coords;
  std::vector<Edge> edges;
  auto p = [](int i) { return 1 + (i + 5) % 5; };
  auto m = [](int i) { return 6 + (i + 5) % 5; };
  auto c = [](int i) { return 11 + (i + 5) % 5; };
  auto q = [](int i) { return 16 + (i + 5) % 5; };
  auto polar = [](double r, double degrees) {
    const double t = degrees * std::numbers::pi / 180.0;
    return Point{r * std::cos(t), r * std::sin(t)};
  };
  for (int i = 0; i < 5; ++i) {
    coords[p(i)] = polar(1.0, 72.0 * i);
    coords[m(i)] = polar(2.0, 72.0 * i);
    coords[c(i)] = polar(2.0, 72.0 * i + 36.0);
    coords[q(i)] = polar(3.2, 72.0 * i + 36.0);
  }
  auto link = [&](int a, int b) { edges.emplace_back(std::min(a, b), std::max(a, b)); };
  for (int i = 0; i < 5; ++i) {
    link(p(i), p(i + 1));
    link(p(i), m(i));
    link(p(i), c(i));
    link(p(i), c(i - 1));
    link(m(i), c(i));
    link(m(i), c(i - 1));
    link(q(i), m(i));
    link(q(i), c(i));
    link(q(i), m(i + 1));
    link(q(i), q(i + 1));
  }
  return drawn("twin-pentagon-fans", edges, coords,
               "synthetic 5-regular map: two pentagons whose vertices each carry four triangles; "
               "combinatorial only, no unit drawing exists",
               false);
}

}  // namespace

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;

  out.push_back(drawn("triangle", {{1, 2}, {1, 3}, {2, 3}}, {{1, {0, 0}}, {2, {1, 0}}, {3, {0.5, kH}}},
                      "smallest 2-regular matchstick graph"));

  out.push_back(drawn("square", {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {{1, {0, 0}}, {2, {1, 0}}, {3, {1, 1}}, {4, {0, 1}}},
                      "unit square; 2-regular, quadrilateral faces that are not diamonds"));

  CatalogEntry ico;
  ico.name = "icosahedron";
  ico.map = PlanarMap::build({{1, {3, 2, 8, 6, 7}},
                              {2, {3, 9, 4, 8, 1}},
                              {3, {5, 9, 2, 1, 7}},
                              {4, {2, 9, 10, 12, 8}},
                              {5, {9, 3, 7, 11, 10}},
                              {6, {7, 1, 8, 12, 11}},
                              {7, {5, 3, 1, 6, 11}},
                              {8, {1, 2, 4, 12, 6}},
                              {9, {2, 3, 5, 10, 4}},
                              {10, {9, 5, 11, 12, 4}},
                              {11, {10, 5, 7, 6, 12}},
                              {12, {4, 10, 11, 6, 8}}});
  ico.provenance = "smallest 5-regular planar map; combinatorial only, it has no unit-edge drawing";
  out.push_back(std::move(ico));

  CatalogEntry cube;
  cube.name = "cube";
  cube.map = PlanarMap::build({{1, {5, 2, 3}},
                               {2, {6, 4, 1}},
                               {3, {7, 1, 4}},
                               {4, {8, 3, 2}},
                               {5, {7, 6, 1}},
                               {6, {5, 8, 2}},
                               {7, {8, 5, 3}},
                               {8, {6, 7, 4}}});
  cube.provenance = "3-regular combinatorial exemplar";
  out.push_back(std::move(cube));

  {
    Coordinates coords{{1, {0, 0}}};
    std::vector<Edge> edges;
    for (int i = 0; i < 6; ++i) {
      const double t = i * std::numbers::pi / 3.0;
      coords[2 + i] = Point{std::cos(t), std::sin(t)};
      edges.emplace_back(1, 2 + i);
      edges.emplace_back(std::min(2 + i, 2 + (i + 1) % 6), std::max(2 + i, 2 + (i + 1) % 6));
    }
    out.push_back(drawn("hex-patch", edges, coords,
                        "six unit triangles of the triangular lattice around one vertex of degree 6"));
  }

  out.push_back(drawn("rhombus-strip", {{1, 2}, {2, 3}, {4, 5}, {5, 6}, {1, 4}, {2, 5}, {3, 6}},
                      {{1, {0, 0}}, {2, {1, 0}}, {3, {2, 0}}, {4, {0.5, kH}}, {5, {1.5, kH}}, {6, {2.5, kH}}},
                      "two 60-degree unit rhombi; both are diamonds"));

  out.push_back(twin_pentagon_fans());
  return out;
}

CatalogEntry catalog_entry(const std::string& name) {
  for (CatalogEntry& e : catalog()) {
    if (e.name == name) return std::move(e);
  }
  throw Error(ErrorCode::kInvalidArgument, "no catalog entry named '" + name + "'");
}

}  // namespace matchstick
