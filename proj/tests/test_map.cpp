#include <doctest.h>

#include <set>

#include "matchstick/error.hpp"
#include "matchstick/map.hpp"
#include "matchstick/search.hpp"
#include "support.hpp"

using namespace matchstick;

namespace {

ErrorCode code_of(std::string_view text) {
  try {
    parse_map(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInvalidArgument;
}

int line_of(std::string_view text) {
  try {
    parse_map(text);
  } catch (const Error& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("triangle has two faces of size three") {
  const PlanarMap m = parse_map("1: 2 3\n2: 3 1\n3: 1 2\n");
  CHECK(m.vertex_count() == 3);
  CHECK(m.edge_count() == 3);
  CHECK(m.face_count() == 2);
  CHECK(euler_characteristic(m) == 2);
  const FaceCensus c = face_census(m);
  CHECK(c.count(3) == 2);
  CHECK(c.face_total_holds());
  CHECK(c.handshake_holds());
}

TEST_CASE("face tracing orientation") {
  // Unit square drawn counterclockwise: 1 (0,0), 2 (1,0), 3 (1,1), 4 (0,1).
  const PlanarMap m = parse_map("1: 2 4\n2: 3 1\n3: 4 2\n4: 1 3\n");
  REQUIRE(m.face_count() == 2);
  // A face lies to the right of its darts: 2->1 runs west along the bottom
  // with the square's interior on its right, walked clockwise.
  const Face& inner = m.faces()[m.face_of_dart(2, 1)];
  CHECK(inner.boundary.size() == 4);
  std::vector<VertexId> walk = inner.boundary;
  std::rotate(walk.begin(), std::find(walk.begin(), walk.end(), 1), walk.end());
  CHECK(walk == std::vector<VertexId>{1, 4, 3, 2});
  CHECK(m.face_of_dart(2, 1) != m.face_of_dart(1, 2));
}

TEST_CASE("icosahedron census matches the solid") {
  const PlanarMap m = catalog_entry("icosahedron").map;
  CHECK(m.vertex_count() == 12);
  CHECK(m.edge_count() == 30);
  const FaceCensus c = face_census(m);
  CHECK(c.counts == std::map<int, long>{{3, 20}});

  // Independent count: triangles of mutually adjacent points on the solid.
  const auto pts = testing::icosahedron_points();
  const auto pairs = testing::shortest_pairs(pts);
  std::set<std::pair<int, int>> adj(pairs.begin(), pairs.end());
  int triangles = 0;
  for (int a = 0; a < 12; ++a)
    for (int b = a + 1; b < 12; ++b)
      for (int c2 = b + 1; c2 < 12; ++c2)
        triangles += adj.count({a, b}) && adj.count({b, c2}) && adj.count({a, c2});
  CHECK(pairs.size() == m.edge_count());
  CHECK(triangles == c.count(3));

  const DegreeSummary d = degree_sequence(m);
  CHECK(d.is_regular(5));
}

TEST_CASE("surface construction agrees with the catalog icosahedron") {
  const PlanarMap built = testing::polyhedron(testing::icosahedron_points());
  CHECK(canonical_code(built, true) == canonical_code(catalog_entry("icosahedron").map, true));
}

TEST_CASE("cube has six quadrilaterals") {
  const FaceCensus c = face_census(catalog_entry("cube").map);
  CHECK(c.counts == std::map<int, long>{{4, 6}});
}

TEST_CASE("a path has one face walking every edge twice") {
  const PlanarMap m = parse_map("1: 2\n2: 1 3\n3: 2\n");
  CHECK(m.face_count() == 1);
  CHECK(m.faces()[0].size() == 4);
  CHECK_FALSE(m.faces()[0].is_polygon());
  const DegreeSummary d = degree_sequence(m);
  CHECK(d.min_degree == 1);
  CHECK(d.max_degree == 2);
  CHECK_FALSE(d.is_regular());
}

TEST_CASE("single vertex and empty map") {
  const PlanarMap one = parse_map("7:\n");
  CHECK(one.vertex_count() == 1);
  CHECK(one.face_count() == 1);
  CHECK(euler_characteristic(one) == 2);
  const PlanarMap none = parse_map("# nothing\n\n");
  CHECK(none.empty());
  CHECK(serialize_map(none).empty());
}

TEST_CASE("rejections") {
  CHECK(code_of("1: 2 3\n2: 1 3\n3: 2\n") == ErrorCode::kAsymmetricAdjacency);
  CHECK(code_of("1: 2 2\n2: 1 1\n") == ErrorCode::kNotSimple);
  CHECK(code_of("1: 1\n") == ErrorCode::kNotSimple);
  CHECK(code_of("1: 9\n") == ErrorCode::kUnknownVertex);
  CHECK(code_of("1: 2\n2: 1\n3: 4\n4: 3\n") == ErrorCode::kDisconnected);
  // K4 with one rotation flipped traces too few faces.
  CHECK(code_of("1: 2 3 4\n2: 1 3 4\n3: 1 4 2\n4: 1 2 3\n") == ErrorCode::kNonPlanarEmbedding);
}

TEST_CASE("syntax errors carry line numbers") {
  CHECK(code_of("1: 2\n2 1\n") == ErrorCode::kSyntax);
  CHECK(line_of("1: 2\n2 1\n") == 2);
  CHECK(line_of("# c\n1: 2\n2: x\n") == 3);
  CHECK(line_of("1: 2\n2: 1\n1: 2\n") == 3);
  CHECK(line_of("0: 1\n") == 1);
}

TEST_CASE("serialization is canonical and round trips") {
  const PlanarMap m = parse_map("3: 2 1\n# comment\n1: 3 2\n\n2: 1 3\n");
  const std::string text = serialize_map(m);
  CHECK(text == "1: 2 3\n2: 1 3\n3: 1 2\n");
  CHECK(parse_map(text) == m);
  for (const CatalogEntry& e : catalog()) {
    CHECK(parse_map(serialize_map(e.map)) == e.map);
  }
}

TEST_CASE("mirror reverses rotations and keeps the census") {
  const PlanarMap m = catalog_entry("hex-patch").map;
  const PlanarMap r = m.mirrored();
  CHECK(face_census(r).counts == face_census(m).counts);
  CHECK(r.mirrored() == m);
}

TEST_CASE("snub cube from coordinates is 5-regular with six squares") {
  const PlanarMap m = testing::polyhedron(testing::snub_cube_points());
  CHECK(m.vertex_count() == 24);
  CHECK(m.edge_count() == 60);
  CHECK(degree_sequence(m).is_regular(5));
  CHECK(face_census(m).counts == std::map<int, long>{{3, 32}, {4, 6}});
}

TEST_CASE("banded map") {
  const PlanarMap m = testing::banded_map();
  CHECK(m.vertex_count() == 22);
  CHECK(degree_sequence(m).is_regular(5));
  CHECK(face_census(m).counts == std::map<int, long>{{3, 30}, {4, 5}});
}

TEST_CASE("an undeclared back edge is asymmetric") {
  CHECK(code_of("1: 2\n2:\n") == ErrorCode::kAsymmetricAdjacency);
}
