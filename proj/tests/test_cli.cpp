#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "matchstick/audit.hpp"
#include "matchstick/charge.hpp"
#include "matchstick/geometry.hpp"
#include "matchstick/search.hpp"

namespace fs = std::filesystem;
using matchstick::cli::run;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name, const std::string& text = "") {
  const fs::path dir = fs::temp_directory_path() / "matchstick_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  if (!text.empty()) std::ofstream(p) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("validate") {
  const Outcome ok = call({"validate", "catalog:hex-patch", "catalog:hex-patch"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("PASS unit-lengths") != std::string::npos);

  const auto map = scratch("tri.map", "1: 2 3\n2: 3 1\n3: 1 2\n");
  const auto bad = scratch("tri_bad.xy", "1: 0 0\n2: 1 0\n3: 0.5 2\n");
  const Outcome fail = call({"validate", map.string(), bad.string(), "--format", "json"});
  CHECK(fail.code == 1);
  CHECK(fail.out.find("\"pass\": false") != std::string::npos);

  CHECK(call({"validate", "catalog:triangle", "catalog:triangle", "--k", "3"}).code == 1);
}

TEST_CASE("input errors exit with 2") {
  const auto broken = scratch("broken.map", "1: 2\n2 1\n");
  const Outcome r = call({"audit", broken.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("SyntaxError") != std::string::npos);
  CHECK(r.err.find("line 2") != std::string::npos);

  const auto asym = scratch("asym.map", "1: 2 3\n2: 1 3\n3: 2\n");
  CHECK(call({"audit", asym.string()}).err.find("AsymmetricAdjacency") != std::string::npos);
  CHECK(call({"audit", "/nonexistent/file.map"}).code == 2);
  CHECK(call({"audit", "catalog:nope"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"audit", "catalog:icosahedron", "--mode", "bogus"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("audit") {
  const Outcome text = call({"audit", "catalog:twin-pentagon-fans"});
  CHECK(text.code == 0);
  CHECK(text.out.find("verdict: input violated preconditions") != std::string::npos);

  const auto report = scratch("audit.json");
  const Outcome json = call({"audit", "catalog:icosahedron", "--format", "json", "-o", report.string()});
  CHECK(json.code == 0);
  CHECK(json.out == slurp(report));
  CHECK(json.out.find("\"verdict\"") != std::string::npos);

  // Degree preconditions exit with 3.
  CHECK(call({"audit", "catalog:cube"}).code == 3);
  CHECK(call({"audit", "catalog:rhombus-strip", "catalog:rhombus-strip", "--mode", "mindeg5"}).code == 3);
}

TEST_CASE("embed") {
  const auto coords = scratch("tri.xy");
  const auto svg = scratch("tri.svg");
  const Outcome r = call({"embed", "catalog:triangle", "-o", coords.string(), "--svg", svg.string()});
  CHECK(r.code == 0);
  CHECK(r.err.find("realization found") != std::string::npos);
  CHECK(call({"validate", "catalog:triangle", coords.string()}).code == 0);
  CHECK(slurp(svg).find("<svg") != std::string::npos);

  const Outcome ico = call({"embed", "catalog:icosahedron", "--restarts", "2"});
  CHECK(ico.code == 1);
  CHECK(ico.err.find("no realization found") != std::string::npos);
  CHECK(ico.err.find("exists") == std::string::npos);

  const Outcome a = call({"embed", "catalog:hex-patch", "--seed", "3", "--format", "json"});
  const Outcome b = call({"embed", "catalog:hex-patch", "--seed", "3", "--format", "json"});
  CHECK(a.out == b.out);
}

TEST_CASE("search") {
  const Outcome r = call({"search", "--k", "2", "--max-edges", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("fewest edges: 3") != std::string::npos);

  const Outcome six = call({"search", "--k", "6"});
  CHECK(six.code == 2);
  CHECK(six.err.find("Euler") != std::string::npos);

  CHECK(call({"search"}).code == 2);
  CHECK(call({"search", "--k", "3", "--min-degree", "3"}).code == 2);
  CHECK(call({"search", "--k", "3", "--budget", "-1"}).code == 2);

  const Outcome a = call({"search", "--k", "3", "--max-edges", "9", "--format", "json"});
  const Outcome b = call({"search", "--k", "3", "--max-edges", "9", "--format", "json"});
  CHECK(a.out == b.out);
}

TEST_CASE("render") {
  const Outcome a = call({"render", "catalog:hex-patch", "catalog:hex-patch", "--labels", "--charges", "none"});
  const Outcome b = call({"render", "catalog:hex-patch", "catalog:hex-patch", "--labels", "--charges", "none"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("<text") != std::string::npos);
  CHECK(call({"render", "catalog:icosahedron", "catalog:icosahedron"}).code == 2);
}

TEST_CASE("oracle") {
  const Outcome r = call({"oracle"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  const Outcome j = call({"oracle", "--degrees", "5", "--cap", "6", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"violations\": 0") != std::string::npos);
  CHECK(call({"oracle", "--degrees", "4"}).code == 2);
  CHECK(call({"oracle", "--degrees", "5,x"}).code == 2);
}

TEST_CASE("a barycentric drawing of the icosahedron is rejected") {
  // Outer triangle pinned, every other vertex at the mean of its neighbors.
  const matchstick::PlanarMap ico = matchstick::catalog_entry("icosahedron").map;
  const auto& outer = ico.faces()[0].boundary;
  matchstick::Coordinates xy;
  for (matchstick::VertexId v : ico.vertices()) xy[v] = {0, 0};
  for (int i = 0; i < 3; ++i) xy[outer[i]] = {3 * std::cos(2.1 * i), 3 * std::sin(2.1 * i)};
  for (int sweep = 0; sweep < 500; ++sweep) {
    for (matchstick::VertexId v : ico.vertices()) {
      if (std::find(outer.begin(), outer.end(), v) != outer.end()) continue;
      matchstick::Point mean;
      for (matchstick::VertexId w : ico.rotation(v)) {
        mean.x += xy[w].x / 5;
        mean.y += xy[w].y / 5;
      }
      xy[v] = mean;
    }
  }
  const auto coords = scratch("ico_tutte.xy", matchstick::serialize_coordinates(xy));
  const Outcome r = call({"validate", "catalog:icosahedron", coords.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL unit-lengths") != std::string::npos);
  CHECK(r.out.find("PASS crossings") != std::string::npos);
}

TEST_CASE("triangle files with k = 2") {
  const auto map = scratch("k2.map", "1: 2 3\n2: 3 1\n3: 1 2\n");
  const auto xy = scratch("k2.xy", "1: 0 0\n2: 1 0\n3: 0.5 0.8660254037844386\n");
  CHECK(call({"validate", map.string(), xy.string(), "--k", "2"}).code == 0);
}

TEST_CASE("audit modes on the icosahedron") {
  const Outcome exact = call({"audit", "catalog:icosahedron", "--format", "json"});
  CHECK(exact.code == 0);
  const auto j = nlohmann::json::parse(exact.out);
  CHECK(j["positive_vertices"].size() == 12);
  CHECK(j["positive_vertices"][0]["classification"] == "five triangles");

  const Outcome hat = call({"audit", "catalog:icosahedron", "--mode", "mindeg5"});
  CHECK(hat.code == 0);
  CHECK(hat.out.find("PASS charge-hat") != std::string::npos);
  CHECK(hat.out.find("computed 20/1") != std::string::npos);
}

TEST_CASE("oracle restrictions") {
  matchstick::OracleOptions six;
  six.degrees = {6};
  for (const matchstick::LocalConfig& row : matchstick::local_config_oracle(six).rows) {
    if (row.count(5) == 1) CHECK(row.ratio <= matchstick::Rational(-4, 3));
  }
  CHECK(call({"oracle", "--degrees", "6"}).code == 0);

  matchstick::OracleOptions small;
  small.face_size_cap = 5;
  const auto full = matchstick::local_config_oracle().rows;
  for (const matchstick::LocalConfig& row : matchstick::local_config_oracle(small).rows) {
    const bool present = std::any_of(full.begin(), full.end(), [&](const matchstick::LocalConfig& f) {
      return f.degree == row.degree && f.face_counts == row.face_counts && f.ratio == row.ratio;
    });
    CHECK(present);
  }
}
