#include <doctest.h>

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "matchstick/embed.hpp"
#include "matchstick/error.hpp"
#include "matchstick/search.hpp"

using namespace matchstick;

namespace {

PlanarMap cycle(int n) {
  RotationTable t;
  for (int i = 1; i <= n; ++i) t[i] = {i % n + 1, (i + n - 2) % n + 1};
  return PlanarMap::build(t);
}

double max_relative_gradient_error(const PlanarMap& map, std::vector<double> x) {
  const ObjectiveValue at = objective_and_gradient(map, x);
  const double h = 1e-6;
  double worst = 0.0;
  double scale = 1e-8;
  for (double g : at.gradient) scale = std::max(scale, std::abs(g));
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double keep = x[i];
    x[i] = keep + h;
    const double up = objective_and_gradient(map, x).value;
    x[i] = keep - h;
    const double down = objective_and_gradient(map, x).value;
    x[i] = keep;
    worst = std::max(worst, std::abs((up - down) / (2 * h) - at.gradient[i]) / scale);
  }
  return worst;
}

}  // namespace

TEST_CASE("objective on a single edge of length two") {
  const PlanarMap edge = parse_map("1: 2\n2: 1\n");
  const std::vector<double> x{0, 0, 2, 0};
  const ObjectiveValue v = objective_and_gradient(edge, x);
  CHECK(v.value == doctest::Approx(1.0));
  // d/dx2 (|x2 - x1| - 1)^2 = 2 (2 - 1) = 2
  CHECK(v.gradient == std::vector<double>{-2, 0, 2, 0});
}

TEST_CASE("coincident endpoints give a zero subgradient") {
  const PlanarMap edge = parse_map("1: 2\n2: 1\n");
  const ObjectiveValue v = objective_and_gradient(edge, std::vector<double>{1, 1, 1, 1});
  CHECK(v.value == doctest::Approx(1.0));
  for (double g : v.gradient) CHECK(g == 0.0);
}

TEST_CASE("gradient matches finite differences") {
  const auto maps = catalog();
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int instance = 0; instance < 100; ++instance) {
    const PlanarMap& m = maps[std::size_t(instance) % maps.size()].map;
    std::vector<double> x(2 * m.vertex_count());
    for (double& c : x) c = u(rng);
    CHECK(max_relative_gradient_error(m, x) < 1e-5);
  }
}

TEST_CASE("objective is invariant under rigid motions") {
  const PlanarMap m = catalog_entry("icosahedron").map;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2, 2);
  std::vector<double> x(2 * m.vertex_count());
  for (double& c : x) c = u(rng);
  const double base = objective_and_gradient(m, x).value;
  const double t = 0.7;
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); i += 2) {
    y[i] = std::cos(t) * x[i] - std::sin(t) * x[i + 1] + 3;
    y[i + 1] = std::sin(t) * x[i] + std::cos(t) * x[i + 1] - 1;
  }
  CHECK(objective_and_gradient(m, y).value == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("triangle and four-cycle") {
  for (const PlanarMap& m : {cycle(3), cycle(4)}) {
    EmbeddingProblem p;
    p.map = m;
    const auto start = std::chrono::steady_clock::now();
    const EmbeddingResult r = solve(p);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(r.found());
    CHECK(r.status == EmbedStatus::kConverged);
    CHECK(r.residual < 1e-12);
    CHECK(seconds < 1.0);
    // Gauge: first vertex at the origin, its first neighbor on the x-axis.
    CHECK(r.coords.at(1).x == 0.0);
    CHECK(r.coords.at(1).y == 0.0);
    CHECK(r.coords.at(m.rotation(1)[0]).y == 0.0);
  }
}

TEST_CASE("solver is deterministic in the seed and independent of threads") {
  EmbeddingProblem p;
  p.map = catalog_entry("hex-patch").map;
  p.seed = 42;
  p.restarts = 4;
  const EmbeddingResult a = solve(p);
  const EmbeddingResult b = solve(p);
  p.threads = 3;
  const EmbeddingResult c = solve(p);
  CHECK(serialize_coordinates(a.coords) == serialize_coordinates(b.coords));
  CHECK(serialize_coordinates(a.coords) == serialize_coordinates(c.coords));
  CHECK(a.residual == c.residual);
  CHECK(a.found());
}

TEST_CASE("an initial drawing is used by the first restart") {
  const CatalogEntry e = catalog_entry("rhombus-strip");
  EmbeddingProblem p;
  p.map = e.map;
  p.initial = e.coords;
  p.restarts = 1;
  const EmbeddingResult r = solve(p);
  CHECK(r.found());
  CHECK(r.iterations <= 2);
}

TEST_CASE("crossing penalty untangles a pentagram") {
  // Unit-sided pentagram: the five points of a regular pentagon visited in
  // star order, scaled so that the chords have length one.
  const PlanarMap c5 = cycle(5);
  const double radius = 1.0 / (2 * std::sin(2 * std::numbers::pi / 5));
  Coordinates star;
  for (int i = 0; i < 5; ++i) {
    const double a = 2 * std::numbers::pi * (2 * i) / 5;
    star[i + 1] = {radius * std::cos(a), radius * std::sin(a)};
  }
  EmbeddingProblem p;
  p.map = c5;
  EmbeddingResult tangled;
  tangled.coords = star;
  tangled.status = EmbedStatus::kConverged;
  tangled.validation = validate_matchstick(GeometricMap{c5, star});
  REQUIRE(tangled.validation.find("unit-lengths")->pass);
  REQUIRE_FALSE(tangled.validation.find("crossings")->pass);

  const EmbeddingResult fixed = crossing_penalty_pass(p, tangled);
  CHECK(fixed.found());
  CHECK(validate_matchstick(GeometricMap{c5, fixed.coords}).pass());
}

TEST_CASE("results without crossings pass through the penalty unchanged") {
  EmbeddingProblem p;
  p.map = cycle(3);
  const EmbeddingResult r = solve(p);
  const EmbeddingResult again = crossing_penalty_pass(p, r);
  CHECK(serialize_coordinates(again.coords) == serialize_coordinates(r.coords));
}

TEST_CASE("the icosahedron is never realized") {
  EmbeddingProblem p;
  p.map = catalog_entry("icosahedron").map;
  p.restarts = 4;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    p.seed = seed;
    const EmbeddingResult r = solve(p);
    CHECK_FALSE(r.found());
    CHECK(r.residual > 1e-3);
  }
}

TEST_CASE("bad problems") {
  EmbeddingProblem p;
  p.map = cycle(3);
  p.restarts = 0;
  CHECK_THROWS_AS(solve(p), Error);
  p.restarts = 1;
  p.threshold = 0;
  CHECK_THROWS_AS(solve(p), Error);
  EmbeddingProblem empty;
  CHECK(solve(empty).status == EmbedStatus::kConverged);
}

TEST_CASE("a unit edge contributes nothing") {
  const PlanarMap edge = parse_map("1: 2\n2: 1\n");
  const ObjectiveValue v = objective_and_gradient(edge, std::vector<double>{0.3, 0.1, 0.9, 0.9});
  CHECK(v.value == doctest::Approx(0.0));
  for (double g : v.gradient) CHECK(g == doctest::Approx(0.0));
}

TEST_CASE("a bowtie start ends as a rhombus") {
  EmbeddingProblem p;
  p.map = cycle(4);
  p.initial = Coordinates{{1, {0, 0}}, {2, {1, 0}}, {3, {0, 0.9}}, {4, {1, 0.9}}};
  p.restarts = 1;
  const EmbeddingResult r = solve(p);
  CHECK(r.found());
  CHECK(r.residual < 1e-12);
  CHECK(r.validation.find("crossings")->pass);
}
