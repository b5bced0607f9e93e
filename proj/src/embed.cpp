#include "matchstick/embed.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <thread>

#include "matchstick/error.hpp"

namespace matchstick {

std::string to_string(EmbedStatus status) {
  switch (status) {
    case EmbedStatus::kConverged: return "converged";
    case EmbedStatus::kStalled: return "stalled";
    case EmbedStatus::kExhausted: return "exhausted";
  }
  return "unknown";
}

namespace {

using IndexEdge = std::pair<std::size_t, std::size_t>;

std::vector<IndexEdge> index_edges(const PlanarMap& map) {
  std::vector<IndexEdge> out;
  for (const auto& [u, v] : map.edges()) out.emplace_back(map.index_of(u), map.index_of(v));
  return out;
}

double edge_objective(const std::vector<IndexEdge>& edges, std::span<const double> x, std::vector<double>* grad) {
  double value = 0.0;
  if (grad) grad->assign(x.size(), 0.0);
  for (const auto& [i, j] : edges) {
    const double dx = x[2 * i] - x[2 * j];
    const double dy = x[2 * i + 1] - x[2 * j + 1];
    const double len = std::hypot(dx, dy);
    const double r = len - 1.0;
    value += r * r;
    if (grad && len > 0.0) {
      const double s = 2.0 * r / len;
      (*grad)[2 * i] += s * dx;
      (*grad)[2 * i + 1] += s * dy;
      (*grad)[2 * j] -= s * dx;
      (*grad)[2 * j + 1] -= s * dy;
    }
  }
  return value;
}

// Pairs of edges pushed apart by their midpoints.
struct Repulsion {
  std::vector<std::pair<IndexEdge, IndexEdge>> pairs;
  double weight = 1.0;
  double reach = 1.5;
};

double repulsion_objective(const Repulsion& rep, std::span<const double> x, std::vector<double>* grad) {
  double value = 0.0;
  for (const auto& [e, f] : rep.pairs) {
    const double mx = 0.5 * (x[2 * e.first] + x[2 * e.second]) - 0.5 * (x[2 * f.first] + x[2 * f.second]);
    const double my = 0.5 * (x[2 * e.first + 1] + x[2 * e.second + 1]) - 0.5 * (x[2 * f.first + 1] + x[2 * f.second + 1]);
    const double d = std::hypot(mx, my);
    if (d >= rep.reach) continue;
    const double gap = rep.reach - d;
    value += rep.weight * gap * gap;
    if (grad && d > 0.0) {
      // d/dm of w (R - |m|)^2 = -2 w (R - |m|) m / |m|, split over the endpoints.
      const double s = -rep.weight * gap / d;
      for (std::size_t k : {e.first, e.second}) {
        (*grad)[2 * k] += s * mx;
        (*grad)[2 * k + 1] += s * my;
      }
      for (std::size_t k : {f.first, f.second}) {
        (*grad)[2 * k] -= s * mx;
        (*grad)[2 * k + 1] -= s * my;
      }
    }
  }
  return value;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Gauge {
  std::size_t pinned = 0;
  std::optional<std::size_t> anchor;  // y fixed at 0
};

Gauge gauge_for(const PlanarMap& map) {
  Gauge g;
  if (map.vertex_count() >= 2) g.anchor = map.index_of(map.rotation(map.vertices().front()).front());
  return g;
}

void apply_mask(const Gauge& g, std::vector<double>& v) {
  if (v.empty()) return;
  v[2 * g.pinned] = 0.0;
  v[2 * g.pinned + 1] = 0.0;
  if (g.anchor) v[2 * *g.anchor + 1] = 0.0;
}

// Rigid motion putting the pinned vertex at the origin and the anchor on the
// positive x-axis. Orientation is preserved.
void normalize_gauge(const Gauge& g, std::vector<double>& x) {
  if (x.empty()) return;
  const double ox = x[2 * g.pinned], oy = x[2 * g.pinned + 1];
  for (std::size_t i = 0; i < x.size(); i += 2) {
    x[i] -= ox;
    x[i + 1] -= oy;
  }
  if (!g.anchor) return;
  const double ax = x[2 * *g.anchor], ay = x[2 * *g.anchor + 1];
  const double len = std::hypot(ax, ay);
  if (len == 0.0) return;
  const double c = ax / len, s = -ay / len;
  for (std::size_t i = 0; i < x.size(); i += 2) {
    const double px = x[i], py = x[i + 1];
    x[i] = c * px - s * py;
    x[i + 1] = s * px + c * py;
  }
  x[2 * *g.anchor + 1] = 0.0;
}

struct MinimizeResult {
  double value = 0.0;
  int iterations = 0;
  EmbedStatus status = EmbedStatus::kExhausted;
};

using Objective = std::function<double(std::span<const double>, std::vector<double>*)>;

void kick_coincident(const std::vector<IndexEdge>& edges, const Gauge& g, std::vector<double>& x, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (const auto& [i, j] : edges) {
    if (std::hypot(x[2 * i] - x[2 * j], x[2 * i + 1] - x[2 * j + 1]) >= 1e-9) continue;
    const std::size_t k = j == g.pinned ? i : j;
    x[2 * k] += 1e-6 * unit(rng);
    if (!g.anchor || k != *g.anchor) x[2 * k + 1] += 1e-6 * unit(rng);
  }
}

// Limited-memory quasi-Newton directions with a backtracking Armijo search.
MinimizeResult minimize(const Objective& fn, const std::vector<IndexEdge>& edges, const Gauge& g, std::vector<double>& x,
                        int max_iterations, double threshold, std::mt19937_64& rng) {
  constexpr std::size_t kMemory = 8;
  std::deque<std::pair<std::vector<double>, std::vector<double>>> history;
  std::vector<double> grad, trial_grad, dir(x.size()), trial(x.size());
  MinimizeResult out;

  kick_coincident(edges, g, x, rng);
  double value = fn(x, &grad);
  apply_mask(g, grad);
  for (int iter = 0; iter < max_iterations; ++iter) {
    out.iterations = iter;
    if (value <= threshold) {
      out.value = value;
      out.status = EmbedStatus::kConverged;
      return out;
    }
    double gnorm = 0.0;
    for (double v : grad) gnorm = std::max(gnorm, std::abs(v));
    if (gnorm < 1e-14) {
      out.value = value;
      out.status = EmbedStatus::kStalled;
      return out;
    }

    // Two-loop recursion.
    dir = grad;
    std::vector<double> alpha(history.size());
    for (std::size_t k = history.size(); k-- > 0;) {
      const auto& [s, y] = history[k];
      double sy = 0, sd = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        sy += s[i] * y[i];
        sd += s[i] * dir[i];
      }
      alpha[k] = sd / sy;
      for (std::size_t i = 0; i < x.size(); ++i) dir[i] -= alpha[k] * y[i];
    }
    if (!history.empty()) {
      const auto& [s, y] = history.back();
      double sy = 0, yy = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        sy += s[i] * y[i];
        yy += y[i] * y[i];
      }
      for (double& v : dir) v *= sy / yy;
    }
    for (std::size_t k = 0; k < history.size(); ++k) {
      const auto& [s, y] = history[k];
      double sy = 0, yd = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        sy += s[i] * y[i];
        yd += y[i] * dir[i];
      }
      const double beta = yd / sy;
      for (std::size_t i = 0; i < x.size(); ++i) dir[i] += s[i] * (alpha[k] - beta);
    }
    for (double& v : dir) v = -v;
    apply_mask(g, dir);

    double slope = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) slope += grad[i] * dir[i];
    if (!(slope < 0.0)) {
      history.clear();
      for (std::size_t i = 0; i < x.size(); ++i) dir[i] = -grad[i];
      slope = 0.0;
      for (double v : grad) slope -= v * v;
    }

    double step = 1.0;
    double trial_value = 0.0;
    bool accepted = false;
    for (int k = 0; k < 60; ++k) {
      for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] + step * dir[i];
      trial_value = fn(trial, &trial_grad);
      if (trial_value <= value + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      out.value = value;
      out.status = EmbedStatus::kStalled;
      return out;
    }
    apply_mask(g, trial_grad);

    std::vector<double> s(x.size()), y(x.size());
    double sy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      s[i] = trial[i] - x[i];
      y[i] = trial_grad[i] - grad[i];
      sy += s[i] * y[i];
    }
    if (sy > 1e-300) {
      history.emplace_back(std::move(s), std::move(y));
      if (history.size() > kMemory) history.pop_front();
    }
    x.swap(trial);
    grad.swap(trial_grad);
    value = trial_value;
    kick_coincident(edges, g, x, rng);
  }
  out.iterations = max_iterations;
  out.value = value;
  out.status = value <= threshold ? EmbedStatus::kConverged : EmbedStatus::kExhausted;
  return out;
}

Coordinates to_coords(const PlanarMap& map, const std::vector<double>& x) {
  Coordinates c;
  for (std::size_t i = 0; i < map.vertex_count(); ++i) c[map.vertices()[i]] = Point{x[2 * i], x[2 * i + 1]};
  return c;
}

std::vector<double> from_coords(const PlanarMap& map, const Coordinates& coords) {
  std::vector<double> x(2 * map.vertex_count());
  for (std::size_t i = 0; i < map.vertex_count(); ++i) {
    auto it = coords.find(map.vertices()[i]);
    if (it == coords.end()) {
      throw Error(ErrorCode::kUnknownVertex, "no coordinates for vertex " + std::to_string(map.vertices()[i]));
    }
    x[2 * i] = it->second.x;
    x[2 * i + 1] = it->second.y;
  }
  return x;
}

// The objective cannot see orientation; pick whichever of the drawing and its
// mirror in the x-axis agrees with the rotation system.
void orient_to_rotation(const EmbeddingProblem& problem, std::vector<double>& x) {
  const GeometricMap as_is{problem.map, to_coords(problem.map, x), problem.tolerance};
  const std::size_t bad = rotation_mismatches(as_is).size();
  if (bad == 0) return;
  std::vector<double> mirrored = x;
  for (std::size_t i = 1; i < mirrored.size(); i += 2) mirrored[i] = -mirrored[i];
  const GeometricMap flipped{problem.map, to_coords(problem.map, mirrored), problem.tolerance};
  if (rotation_mismatches(flipped).size() < bad) x.swap(mirrored);
}

EmbeddingResult finish(const EmbeddingProblem& problem, std::vector<double> x, const MinimizeResult& m, int restart) {
  for (double& v : x) {
    if (v == 0.0) v = 0.0;
  }
  orient_to_rotation(problem, x);
  EmbeddingResult r;
  r.coords = to_coords(problem.map, x);
  r.residual = m.value;
  r.iterations = m.iterations;
  r.status = m.status;
  r.restart = restart;
  r.validation = validate_matchstick(GeometricMap{problem.map, r.coords, problem.tolerance});
  return r;
}

std::vector<std::pair<IndexEdge, IndexEdge>> crossing_pairs(const PlanarMap& map, const Coordinates& coords,
                                                            double eps) {
  std::vector<std::pair<IndexEdge, IndexEdge>> out;
  const auto edges = map.edges();
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      const auto [u, v] = edges[a];
      const auto [w, z] = edges[b];
      if (u == w || u == z || v == w || v == z) continue;
      const Point &pu = coords.at(u), &pv = coords.at(v), &pw = coords.at(w), &pz = coords.at(z);
      if (segment_distance(pu, pv, pw, pz) <= eps) {
        out.push_back({{map.index_of(u), map.index_of(v)}, {map.index_of(w), map.index_of(z)}});
      }
    }
  }
  return out;
}

EmbeddingResult run_restart(const EmbeddingProblem& problem, int restart) {
  const PlanarMap& map = problem.map;
  const Gauge g = gauge_for(map);
  const auto edges = index_edges(map);
  std::mt19937_64 rng(splitmix64(problem.seed ^ splitmix64(static_cast<std::uint64_t>(restart))));

  std::vector<double> x;
  if (restart == 0 && problem.initial) {
    x = from_coords(map, *problem.initial);
  } else {
    const double radius = 0.6 * std::sqrt(static_cast<double>(map.vertex_count()));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    x.resize(2 * map.vertex_count());
    for (std::size_t i = 0; i < map.vertex_count(); ++i) {
      const double r = radius * std::sqrt(unit(rng));
      const double t = 2.0 * std::numbers::pi * unit(rng);
      x[2 * i] = r * std::cos(t);
      x[2 * i + 1] = r * std::sin(t);
    }
  }
  normalize_gauge(g, x);

  const Objective base = [&edges](std::span<const double> p, std::vector<double>* grad) {
    return edge_objective(edges, p, grad);
  };
  const MinimizeResult m = minimize(base, edges, g, x, problem.max_iterations, problem.threshold, rng);
  EmbeddingResult result = finish(problem, x, m, restart);
  if (problem.penalty_rounds > 0) result = crossing_penalty_pass(problem, std::move(result));
  return result;
}

bool better(const EmbeddingResult& a, const EmbeddingResult& b) {
  if (a.found() != b.found()) return a.found();
  if (a.residual != b.residual) return a.residual < b.residual;
  return a.restart < b.restart;
}

}  // namespace

ObjectiveValue objective_and_gradient(const PlanarMap& map, std::span<const double> positions) {
  if (positions.size() != 2 * map.vertex_count()) {
    throw Error(ErrorCode::kInvalidArgument, "expected " + std::to_string(2 * map.vertex_count()) + " coordinates");
  }
  ObjectiveValue out;
  out.value = edge_objective(index_edges(map), positions, &out.gradient);
  return out;
}

ObjectiveValue objective_and_gradient(const PlanarMap& map, const Coordinates& coords) {
  const std::vector<double> x = from_coords(map, coords);
  return objective_and_gradient(map, std::span<const double>(x));
}

EmbeddingResult crossing_penalty_pass(const EmbeddingProblem& problem, EmbeddingResult result) {
  if (result.status != EmbedStatus::kConverged) return result;
  const CheckResult* crossings = result.validation.find("crossings");
  const CheckResult* overlaps = result.validation.find("overlaps");
  if ((!crossings || crossings->pass) && (!overlaps || overlaps->pass)) return result;

  const PlanarMap& map = problem.map;
  const Gauge g = gauge_for(map);
  const auto edges = index_edges(map);
  std::mt19937_64 rng(splitmix64(problem.seed ^ 0x5bd1e995ULL ^ static_cast<std::uint64_t>(result.restart)));

  Repulsion rep;
  std::set<std::pair<IndexEdge, IndexEdge>> seen;
  std::vector<double> x = from_coords(map, result.coords);
  EmbeddingResult best = result;
  for (int round = 0; round < problem.penalty_rounds; ++round) {
    for (const auto& p : crossing_pairs(map, to_coords(map, x), problem.tolerance)) {
      if (seen.insert(p).second) rep.pairs.push_back(p);
    }
    if (rep.pairs.empty()) break;
    const Objective penalized = [&](std::span<const double> p, std::vector<double>* grad) {
      const double v = edge_objective(edges, p, grad);
      return v + repulsion_objective(rep, p, grad);
    };
    normalize_gauge(g, x);
    minimize(penalized, edges, g, x, problem.max_iterations, 0.0, rng);

    // Final state is judged on the plain objective only.
    const Objective base = [&edges](std::span<const double> p, std::vector<double>* grad) {
      return edge_objective(edges, p, grad);
    };
    std::vector<double> polished = x;
    const MinimizeResult m = minimize(base, edges, g, polished, problem.max_iterations, problem.threshold, rng);
    EmbeddingResult candidate = finish(problem, polished, m, result.restart);
    candidate.iterations += best.iterations;
    if (candidate.found()) return candidate;
    if (candidate.status == EmbedStatus::kConverged) best = candidate;
    rep.weight *= 2.0;
  }
  return best;
}

EmbeddingResult solve(const EmbeddingProblem& problem) {
  if (problem.restarts < 1) throw Error(ErrorCode::kInvalidArgument, "restarts must be at least 1");
  if (!(problem.threshold > 0.0)) throw Error(ErrorCode::kInvalidArgument, "threshold must be positive");
  if (problem.map.empty()) {
    EmbeddingResult r;
    r.status = EmbedStatus::kConverged;
    r.validation = validate_matchstick(GeometricMap{problem.map, {}, problem.tolerance});
    return r;
  }

  std::vector<EmbeddingResult> results(static_cast<std::size_t>(problem.restarts));
  const unsigned workers = std::clamp(problem.threads, 1u, static_cast<unsigned>(problem.restarts));
  if (workers == 1) {
    for (int r = 0; r < problem.restarts; ++r) results[static_cast<std::size_t>(r)] = run_restart(problem, r);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int r = next++; r < problem.restarts; r = next++) results[static_cast<std::size_t>(r)] = run_restart(problem, r);
      });
    }
    for (auto& t : pool) t.join();
  }
  return *std::min_element(results.begin(), results.end(), better);
}

}  // namespace matchstick
