#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matchstick/geometry.hpp"
#include "matchstick/map.hpp"

namespace matchstick {

struct EmbeddingProblem {
  PlanarMap map;
  std::optional<Coordinates> initial;
  std::uint64_t seed = 1;
  int max_iterations = 4000;
  int restarts = 8;
  /// Converged once the residual is at or below this value.
  double threshold = 1e-20;
  /// Length tolerance handed to the validator.
  double tolerance = kDefaultTolerance;
  int penalty_rounds = 4;
  /// Restarts evaluated concurrently; results do not depend on this.
  unsigned threads = 1;
};

enum class EmbedStatus { kConverged, kStalled, kExhausted };

std::string to_string(EmbedStatus status);

struct EmbeddingResult {
  Coordinates coords;
  double residual = 0.0;
  int iterations = 0;
  EmbedStatus status = EmbedStatus::kExhausted;
  ValidationReport validation;
  int restart = 0;

  /// A realization was found: the penalty-free validator accepted it.
  bool found() const { return validation.pass(); }
};

struct ObjectiveValue {
  double value = 0.0;
  std::vector<double> gradient;  // interleaved x, y per vertex in PlanarMap::vertices() order
};

/// sum over edges of (|x_u - x_v| - 1)^2 and its gradient. Positions are
/// interleaved x, y per vertex in PlanarMap::vertices() order. A coincident
/// pair contributes the zero subgradient.
ObjectiveValue objective_and_gradient(const PlanarMap& map, std::span<const double> positions);
ObjectiveValue objective_and_gradient(const PlanarMap& map, const Coordinates& coords);

/// Best result over all restarts, ranked by validation pass and then residual.
/// Deterministic in (problem, seed). The first vertex is pinned at the origin
/// and its first neighbor on the positive x-axis.
EmbeddingResult solve(const EmbeddingProblem& problem);

/// If a converged drawing has crossings, re-solves with a repulsive term
/// between the midpoints of crossing edges, then removes the term, polishes
/// and re-validates. Drawings without crossings come back unchanged.
EmbeddingResult crossing_penalty_pass(const EmbeddingProblem& problem, EmbeddingResult result);

}  // namespace matchstick
