#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "matchstick/audit.hpp"
#include "matchstick/embed.hpp"
#include "matchstick/geometry.hpp"
#include "matchstick/map.hpp"

namespace matchstick {

/// Which degree property enumerated maps must have.
struct DegreeRule {
  enum class Kind { kRegular, kMinDegree };
  Kind kind = Kind::kRegular;
  int k = 2;

  static DegreeRule regular(int k) { return {Kind::kRegular, k}; }
  static DegreeRule min_degree(int k) { return {Kind::kMinDegree, k}; }

  bool accepts(const PlanarMap& map) const;
  std::string describe() const;
};

struct SearchSpec {
  DegreeRule rule;
  int max_edges = 14;
  double time_budget_seconds = 60.0;
  std::uint64_t seed = 1;
};

/// Rejects k >= 6 with the Euler argument, k outside {2..5} for regular
/// rules, minimum degrees outside {1..5} and negative budgets.
void validate_spec(const SearchSpec& spec);

/// Orientation-preserving canonical code of a rotation system. Two maps get
/// the same code iff an orientation-preserving isomorphism relates them.
/// With merge_mirrors, a map and its mirror image share a code.
std::vector<int> canonical_code(const PlanarMap& map, bool merge_mirrors = false);

struct EnumerationStats {
  std::vector<std::size_t> level_sizes;  // distinct maps kept per edge count
  std::size_t emitted = 0;
};

/// Streams every connected simple plane map with the degree property and at
/// most max_edges edges, once per orientation-preserving isomorphism class.
/// Order: by edge count, then by canonical code.
EnumerationStats enumerate_maps(const SearchSpec& spec, const std::function<void(const PlanarMap&)>& sink);
std::vector<PlanarMap> enumerate_maps(const SearchSpec& spec);

struct Finding {
  PlanarMap map;
  EmbeddingResult embedding;
  int mirror_duplicates = 0;
};

struct CandidateAudit {
  std::string map_text;
  std::string verdict;
  std::string failed_precondition;
  bool identities_hold = false;
};

struct EmbedSettings {
  int restarts = 8;
  int max_iterations = 3000;
  double threshold = 1e-20;
  double tolerance = kDefaultTolerance;
};

struct PipelineReport {
  SearchSpec spec;
  std::size_t candidates = 0;
  std::size_t attempted = 0;
  bool truncated = false;
  std::vector<Finding> findings;  // sorted by edge count, mirror images merged
  std::vector<CandidateAudit> audits;

  std::optional<std::size_t> minimal_edges() const;
  nlohmann::ordered_json to_json() const;
};

/// enumerate -> embed -> validate, plus the charge audit on every candidate
/// when the rule asks for degree 5. Stops early (truncated) once the time
/// budget is spent.
PipelineReport run_pipeline(const SearchSpec& spec, const EmbedSettings& settings = {});

struct CatalogEntry {
  std::string name;
  PlanarMap map;
  std::optional<Coordinates> coords;
  std::string provenance;
};

std::vector<CatalogEntry> catalog();
/// Throws kInvalidArgument for unknown names.
CatalogEntry catalog_entry(const std::string& name);

}  // namespace matchstick
