#include <algorithm>
#include <chrono>
#include <set>

#include "matchstick/error.hpp"
#include "matchstick/search.hpp"

namespace matchstick {

std::optional<std::size_t> PipelineReport::minimal_edges() const {
  if (findings.empty()) return std::nullopt;
  return findings.front().map.edge_count();
}

PipelineReport run_pipeline(const SearchSpec& spec, const EmbedSettings& settings) {
  validate_spec(spec);
  PipelineReport report;
  report.spec = spec;

  std::vector<PlanarMap> candidates;
  enumerate_maps(spec, [&](const PlanarMap& m) { candidates.push_back(m); });
  report.candidates = candidates.size();

  const bool audit_each = spec.rule.k == 5;
  const auto start = std::chrono::steady_clock::now();
  std::vector<Finding> found;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > spec.time_budget_seconds) {
      report.truncated = true;
      break;
    }
    ++report.attempted;
    const PlanarMap& map = candidates[i];
    EmbeddingProblem problem;
    problem.map = map;
    problem.seed = spec.seed + i;
    problem.restarts = settings.restarts;
    problem.max_iterations = settings.max_iterations;
    problem.threshold = settings.threshold;
    problem.tolerance = settings.tolerance;
    EmbeddingResult result = solve(problem);

    if (audit_each) {
      const AuditMode mode =
          spec.rule.kind == DegreeRule::Kind::kRegular ? AuditMode::kExact5Regular : AuditMode::kMinDegree5;
      CandidateAudit entry;
      entry.map_text = serialize_map(map);
      try {
        const AuditReport a = audit(map, result.coords, mode, settings.tolerance);
        entry.verdict = a.verdict;
        entry.failed_precondition = a.failed_precondition;
        entry.identities_hold = a.identities_hold();
      } catch (const Error& e) {
        entry.verdict = kVerdictPreconditions;
        entry.failed_precondition = e.what();
      }
      report.audits.push_back(std::move(entry));
    }
    if (result.found()) found.push_back(Finding{map, std::move(result), 0});
  }

  std::stable_sort(found.begin(), found.end(),
                   [](const Finding& a, const Finding& b) { return a.map.edge_count() < b.map.edge_count(); });
  std::map<std::vector<int>, std::size_t> by_code;
  for (Finding& f : found) {
    auto code = canonical_code(f.map, true);
    if (auto it = by_code.find(code); it != by_code.end()) {
      ++report.findings[it->second].mirror_duplicates;
      continue;
    }
    by_code.emplace(std::move(code), report.findings.size());
    report.findings.push_back(std::move(f));
  }
  return report;
}

nlohmann::ordered_json PipelineReport::to_json() const {
  using nlohmann::ordered_json;
  ordered_json out;
  out["rule"] = spec.rule.describe();
  out["max_edges"] = spec.max_edges;
  out["seed"] = spec.seed;
  out["candidates"] = candidates;
  out["attempted"] = attempted;
  out["truncated"] = truncated;
  if (auto m = minimal_edges()) {
    out["minimal_edges"] = *m;
  } else {
    out["minimal_edges"] = nullptr;
  }
  ordered_json list = ordered_json::array();
  for (const Finding& f : findings) {
    ordered_json checks = ordered_json::object();
    for (const CheckResult& c : f.embedding.validation.checks) checks[c.name] = c.pass;
    list.push_back({{"vertices", f.map.vertex_count()},
                    {"edges", f.map.edge_count()},
                    {"map", serialize_map(f.map)},
                    {"coordinates", serialize_coordinates(f.embedding.coords)},
                    {"residual", f.embedding.residual},
                    {"status", to_string(f.embedding.status)},
                    {"validation", checks},
                    {"mirror_duplicates", f.mirror_duplicates}});
  }
  out["findings"] = list;
  ordered_json audit_list = ordered_json::array();
  for (const CandidateAudit& a : audits) {
    audit_list.push_back({{"map", a.map_text},
                          {"identities_hold", a.identities_hold},
                          {"verdict", a.verdict},
                          {"failed_precondition", a.failed_precondition}});
  }
  out["audits"] = audit_list;
  return out;
}

}  // namespace matchstick
