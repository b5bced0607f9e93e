#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "matchstick/audit.hpp"
#include "matchstick/charge.hpp"
#include "matchstick/embed.hpp"
#include "matchstick/error.hpp"
#include "matchstick/geometry.hpp"
#include "matchstick/map.hpp"
#include "matchstick/search.hpp"

namespace matchstick::cli {

namespace {

constexpr const char* kCatalogPrefix = "catalog:";

// Thrown for unreadable files; reported as an input error.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

bool is_catalog(const std::string& path) { return path.rfind(kCatalogPrefix, 0) == 0; }

PlanarMap load_map(const std::string& path) {
  if (is_catalog(path)) return catalog_entry(path.substr(std::string(kCatalogPrefix).size())).map;
  try {
    return parse_map(read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + std::string(e.what()).substr(to_string(e.code()).size() + 2), e.line());
  }
}

Coordinates load_coords(const std::string& path) {
  if (is_catalog(path)) {
    const CatalogEntry entry = catalog_entry(path.substr(std::string(kCatalogPrefix).size()));
    if (!entry.coords) throw InputError("catalog entry '" + entry.name + "' has no coordinates");
    return *entry.coords;
  }
  return parse_coordinates(read_file(path));
}

AuditMode parse_mode(const std::string& mode) {
  return mode == "mindeg5" ? AuditMode::kMinDegree5 : AuditMode::kExact5Regular;
}

void print_validation(std::ostream& out, const ValidationReport& report) {
  for (const CheckResult& c : report.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << '\n';
    for (const std::string& d : c.details) out << "     " << d << '\n';
  }
  out << (report.pass() ? "matchstick drawing: valid\n" : "matchstick drawing: invalid\n");
}

nlohmann::ordered_json validation_json(const ValidationReport& report) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
  }
  return {{"pass", report.pass()}, {"checks", checks}};
}

std::string faces_text(const std::map<int, int>& counts) {
  std::string s;
  for (const auto& [size, n] : counts) {
    if (!s.empty()) s += ' ';
    s += std::to_string(n) + "x" + std::to_string(size);
  }
  return s;
}

void print_audit(std::ostream& out, const AuditReport& r) {
  out << "mode: " << to_string(r.mode) << (r.geometric ? " (with coordinates)" : " (combinatorial)") << '\n';
  out << "identities:\n";
  for (const IdentityCheck& c : r.identities) {
    out << "  " << (c.pass() ? "PASS " : "FAIL ") << c.name << ": " << c.statement << "  [expected "
        << to_string(c.expected) << ", computed " << to_string(c.computed) << "]\n";
  }
  if (r.augmentation) {
    out << "augmentation: " << r.augmentation->diagonals << " diagonal(s), v6 = " << r.augmentation->v6
        << ", v7 = " << r.augmentation->v7 << '\n';
  }
  out << "positive vertices: " << r.positive_vertices.size() << '\n';
  for (const PositiveVertex& p : r.positive_vertices) {
    out << "  " << p.vertex << ": d=" << p.degree << " faces " << faces_text(p.face_counts) << " charge "
        << to_string(p.charge) << " (" << p.classification << ")\n";
  }
  out << "pentagons: " << r.pentagons.size() << '\n';
  for (const PentagonReport& p : r.pentagons) {
    out << "  face " << p.face << ": x=" << p.positive_count << " sum " << to_string(p.sum)
        << (p.flagged ? "  FLAGGED: " + p.note : "") << '\n';
  }
  out << "preconditions:\n";
  for (const PreconditionCheck& p : r.preconditions) {
    out << "  " << (p.pass ? "PASS " : "FAIL ") << p.name << ": " << p.statement << '\n';
    for (const std::string& d : p.details) out << "       " << d << '\n';
  }
  out << "verdict: " << r.verdict;
  if (!r.failed_precondition.empty()) out << " (" << r.failed_precondition << ")";
  out << '\n';
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw InputError("not an integer list: " + text);
    out.push_back(value);
  }
  return out;
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_file(path, text);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matchstick maps: validation, discharging audit, unit-distance embedding and search"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  double tolerance = kDefaultTolerance;
  std::string format = "text";
  std::string output;
  auto add_tolerance = [&](CLI::App* sub) {
    sub->add_option("--tolerance", tolerance, "Relative edge-length tolerance")
        ->envname("MATCHSTICK_TOLERANCE")
        ->check(CLI::PositiveNumber);
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  // validate
  std::string map_path, coords_path;
  std::optional<int> k;
  auto* validate = app.add_subcommand("validate", "Check a drawing against the matchstick rules");
  validate->add_option("map", map_path, "Map file")->required();
  validate->add_option("coords", coords_path, "Coordinates file")->required();
  validate->add_option("--k", k, "Required regularity")->check(CLI::PositiveNumber);
  add_tolerance(validate);
  add_format(validate);

  // audit
  std::string mode = "exact5";
  auto* audit_cmd = app.add_subcommand("audit", "Run the charge identities and local analysis");
  audit_cmd->add_option("map", map_path, "Map file")->required();
  audit_cmd->add_option("coords", coords_path, "Optional coordinates file");
  audit_cmd->add_option("--mode", mode, "exact5 or mindeg5")->check(CLI::IsMember({"exact5", "mindeg5"}));
  audit_cmd->add_option("-o,--output", output, "Write the JSON report here");
  add_tolerance(audit_cmd);
  add_format(audit_cmd);

  // embed
  std::string init_path, svg_path;
  EmbeddingProblem problem;
  auto* embed_cmd = app.add_subcommand("embed", "Search for a unit-distance drawing");
  embed_cmd->add_option("map", map_path, "Map file")->required();
  embed_cmd->add_option("--init", init_path, "Initial coordinates");
  embed_cmd->add_option("--seed", problem.seed, "Random seed");
  embed_cmd->add_option("--restarts", problem.restarts, "Random restarts")->check(CLI::PositiveNumber);
  embed_cmd->add_option("--max-iterations", problem.max_iterations, "Iterations per descent")
      ->check(CLI::PositiveNumber);
  embed_cmd->add_option("--threshold", problem.threshold, "Convergence threshold on the residual")
      ->check(CLI::PositiveNumber);
  embed_cmd->add_option("--threads", problem.threads, "Restarts run concurrently")->check(CLI::PositiveNumber);
  embed_cmd->add_option("-o,--output", output, "Write coordinates here");
  embed_cmd->add_option("--svg", svg_path, "Write an SVG drawing here");
  add_tolerance(embed_cmd);
  add_format(embed_cmd);

  // search
  std::optional<int> search_k, min_degree;
  SearchSpec spec;
  EmbedSettings settings;
  auto* search_cmd = app.add_subcommand("search", "Enumerate maps and look for matchstick drawings");
  auto* k_opt = search_cmd->add_option("--k", search_k, "Target regularity");
  auto* md_opt = search_cmd->add_option("--min-degree", min_degree, "Minimum degree instead of regularity");
  k_opt->excludes(md_opt);
  search_cmd->add_option("--max-edges", spec.max_edges, "Edge budget")->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--budget", spec.time_budget_seconds, "Time budget in seconds")
      ->envname("MATCHSTICK_BUDGET")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--seed", spec.seed, "Random seed");
  search_cmd->add_option("--restarts", settings.restarts, "Embedding restarts per candidate")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("-o,--output", output, "Write the JSON report here");
  add_tolerance(search_cmd);
  add_format(search_cmd);

  // render
  bool labels = false;
  std::string charges_mode = "none";
  double scale = 100.0;
  auto* render_cmd = app.add_subcommand("render", "Draw a map as SVG");
  render_cmd->add_option("map", map_path, "Map file")->required();
  render_cmd->add_option("coords", coords_path, "Coordinates file")->required();
  render_cmd->add_option("-o,--output", output, "SVG path (default: standard output)");
  render_cmd->add_flag("--labels", labels, "Label vertices");
  render_cmd->add_option("--charges", charges_mode, "Colour vertices by charge")
      ->check(CLI::IsMember({"none", "exact5", "mindeg5"}));
  render_cmd->add_option("--scale", scale, "Pixels per unit length")->check(CLI::PositiveNumber);
  add_tolerance(render_cmd);

  // oracle
  std::string degrees = "5,6,7";
  OracleOptions oracle_options;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaust the local vertex configurations");
  oracle_cmd->add_option("--degrees", degrees, "Comma-separated degrees from {5,6,7}");
  oracle_cmd->add_option("--cap", oracle_options.face_size_cap, "Largest face size")->check(CLI::Range(3, 64));
  oracle_cmd->add_option("--max-triangles", oracle_options.max_triangles, "Triangles allowed at a vertex")
      ->check(CLI::NonNegativeNumber);
  add_format(oracle_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (validate->parsed()) {
      const GeometricMap gmap{load_map(map_path), load_coords(coords_path), tolerance};
      const ValidationReport report = validate_matchstick(gmap, k);
      if (format == "json") {
        out << validation_json(report).dump(2) << '\n';
      } else {
        print_validation(out, report);
      }
      return report.pass() ? kOk : kDomainFailure;
    }

    if (audit_cmd->parsed()) {
      const PlanarMap map = load_map(map_path);
      std::optional<Coordinates> coords;
      if (!coords_path.empty()) coords = load_coords(coords_path);
      const AuditReport report = audit(map, coords, parse_mode(mode), tolerance);
      const std::string json = report.to_json().dump(2) + "\n";
      if (!output.empty()) write_file(output, json);
      if (format == "json") {
        out << json;
      } else {
        print_audit(out, report);
      }
      return report.identities_hold() ? kOk : kDomainFailure;
    }

    if (embed_cmd->parsed()) {
      problem.map = load_map(map_path);
      problem.tolerance = tolerance;
      if (!init_path.empty()) problem.initial = load_coords(init_path);
      const EmbeddingResult result = solve(problem);
      const std::string coords_text = serialize_coordinates(result.coords);
      if (!svg_path.empty()) write_file(svg_path, render_svg(GeometricMap{problem.map, result.coords, tolerance}));
      if (format == "json") {
        nlohmann::ordered_json j{{"found", result.found()},
                                 {"status", to_string(result.status)},
                                 {"residual", result.residual},
                                 {"iterations", result.iterations},
                                 {"restart", result.restart},
                                 {"coordinates", coords_text},
                                 {"validation", validation_json(result.validation)}};
        if (!output.empty()) write_file(output, coords_text);
        out << j.dump(2) << '\n';
      } else {
        emit(out, output, coords_text);
        err << (result.found() ? "realization found" : "no realization found") << " (status "
            << to_string(result.status) << ", residual " << result.residual << ", restart " << result.restart
            << ")\n";
      }
      return result.found() ? kOk : kDomainFailure;
    }

    if (search_cmd->parsed()) {
      if (!search_k && !min_degree) throw InputError("search needs --k or --min-degree");
      spec.rule = search_k ? DegreeRule::regular(*search_k) : DegreeRule::min_degree(*min_degree);
      settings.tolerance = tolerance;
      const PipelineReport report = run_pipeline(spec, settings);
      const std::string json = report.to_json().dump(2) + "\n";
      if (!output.empty()) write_file(output, json);
      if (format == "json") {
        out << json;
      } else {
        out << "rule " << spec.rule.describe() << ", max edges " << spec.max_edges << ": " << report.candidates
            << " candidate map(s), " << report.attempted << " attempted" << (report.truncated ? " (time budget hit)" : "")
            << '\n';
        out << "matchstick drawings found: " << report.findings.size() << '\n';
        for (const Finding& f : report.findings) {
          out << "  |V|=" << f.map.vertex_count() << " |E|=" << f.map.edge_count() << " residual "
              << f.embedding.residual << '\n';
        }
        if (auto m = report.minimal_edges()) out << "fewest edges: " << *m << '\n';
        if (!report.audits.empty()) {
          out << "audited candidates: " << report.audits.size() << '\n';
        }
      }
      return kOk;
    }

    if (render_cmd->parsed()) {
      const GeometricMap gmap{load_map(map_path), load_coords(coords_path), tolerance};
      SvgOptions options;
      options.labels = labels;
      options.scale = scale;
      if (charges_mode != "none") options.charges = audit(gmap.map, gmap.coords, parse_mode(charges_mode), tolerance).charges;
      emit(out, output, render_svg(gmap, options));
      return kOk;
    }

    if (oracle_cmd->parsed()) {
      oracle_options.degrees = parse_int_list(degrees);
      const OracleTable table = local_config_oracle(oracle_options);
      const PentagonBound pentagon = pentagon_bound_check(table);
      if (format == "json") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const LocalConfig& r : table.rows) {
          nlohmann::ordered_json faces = nlohmann::ordered_json::object();
          for (const auto& [size, n] : r.face_counts) faces[std::to_string(size)] = n;
          rows.push_back({{"degree", r.degree}, {"faces", faces}, {"ratio", to_string(r.ratio)}});
        }
        nlohmann::ordered_json bounds = nlohmann::ordered_json::array();
        for (const OracleBound& b : table.bounds) {
          bounds.push_back({{"name", b.name},
                            {"statement", b.statement},
                            {"bound", to_string(b.bound)},
                            {"observed_max", to_string(b.observed_max)},
                            {"rows", b.rows},
                            {"violations", b.violations},
                            {"attained", b.attained}});
        }
        nlohmann::ordered_json pent = nlohmann::ordered_json::array();
        for (const PentagonBoundRow& r : pentagon.rows) {
          pent.push_back({{"x", r.positive}, {"max_sum", to_string(r.max_sum)}, {"configurations", r.configurations}});
        }
        out << nlohmann::ordered_json{{"rows", rows},
                                      {"bounds", bounds},
                                      {"pentagon", pent},
                                      {"pentagon_bound_holds", pentagon.holds},
                                      {"violations", table.violations()}}
                   .dump(2)
            << '\n';
      } else {
        out << "  d  f3  f4  f5  f6+          ratio\n";
        for (const LocalConfig& r : table.rows) {
          std::string larger;
          for (const auto& [size, n] : r.face_counts) {
            for (int i = 0; size >= 6 && i < n; ++i) larger += (larger.empty() ? "" : ",") + std::to_string(size);
          }
          char line[128];
          std::snprintf(line, sizeof line, "%3d %3d %3d %3d  %-10s %8s\n", r.degree, r.count(3), r.count(4), r.count(5),
                        larger.empty() ? "-" : larger.c_str(), to_string(r.ratio).c_str());
          out << line;
        }
        for (const OracleBound& b : table.bounds) {
          out << (b.violations == 0 ? "PASS " : "FAIL ") << b.statement << " (rows " << b.rows << ", max "
              << to_string(b.observed_max) << ", violations " << b.violations << ")\n";
        }
        for (const PentagonBoundRow& r : pentagon.rows) {
          out << "pentagon with x=" << r.positive << " positive vertices: max sum " << to_string(r.max_sum) << '\n';
        }
        out << (pentagon.holds ? "PASS " : "FAIL ") << "pentagon sum <= 0 whenever x <= 3\n";
      }
      return table.violations() == 0 && pentagon.holds ? kOk : kDomainFailure;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kPreconditionViolated ? kPrecondition : kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace matchstick::cli
