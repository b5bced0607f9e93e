#include "matchstick/audit.hpp"

#include <algorithm>

#include "matchstick/error.hpp"

namespace matchstick {

bool AuditReport::identities_hold() const {
  return std::all_of(identities.begin(), identities.end(), [](const IdentityCheck& c) { return c.pass(); });
}

std::string classify_vertex(int degree, const std::map<int, int>& face_counts) {
  auto count = [&](int s) {
    auto it = face_counts.find(s);
    return it == face_counts.end() ? 0 : it->second;
  };
  if (degree == 5 && count(3) == 5) return "five triangles";
  if (degree == 5 && count(3) == 4 && count(4) == 1) return "four triangles plus a tetragon";
  if (degree == 5 && count(3) == 4 && count(5) == 1) return "four triangles plus a pentagon";
  return "other";
}

namespace {

nlohmann::ordered_json counts_json(const std::map<int, int>& counts) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [size, n] : counts) out[std::to_string(size)] = n;
  return out;
}

void add_identity_checks(AuditReport& report, const std::vector<IdentityCheck>& checks) {
  report.identities.insert(report.identities.end(), checks.begin(), checks.end());
}

}  // namespace

AuditReport audit(const PlanarMap& map, const std::optional<Coordinates>& coords, AuditMode mode,
                  double tolerance) {
  AuditReport report;
  report.mode = mode;
  add_identity_checks(report, global_identity_check(map, mode));

  PlanarMap working = map;
  if (coords) {
    report.geometric = true;
    const GeometricMap gmap{map, *coords, tolerance};
    const ValidationReport validation = validate_matchstick(gmap);
    PreconditionCheck geometry{"matchstick-geometry", "unit edges, no crossings or overlaps, consistent rotation"};
    for (const CheckResult& c : validation.checks) {
      if (c.pass) continue;
      geometry.pass = false;
      for (const std::string& d : c.details) geometry.details.push_back(c.name + ": " + d);
    }
    report.preconditions.push_back(std::move(geometry));

    const std::vector<Diamond> diamonds = detect_diamonds(gmap);
    if (mode == AuditMode::kMinDegree5 && !diamonds.empty()) {
      throw Error(ErrorCode::kPreconditionViolated,
                  std::to_string(diamonds.size()) +
                      " diamond(s) present; min-degree mode needs a diamond-free map, add their diagonals first");
    }
    if (!diamonds.empty()) {
      std::vector<DiamondSplit> splits;
      for (const Diamond& d : diamonds) splits.push_back({d.face, d.a, d.b});
      PreconditionCheck admissible{"diamond-augmentation", "each vertex gains at most two diagonals"};
      try {
        AugmentationResult aug = augment_diamonds(map, splits);
        add_identity_checks(report, aug.checks);
        report.augmentation = AugmentationSummary{aug.diagonals_added, aug.v6, aug.v7, aug.charge_total_before,
                                                  aug.charge_total_after};
        working = std::move(aug.map);
      } catch (const Error& e) {
        admissible.pass = false;
        admissible.details.push_back(e.what());
      }
      report.preconditions.push_back(std::move(admissible));
    }
  }

  PreconditionCheck polygons{"polygon-faces", "every face boundary is a simple polygon"};
  for (std::size_t id = 0; id < working.faces().size(); ++id) {
    if (!working.faces()[id].is_polygon()) {
      polygons.pass = false;
      polygons.details.push_back("face " + std::to_string(id) + " revisits a vertex");
    }
  }
  report.preconditions.push_back(polygons);

  if (polygons.pass) {
    const ChargeTable charges = vertex_charges(working);
    const ChargeKind kind = mode == AuditMode::kExact5Regular ? ChargeKind::kTilde : ChargeKind::kHat;
    auto charge_of = [kind](const VertexCharge& c) { return kind == ChargeKind::kTilde ? c.f_tilde : c.f_hat; };

    if (mode == AuditMode::kExact5Regular && !report.augmentation) {
      report.identities.push_back({"modified-charge", "sum f - 2 v6 - 4 v7 = 20", 20, charges.totals.f_tilde});
    }

    PreconditionCheck triangles{"at-most-four-triangles", "a degree-5 vertex lies on at most four triangles"};
    for (const VertexCharge& c : vertex_charges(map).vertices) {
      if (c.degree == 5 && c.count(3) > 4) {
        triangles.pass = false;
        triangles.details.push_back("vertex " + std::to_string(c.vertex) + " lies on " +
                                    std::to_string(c.count(3)) + " triangles");
      }
    }
    PreconditionCheck augmented{"diamonds-augmented",
                                "no degree-5 vertex has four triangles plus a tetragon (that tetragon is a diamond)"};
    PreconditionCheck outside{"non-pentagonal-nonpositive", "every vertex off the pentagons has charge <= 0"};

    Rational outside_sum;
    for (const VertexCharge& c : charges.vertices) {
      const Rational charge = charge_of(c);
      report.charges[c.vertex] = charge;
      if (c.degree == 5 && c.count(3) == 4 && c.count(4) == 1) {
        augmented.pass = false;
        augmented.details.push_back("vertex " + std::to_string(c.vertex));
      }
      if (c.count(5) == 0) {
        outside_sum += charge;
        if (charge > 0) {
          outside.pass = false;
          outside.details.push_back("vertex " + std::to_string(c.vertex) + " has charge " + to_string(charge));
        }
      }
      if (charge > 0) {
        report.positive_vertices.push_back(
            {c.vertex, c.degree, c.face_counts, charge, classify_vertex(c.degree, c.face_counts)});
      }
    }

    report.pentagons = pentagon_reports(working, charges, kind);
    PreconditionCheck chain{"pentagon-chain", "at most three vertices of a pentagon carry four triangles plus it"};
    PreconditionCheck sums{"pentagon-sum-nonpositive", "sum over each pentagon of charge / f5 is <= 0"};
    Rational pentagon_sum;
    for (const PentagonReport& p : report.pentagons) {
      pentagon_sum += p.sum;
      if (p.positive_count > 3) {
        chain.pass = false;
        chain.details.push_back("face " + std::to_string(p.face) + " has " + std::to_string(p.positive_count));
      }
      if (p.sum > 0) {
        sums.pass = false;
        sums.details.push_back("face " + std::to_string(p.face) + " sums to " + to_string(p.sum));
      }
    }
    report.identities.push_back({"pentagon-split",
                                 mode == AuditMode::kExact5Regular
                                     ? "sum_{v off pentagons} f_tilde + sum_P sum_{v in P} f_tilde / f5 = 20"
                                     : "sum_{v off pentagons} f_hat + sum_P sum_{v in P} f_hat / f5 = 20",
                                 20, outside_sum + pentagon_sum});

    for (PreconditionCheck* p : {&triangles, &augmented, &outside, &chain, &sums}) {
      report.preconditions.push_back(std::move(*p));
    }
  }

  if (!report.identities_hold()) {
    report.verdict = kVerdictIdentityFailure;
    return report;
  }
  for (const PreconditionCheck& p : report.preconditions) {
    if (!p.pass) {
      report.verdict = kVerdictPreconditions;
      report.failed_precondition = p.name;
      return report;
    }
  }
  report.verdict = kVerdictCertified;
  return report;
}

nlohmann::ordered_json AuditReport::to_json() const {
  using nlohmann::ordered_json;
  ordered_json out;
  out["mode"] = to_string(mode);
  out["geometric"] = geometric;

  ordered_json ids = ordered_json::array();
  for (const IdentityCheck& c : identities) {
    ids.push_back({{"name", c.name},
                   {"statement", c.statement},
                   {"expected", to_string(c.expected)},
                   {"computed", to_string(c.computed)},
                   {"pass", c.pass()}});
  }
  out["identities"] = ids;

  if (augmentation) {
    out["augmentation"] = {{"diagonals", augmentation->diagonals},
                           {"v6", augmentation->v6},
                           {"v7", augmentation->v7},
                           {"charge_total_before", to_string(augmentation->charge_total_before)},
                           {"charge_total_after", to_string(augmentation->charge_total_after)}};
  } else {
    out["augmentation"] = nullptr;
  }

  ordered_json positives = ordered_json::array();
  for (const PositiveVertex& p : positive_vertices) {
    positives.push_back({{"vertex", p.vertex},
                         {"degree", p.degree},
                         {"faces", counts_json(p.face_counts)},
                         {"charge", to_string(p.charge)},
                         {"classification", p.classification}});
  }
  out["positive_vertices"] = positives;

  ordered_json pents = ordered_json::array();
  for (const PentagonReport& p : pentagons) {
    ordered_json terms = ordered_json::array();
    for (const PentagonTerm& t : p.terms) {
      terms.push_back({{"vertex", t.vertex}, {"ratio", to_string(t.ratio)}, {"positive_type", t.positive_type}});
    }
    pents.push_back({{"face", p.face},
                     {"vertices", terms},
                     {"positive_count", p.positive_count},
                     {"sum", to_string(p.sum)},
                     {"flagged", p.flagged},
                     {"note", p.note}});
  }
  out["pentagons"] = pents;

  ordered_json pre = ordered_json::array();
  for (const PreconditionCheck& p : preconditions) {
    pre.push_back({{"name", p.name}, {"statement", p.statement}, {"pass", p.pass}, {"details", p.details}});
  }
  out["preconditions"] = pre;
  out["verdict"] = verdict;
  if (failed_precondition.empty()) {
    out["failed_precondition"] = nullptr;
  } else {
    out["failed_precondition"] = failed_precondition;
  }
  return out;
}

}  // namespace matchstick
