#include "gkl/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace gkl {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string finish(const ordered_json& doc) { return doc.dump(2) + "\n"; }

ordered_json record_json(const ErosionRecord& rec) {
  ordered_json j;
  j["ring"] = rec.ring_text;
  j["n"] = rec.n;
  j["k"] = rec.k;
  j["bound"] = rec.bound;
  j["applicable"] = rec.applicable;
  j["small_ring"] = rec.small_ring;
  j["outcome"] = to_string(rec.outcome);
  if (rec.erosion_steps) {
    j["erosion_steps"] = *rec.erosion_steps;
  } else {
    j["erosion_steps"] = nullptr;
  }
  j["ceil_pass"] = rec.ceil_pass;
  j["verdict"] = to_string(rec.verdict);
  return j;
}

ordered_json solid_json(const SolidNode& node) {
  ordered_json j;
  j["span_start"] = node.span_start;
  j["span_length"] = node.span_length;
  j["minority_count"] = node.minority_count;
  j["closed_left"] = node.closed_left;
  j["closed_right"] = node.closed_right;
  if (!node.is_leaf()) {
    j["gap_between_children"] = node.gap_between_children;
    j["children"] = ordered_json::array({solid_json(*node.left),
                                         solid_json(*node.right)});
  }
  return j;
}

ordered_json violation_json(const BoundViolation& v) {
  ordered_json j;
  j["span_start"] = v.span_start;
  j["span_length"] = v.span_length;
  j["minority_count"] = v.minority_count;
  j["bound"] = v.bound;
  return j;
}

}  // namespace

std::string alpha_report(const AlphaConstant& alpha) {
  ordered_json doc;
  doc["document"] = "alpha";
  doc["x"] = alpha.x;
  doc["alpha"] = alpha.alpha;
  doc["tolerance"] = alpha.tolerance;
  return finish(doc);
}

std::string simulation_report(const std::string& ring_text,
                              const SimulationOutcome& outcome) {
  ordered_json doc;
  doc["document"] = "simulation";
  doc["ring"] = ring_text;
  doc["n"] = ring_text.size();
  doc["status"] = to_string(outcome.status);
  doc["steps"] = outcome.steps;
  if (outcome.cycle_length) {
    doc["cycle_length"] = *outcome.cycle_length;
  } else {
    doc["cycle_length"] = nullptr;
  }
  doc["final"] = outcome.final.render();
  doc["small_ring"] = ring_text.size() < 7;
  return finish(doc);
}

std::string analysis_report(const Ring& config, const AlphaConstant& alpha) {
  ordered_json doc;
  doc["document"] = "analysis";
  doc["ring"] = config.render();
  doc["n"] = config.size();
  doc["l_count"] = config.count(CellState::L);
  doc["r_count"] = config.count(CellState::R);
  doc["small_ring"] = config.size() < 7;

  ordered_json intervals = ordered_json::array();
  for (const Interval& iv : find_intervals(config)) {
    ordered_json j;
    j["start"] = iv.start;
    j["length"] = iv.length;
    j["whole_ring"] = iv.whole_ring;
    intervals.push_back(j);
  }
  doc["intervals"] = intervals;

  ordered_json segments = ordered_json::array();
  for (const Segment& seg : find_segments(config)) {
    ordered_json j;
    j["start"] = seg.start;
    j["length"] = seg.length;
    j["closed_left"] = seg.closed_left;
    j["closed_right"] = seg.closed_right;
    j["whole_ring"] = seg.whole_ring;
    segments.push_back(j);
  }
  doc["segments"] = segments;

  const bool degenerate = config.is_uniform();
  doc["degenerate"] = degenerate;
  if (degenerate) {
    doc["hierarchy"] = nullptr;
    doc["solid_bound_audit"] = nullptr;
    return finish(doc);
  }
  const HierarchyReport hierarchy = build_solid_hierarchy(config);
  ordered_json roots = ordered_json::array();
  for (const auto& root : hierarchy.roots) roots.push_back(solid_json(*root));
  ordered_json h;
  h["roots"] = roots;
  h["gap_tie_breaks"] = hierarchy.gap_tie_breaks;
  doc["hierarchy"] = h;

  const SolidBoundAudit audit = audit_solid_bound(hierarchy, alpha);
  ordered_json a;
  a["nodes_checked"] = audit.nodes_checked;
  ordered_json violations = ordered_json::array();
  for (const BoundViolation& v : audit.violations) {
    violations.push_back(violation_json(v));
  }
  a["violations"] = violations;
  a["ok"] = audit.ok();
  doc["solid_bound_audit"] = a;
  return finish(doc);
}

std::string campaign_report_document(const CampaignReport& report) {
  ordered_json doc;
  doc["document"] = "campaign";
  doc["mode"] = report.spec.mode == SourceMode::ExhaustiveUpToRotation
                    ? "exhaustive"
                    : "sampled";
  doc["ks"] = report.spec.ks;
  if (report.spec.n_range) {
    doc["n_range"] =
        ordered_json::array({report.spec.n_range->first,
                             report.spec.n_range->second});
  } else {
    doc["n_range"] = nullptr;
  }
  doc["window"] = report.spec.window;
  doc["spot_checks"] = report.spec.spot_checks;
  doc["samples"] = report.spec.samples;
  doc["spot_samples"] = report.spec.spot_samples;
  doc["seed"] = report.spec.seed;
  doc["total_checked"] = report.total_checked;
  doc["small_ring_count"] = report.small_ring_count;
  ordered_json per_k = ordered_json::array();
  for (const CampaignKStats& stats : report.per_k) {
    ordered_json j;
    j["k"] = stats.k;
    j["checked"] = stats.checked;
    j["passed"] = stats.passed;
    j["failed"] = stats.failed;
    j["not_applicable"] = stats.not_applicable;
    j["worst_steps"] = stats.worst_steps;
    j["worst_ring"] = stats.worst_ring;
    per_k.push_back(j);
  }
  doc["per_k"] = per_k;
  ordered_json failures = ordered_json::array();
  for (const ErosionRecord& rec : report.failures) {
    failures.push_back(record_json(rec));
  }
  doc["failures"] = failures;
  doc["all_pass"] = report.all_pass();
  return finish(doc);
}

std::string campaign_csv(const CampaignReport& report) {
  std::string out = "ring,n,k,bound,applicable,erosion_steps,verdict\n";
  const std::vector<ErosionRecord>& rows =
      report.records.empty() ? report.failures : report.records;
  for (const ErosionRecord& rec : rows) {
    out += rec.ring_text;
    out += ',';
    out += std::to_string(rec.n);
    out += ',';
    out += std::to_string(rec.k);
    out += ',';
    out += format_double(rec.bound, 6);
    out += ',';
    out += rec.applicable ? "true" : "false";
    out += ',';
    if (rec.erosion_steps) out += std::to_string(*rec.erosion_steps);
    out += ',';
    out += to_string(rec.verdict);
    out += '\n';
  }
  return out;
}

std::string killing_report_document(const std::vector<KillingVerdict>& runs) {
  ordered_json doc;
  doc["document"] = "killing";
  ordered_json items = ordered_json::array();
  std::size_t failures = 0;
  for (const KillingVerdict& run : runs) {
    ordered_json j;
    j["segment"] = run.segment;
    j["segment_length"] = run.segment.size();
    j["pad"] = run.pad;
    j["deadline"] = run.deadline;
    j["erased"] = run.erased;
    if (run.steps_to_uniform) {
      j["steps_to_uniform"] = *run.steps_to_uniform;
    } else {
      j["steps_to_uniform"] = nullptr;
    }
    j["rightmost_monotone"] = run.rightmost_monotone;
    j["leftmost_speed_ok"] = run.leftmost_speed_ok;
    items.push_back(j);
    if (!run.pass()) ++failures;
  }
  doc["runs"] = items;
  doc["total"] = runs.size();
  doc["failures"] = failures;
  doc["all_pass"] = failures == 0;
  return finish(doc);
}

std::string fibonacci_report_document(
    const std::vector<FibonacciKillVerdict>& runs) {
  ordered_json doc;
  doc["document"] = "fibonacci_kill";
  ordered_json items = ordered_json::array();
  std::size_t failures = 0;
  for (const FibonacciKillVerdict& run : runs) {
    ordered_json j;
    j["index"] = run.index;
    j["n"] = run.n;
    j["minority_count"] = run.minority_count;
    j["strict_minority"] = run.strict_minority;
    j["budget"] = run.budget;
    j["reached_uniform_l"] = run.reached_uniform_l;
    j["steps"] = run.steps;
    items.push_back(j);
    if (!run.pass()) ++failures;
  }
  doc["runs"] = items;
  doc["total"] = runs.size();
  doc["failures"] = failures;
  doc["all_pass"] = failures == 0;
  return finish(doc);
}

std::string solids_report_document(const SolidsAuditReport& report) {
  ordered_json doc;
  doc["document"] = "solids_audit";
  doc["rings"] = report.spec.rings;
  doc["n_max"] = report.spec.n_max;
  doc["fibonacci_max"] = report.spec.fibonacci_max;
  doc["seed"] = report.spec.seed;
  doc["rings_checked"] = report.rings_checked;
  doc["nodes_checked"] = report.nodes_checked;
  doc["degenerate_skipped"] = report.degenerate_skipped;
  doc["gap_tie_breaks"] = report.gap_tie_breaks;
  ordered_json failures = ordered_json::array();
  for (const SolidsAuditFailure& failure : report.failures) {
    ordered_json j;
    j["ring"] = failure.ring_text;
    ordered_json violations = ordered_json::array();
    for (const BoundViolation& v : failure.violations) {
      violations.push_back(violation_json(v));
    }
    j["violations"] = violations;
    failures.push_back(j);
  }
  doc["failures"] = failures;
  doc["all_pass"] = report.all_pass();
  return finish(doc);
}

std::string tightness_report_document(const TightnessProfile& profile) {
  ordered_json doc;
  doc["document"] = "tightness";
  doc["seed"] = profile.seed;
  doc["samples_per_n"] = profile.samples_per_n;
  ordered_json rows = ordered_json::array();
  for (const TightnessRow& row : profile.rows) {
    ordered_json j;
    j["k"] = row.k;
    j["worst_steps"] = row.worst_steps;
    j["worst_steps_n"] = row.worst_steps_n;
    j["largest_overrun_n"] = row.largest_overrun_n;
    j["samples"] = row.samples;
    rows.push_back(j);
  }
  doc["rows"] = rows;
  doc["t_slope"] = profile.t_slope;
  doc["t_residual"] = profile.t_residual;
  doc["n_slope"] = profile.n_slope;
  doc["n_residual"] = profile.n_residual;
  doc["alpha_reference"] = profile.alpha_reference;
  doc["golden_reference"] = profile.golden_reference;
  return finish(doc);
}

std::string tightness_csv(const TightnessProfile& profile) {
  std::string out = "k,worst_T,worst_n,samples\n";
  for (const TightnessRow& row : profile.rows) {
    out += std::to_string(row.k);
    out += ',';
    out += std::to_string(row.worst_steps);
    out += ',';
    out += std::to_string(row.worst_steps_n);
    out += ',';
    out += std::to_string(row.samples);
    out += '\n';
  }
  out += "# t_slope=" + format_double(profile.t_slope, 6) +
         " t_residual=" + format_double(profile.t_residual, 6) + "\n";
  out += "# n_slope=" + format_double(profile.n_slope, 6) +
         " n_residual=" + format_double(profile.n_residual, 6) + "\n";
  out += "# alpha=" + format_double(profile.alpha_reference, 6) +
         " inverse_log2_golden=" + format_double(profile.golden_reference, 6) +
         "\n";
  return out;
}

std::string format_double(double value, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, value);
  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    std::size_t last = s.find_last_not_of('0');
    if (s[last] == '.') --last;
    s.erase(last + 1);
  }
  return s;
}

}  // namespace gkl
