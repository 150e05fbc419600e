#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gkl/analysis.hpp"
#include "gkl/constructions.hpp"
#include "gkl/report.hpp"
#include "gkl/ring.hpp"
#include "gkl/simulate.hpp"
#include "gkl/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<gkl::Ring> read_ring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open ring file: " + path);
  std::vector<gkl::Ring> rings;
  std::string line;
  while (std::getline(in, line)) {
    // Trim whitespace; skip blanks and '#' comments.
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    std::string text = line.substr(begin, end - begin + 1);
    if (text.empty() || text[0] == '#') continue;
    rings.push_back(gkl::Ring::parse(text));
  }
  if (rings.empty()) throw UsageError("no rings in file: " + path);
  return rings;
}

std::vector<gkl::Ring> gather_inputs(const std::string& ring_text,
                                     const std::string& file) {
  if (!ring_text.empty() && !file.empty()) {
    throw UsageError("give either --ring or --file, not both");
  }
  if (!ring_text.empty()) return {gkl::Ring::parse(ring_text)};
  if (!file.empty()) return read_ring_file(file);
  throw UsageError("an input ring is required (--ring or --file)");
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write file: " + path);
  out << content;
}

void write_bytes_file(const std::string& path,
                      const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write file: " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like A..B");
  try {
    std::size_t lo = std::stoull(text.substr(0, dots));
    std::size_t hi = std::stoull(text.substr(dots + 2));
    if (lo > hi) throw UsageError("range must be increasing: " + text);
    return {lo, hi};
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("cannot parse range: " + text);
  }
}

std::string join_sizes(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------

struct AlphaCmd {
  double tolerance = 1e-12;
  int precision = 4;
  std::string report_path;

  int run() const {
    if (precision < 1 || precision > 17) {
      throw UsageError("--precision must be in [1, 17]");
    }
    const auto alpha = gkl::solve_alpha(tolerance);
    std::printf("x=%.*f alpha=%.*f\n", precision, alpha.x, precision,
                alpha.alpha);
    if (!report_path.empty()) {
      write_text_file(report_path, gkl::alpha_report(alpha));
    }
    return kExitOk;
  }
};

struct StepCmd {
  std::string ring_text;
  std::string file;
  std::int64_t count = 1;

  int run() const {
    if (count < 0) throw UsageError("--count must be nonnegative");
    for (gkl::Ring ring : gather_inputs(ring_text, file)) {
      for (std::int64_t i = 0; i < count; ++i) ring = ring.step();
      std::printf("%s\n", ring.render().c_str());
    }
    return kExitOk;
  }
};

struct SimulateCmd {
  std::string ring_text;
  std::string file;
  std::int64_t max_steps = -1;
  std::string report_path;
  std::string trace_path;

  int run() const {
    const auto rings = gather_inputs(ring_text, file);
    if (!trace_path.empty() && rings.size() != 1) {
      throw UsageError("--trace needs exactly one input ring");
    }
    std::string report_doc;
    for (const gkl::Ring& ring : rings) {
      const std::int64_t budget =
          max_steps >= 0
              ? max_steps
              : 4 * static_cast<std::int64_t>(ring.size()) *
                        static_cast<std::int64_t>(ring.size()) +
                    64;
      const auto outcome = gkl::simulate(ring, budget);
      if (outcome.cycle_length) {
        std::printf("%s steps=%lld cycle=%lld\n", to_string(outcome.status),
                    static_cast<long long>(outcome.steps),
                    static_cast<long long>(*outcome.cycle_length));
      } else {
        std::printf("%s steps=%lld\n", to_string(outcome.status),
                    static_cast<long long>(outcome.steps));
      }
      std::printf("final=%s\n", outcome.final.render().c_str());
      if (ring.size() < 7) {
        std::printf("note=small ring (n<7): neighbor offsets alias modulo n\n");
      }
      report_doc += gkl::simulation_report(ring.render(), outcome);
      if (!trace_path.empty()) {
        const auto trace = gkl::record_trace(ring, static_cast<std::size_t>(
                                                       outcome.steps));
        write_bytes_file(trace_path, gkl::write_diagram(trace));
      }
    }
    if (!report_path.empty()) write_text_file(report_path, report_doc);
    return kExitOk;
  }
};

struct AnalyzeCmd {
  std::string ring_text;
  std::string file;
  std::string report_path;

  int run() const {
    const auto alpha = gkl::solve_alpha(1e-12);
    std::string report_doc;
    bool violations_seen = false;
    for (const gkl::Ring& ring : gather_inputs(ring_text, file)) {
      const auto intervals = gkl::find_intervals(ring);
      const auto segments = gkl::find_segments(ring);
      std::printf("ring=%s n=%zu L=%zu R=%zu\n", ring.render().c_str(),
                  ring.size(), ring.count(gkl::CellState::L),
                  ring.count(gkl::CellState::R));
      std::string interval_list;
      for (const auto& iv : intervals) {
        interval_list += " (" + std::to_string(iv.start) + "," +
                         std::to_string(iv.length) + ")";
      }
      std::printf("intervals=%zu%s\n", intervals.size(),
                  interval_list.c_str());
      std::string segment_list;
      for (const auto& seg : segments) {
        segment_list += " (" + std::to_string(seg.start) + "," +
                        std::to_string(seg.length) + ")";
        if (seg.closed_left || seg.closed_right) {
          segment_list += "[closed:";
          if (seg.closed_left) segment_list += "L";
          if (seg.closed_right) segment_list += "R";
          segment_list += "]";
        }
      }
      std::printf("segments=%zu%s\n", segments.size(), segment_list.c_str());
      if (ring.is_uniform()) {
        std::printf("solids=degenerate (uniform ring)\n");
      } else {
        const auto hierarchy = gkl::build_solid_hierarchy(ring);
        const auto audit = gkl::audit_solid_bound(hierarchy, alpha);
        std::string root_list;
        for (const auto& root : hierarchy.roots) {
          root_list += " (" + std::to_string(root->span_start) + "," +
                       std::to_string(root->span_length) +
                       ",k=" + std::to_string(root->minority_count) + ")";
        }
        std::printf("solids=%zu%s ties=%zu\n", hierarchy.roots.size(),
                    root_list.c_str(), hierarchy.gap_tie_breaks);
        std::printf("audit nodes=%zu violations=%zu %s\n",
                    audit.nodes_checked, audit.violations.size(),
                    audit.ok() ? "ok" : "VIOLATION");
        if (!audit.ok()) violations_seen = true;
      }
      report_doc += gkl::analysis_report(ring, alpha);
    }
    if (!report_path.empty()) write_text_file(report_path, report_doc);
    return violations_seen ? kExitViolation : kExitOk;
  }
};

struct ConstructCmd {
  // fibonacci
  int fib_index = 0;
  // killing
  std::string segment;
  std::int64_t pad = -1;
  // random
  std::size_t rand_n = 0;
  std::size_t rand_k = 0;
  std::uint64_t seed = gkl::kDefaultSeed;
  std::size_t count = 1;
  // enumerate
  std::size_t enum_n = 0;
  std::size_t enum_k = 0;
  std::uint64_t limit = 0;

  bool info = false;

  int run_fibonacci() const {
    const auto fs = gkl::fibonacci_string(fib_index);
    if (info) {
      std::printf("# i=%d n=%zu L=%zu\n", fs.index, fs.length,
                  fs.minority_count);
    }
    std::printf("%s\n", fs.text.c_str());
    return kExitOk;
  }

  int run_killing() const {
    const std::size_t pad_cells =
        pad >= 0 ? static_cast<std::size_t>(pad)
                 : gkl::default_killing_pad(segment.size());
    const auto scenario = gkl::killing_scenario(segment, pad_cells);
    if (info) {
      std::printf("# segment=%s pad=%zu deadline=%lld n=%zu\n",
                  scenario.segment.c_str(), scenario.pad,
                  static_cast<long long>(scenario.deadline),
                  scenario.ring.size());
    }
    std::printf("%s\n", scenario.ring.render().c_str());
    return kExitOk;
  }

  int run_random() const {
    for (std::size_t i = 0; i < count; ++i) {
      const auto ring = gkl::random_configuration(
          rand_n, rand_k, gkl::derive_seed(seed, rand_k, rand_n, i));
      std::printf("%s\n", ring.render().c_str());
    }
    return kExitOk;
  }

  int run_enumerate() const {
    gkl::NecklaceEnumerator stream(enum_n, enum_k);
    std::uint64_t emitted = 0;
    while (auto ring = stream.next()) {
      if (limit != 0 && emitted == limit) break;
      std::printf("%s\n", ring->render().c_str());
      ++emitted;
    }
    if (info) std::printf("# classes=%llu\n",
                          static_cast<unsigned long long>(emitted));
    return kExitOk;
  }
};

struct TheoremCmd {
  std::vector<std::size_t> ks;
  std::string k_range;
  std::string n_range;
  bool sampled = false;
  std::size_t samples = 10000;
  std::size_t spot_samples = 1000;
  std::size_t window = 16;
  bool no_spots = false;
  std::uint64_t cap = 2'000'000;
  std::uint64_t seed = gkl::kDefaultSeed;
  int jobs = 1;
  std::string report_path;
  std::string csv_path;

  int run() const {
    gkl::CampaignSpec spec;
    spec.mode = sampled ? gkl::SourceMode::RandomSample
                        : gkl::SourceMode::ExhaustiveUpToRotation;
    spec.ks = ks;
    if (!k_range.empty()) {
      const auto [lo, hi] = parse_range(k_range);
      for (std::size_t k = lo; k <= hi; ++k) spec.ks.push_back(k);
    }
    if (spec.ks.empty()) {
      spec.ks = sampled ? std::vector<std::size_t>{4, 5, 6, 7, 8}
                        : std::vector<std::size_t>{1, 2, 3};
    }
    for (std::size_t k : spec.ks) {
      if (k == 0) throw UsageError("k must be at least 1");
    }
    if (!n_range.empty()) spec.n_range = parse_range(n_range);
    spec.samples = samples;
    spec.spot_samples = spot_samples;
    spec.window = window;
    spec.spot_checks = !no_spots;
    spec.enumeration_cap = cap;
    spec.seed = seed;
    spec.jobs = jobs;
    spec.keep_records = !csv_path.empty();

    const auto alpha = gkl::solve_alpha(1e-12);
    const auto report = gkl::run_campaign(spec, alpha);
    std::printf("campaign mode=%s ks=%s seed=%llu jobs=%d\n",
                sampled ? "sampled" : "exhaustive", join_sizes(spec.ks).c_str(),
                static_cast<unsigned long long>(seed), jobs);
    for (const auto& stats : report.per_k) {
      std::printf(
          "k=%zu bound=%s checked=%zu passed=%zu failed=%zu na=%zu "
          "worst_steps=%lld\n",
          stats.k, gkl::format_double(gkl::bound_for(stats.k, alpha), 6).c_str(),
          stats.checked, stats.passed, stats.failed, stats.not_applicable,
          static_cast<long long>(stats.worst_steps));
    }
    std::printf("total=%zu small_rings=%zu failures=%zu\n",
                report.total_checked, report.small_ring_count,
                report.failures.size());
    std::printf("%s\n", report.all_pass() ? "PASS" : "FAIL");
    if (!report_path.empty()) {
      write_text_file(report_path, gkl::campaign_report_document(report));
    }
    if (!csv_path.empty()) {
      write_text_file(csv_path, gkl::campaign_csv(report));
    }
    return report.all_pass() ? kExitOk : kExitViolation;
  }
};

struct KillingCmd {
  std::size_t max_len = 12;
  std::string segment;
  std::int64_t pad = -1;
  std::string report_path;

  int run() const {
    std::vector<std::string> segments;
    if (!segment.empty()) {
      segments.push_back(segment);
    } else {
      segments = gkl::enumerate_segment_texts(max_len);
    }
    std::vector<gkl::KillingVerdict> runs;
    runs.reserve(segments.size());
    std::size_t failures = 0;
    for (const std::string& s : segments) {
      const std::size_t pad_cells = pad >= 0
                                        ? static_cast<std::size_t>(pad)
                                        : gkl::default_killing_pad(s.size());
      runs.push_back(
          gkl::verify_killing_lemma(gkl::killing_scenario(s, pad_cells)));
      const auto& v = runs.back();
      if (!v.pass() || !v.rightmost_monotone || !v.leftmost_speed_ok) {
        ++failures;
        std::printf("FAIL segment=%s erased=%d monotone=%d speed=%d\n",
                    v.segment.c_str(), v.erased ? 1 : 0,
                    v.rightmost_monotone ? 1 : 0, v.leftmost_speed_ok ? 1 : 0);
      }
    }
    std::printf("segments=%zu failures=%zu\n", runs.size(), failures);
    std::printf("%s\n", failures == 0 ? "PASS" : "FAIL");
    if (!report_path.empty()) {
      write_text_file(report_path, gkl::killing_report_document(runs));
    }
    return failures == 0 ? kExitOk : kExitViolation;
  }
};

struct FibonacciCmd {
  int max_index = 12;
  std::string report_path;

  int run() const {
    std::vector<gkl::FibonacciKillVerdict> runs;
    std::size_t failures = 0;
    for (int i = 0; i <= max_index; ++i) {
      runs.push_back(gkl::verify_fibonacci_kill(i));
      const auto& v = runs.back();
      std::printf("i=%d n=%zu L=%zu%s steps=%lld %s\n", v.index, v.n,
                  v.minority_count, v.strict_minority ? " minority" : "",
                  static_cast<long long>(v.steps), v.pass() ? "ok" : "FAIL");
      if (!v.pass()) ++failures;
    }
    std::printf("checked=%zu failures=%zu\n", runs.size(), failures);
    std::printf("%s\n", failures == 0 ? "PASS" : "FAIL");
    if (!report_path.empty()) {
      write_text_file(report_path, gkl::fibonacci_report_document(runs));
    }
    return failures == 0 ? kExitOk : kExitViolation;
  }
};

struct SolidsCmd {
  std::size_t rings = 10000;
  std::size_t n_max = 256;
  int fibonacci_max = 10;
  std::uint64_t seed = gkl::kDefaultSeed;
  int jobs = 1;
  std::string report_path;

  int run() const {
    gkl::SolidsAuditSpec spec;
    spec.rings = rings;
    spec.n_max = n_max;
    spec.fibonacci_max = fibonacci_max;
    spec.seed = seed;
    spec.jobs = jobs;
    const auto alpha = gkl::solve_alpha(1e-12);
    const auto report = gkl::run_solids_audit(spec, alpha);
    std::printf(
        "rings_checked=%zu nodes=%zu degenerate=%zu tie_breaks=%zu\n",
        report.rings_checked, report.nodes_checked, report.degenerate_skipped,
        report.gap_tie_breaks);
    for (const auto& failure : report.failures) {
      std::printf("VIOLATION ring=%s spans=%zu\n", failure.ring_text.c_str(),
                  failure.violations.size());
    }
    std::printf("violations=%zu\n", report.failures.size());
    std::printf("%s\n", report.all_pass() ? "PASS" : "FAIL");
    if (!report_path.empty()) {
      write_text_file(report_path, gkl::solids_report_document(report));
    }
    return report.all_pass() ? kExitOk : kExitViolation;
  }
};

struct TightnessCmd {
  std::string k_range = "1..6";
  std::size_t samples = 200;
  std::uint64_t seed = gkl::kDefaultSeed;
  int jobs = 1;
  std::string report_path;
  std::string csv_path;

  int run() const {
    const auto [lo, hi] = parse_range(k_range);
    if (lo == 0) throw UsageError("k must be at least 1");
    std::vector<std::size_t> ks;
    for (std::size_t k = lo; k <= hi; ++k) ks.push_back(k);
    const auto alpha = gkl::solve_alpha(1e-12);
    const auto profile = gkl::tightness_profile(ks, samples, seed, alpha, jobs);
    for (const auto& row : profile.rows) {
      std::printf(
          "k=%zu worst_T=%lld at_n=%zu largest_overrun_n=%zu samples=%zu\n",
          row.k, static_cast<long long>(row.worst_steps), row.worst_steps_n,
          row.largest_overrun_n, row.samples);
    }
    std::printf("t_slope=%s t_residual=%s\n",
                gkl::format_double(profile.t_slope, 6).c_str(),
                gkl::format_double(profile.t_residual, 6).c_str());
    std::printf("n_slope=%s n_residual=%s\n",
                gkl::format_double(profile.n_slope, 6).c_str(),
                gkl::format_double(profile.n_residual, 6).c_str());
    std::printf("alpha=%s inverse_log2_golden=%s\n",
                gkl::format_double(profile.alpha_reference, 6).c_str(),
                gkl::format_double(profile.golden_reference, 6).c_str());
    if (!report_path.empty()) {
      write_text_file(report_path, gkl::tightness_report_document(profile));
    }
    if (!csv_path.empty()) {
      write_text_file(csv_path, gkl::tightness_csv(profile));
    }
    return kExitOk;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GKL two-state ring automaton: simulation, structure "
               "analysis, and verification campaigns"};
  app.require_subcommand(1);

  AlphaCmd alpha_cmd;
  auto* alpha_app =
      app.add_subcommand("alpha", "Solve 5^x = 2^x + 1 and print x, 1/x");
  alpha_app->add_option("--tolerance", alpha_cmd.tolerance,
                        "Bisection half-width target");
  alpha_app->add_option("--precision", alpha_cmd.precision,
                        "Printed decimal places (1-17)");
  alpha_app->add_option("--report", alpha_cmd.report_path, "JSON output path");

  StepCmd step_cmd;
  auto* step_app = app.add_subcommand("step", "Apply the rule --count times");
  step_app->add_option("--ring", step_cmd.ring_text, "Ring text ('>'/'<')");
  step_app->add_option("--file", step_cmd.file,
                       "File of ring texts (# comments allowed)");
  step_app->add_option("--count", step_cmd.count, "Number of steps");

  SimulateCmd simulate_cmd;
  auto* simulate_app = app.add_subcommand(
      "simulate", "Run to a uniform state, a cycle, or the step budget");
  simulate_app->add_option("--ring", simulate_cmd.ring_text, "Ring text");
  simulate_app->add_option("--file", simulate_cmd.file, "File of ring texts");
  simulate_app->add_option("--max-steps", simulate_cmd.max_steps,
                           "Step budget (default 4n^2+64)");
  simulate_app->add_option("--report", simulate_cmd.report_path,
                           "JSON output path");
  simulate_app->add_option("--trace", simulate_cmd.trace_path,
                           "PBM space-time diagram path (single ring)");

  AnalyzeCmd analyze_cmd;
  auto* analyze_app = app.add_subcommand(
      "analyze", "Intervals, segments, solid hierarchy, bound audit");
  analyze_app->add_option("--ring", analyze_cmd.ring_text, "Ring text");
  analyze_app->add_option("--file", analyze_cmd.file, "File of ring texts");
  analyze_app->add_option("--report", analyze_cmd.report_path,
                          "JSON output path");

  ConstructCmd construct_cmd;
  auto* construct_app =
      app.add_subcommand("construct", "Emit rings of the named family");
  construct_app->require_subcommand(1);
  auto* fib_app = construct_app->add_subcommand(
      "fibonacci", "Adversarial segment family member");
  fib_app->add_option("--index", construct_cmd.fib_index, "Family index i")
      ->required();
  fib_app->add_flag("--info", construct_cmd.info, "Prefix a # summary line");
  auto* kill_app = construct_app->add_subcommand(
      "killing", "Segment flanked by killing intervals");
  kill_app->add_option("--segment", construct_cmd.segment, "Segment text")
      ->required();
  kill_app->add_option("--pad", construct_cmd.pad,
                       "Extra trailing R cells (default 6|S|)");
  kill_app->add_flag("--info", construct_cmd.info, "Prefix a # summary line");
  auto* random_app = construct_app->add_subcommand(
      "random", "Seeded rings with exactly k L cells");
  random_app->add_option("--n", construct_cmd.rand_n, "Ring size")->required();
  random_app->add_option("--k", construct_cmd.rand_k, "L-cell count")
      ->required();
  random_app->add_option("--seed", construct_cmd.seed, "Base seed");
  random_app->add_option("--count", construct_cmd.count, "Rings to emit");
  auto* enum_app = construct_app->add_subcommand(
      "enumerate", "All rotation classes with k L cells among n");
  enum_app->add_option("--n", construct_cmd.enum_n, "Ring size")->required();
  enum_app->add_option("--k", construct_cmd.enum_k, "L-cell count")
      ->required();
  enum_app->add_option("--limit", construct_cmd.limit,
                       "Stop after this many classes (0 = all)");
  enum_app->add_flag("--info", construct_cmd.info,
                     "Append a # classes summary line");

  auto* verify_app =
      app.add_subcommand("verify", "Run the verification campaigns");
  verify_app->require_subcommand(1);

  TheoremCmd theorem_cmd;
  auto* theorem_app = verify_app->add_subcommand(
      "theorem", "Erosion within floor(3 k^alpha) steps when n exceeds it");
  theorem_app->add_option("--k", theorem_cmd.ks, "Minority counts to check");
  theorem_app->add_option("--k-range", theorem_cmd.k_range, "Range A..B of k");
  theorem_app->add_option("--n-range", theorem_cmd.n_range,
                          "Explicit ring sizes A..B");
  theorem_app->add_flag("--sampled", theorem_cmd.sampled,
                        "Random sampling instead of exhaustion");
  theorem_app->add_option("--samples", theorem_cmd.samples,
                          "Samples per (k, n) when sampling");
  theorem_app->add_option("--spot-samples", theorem_cmd.spot_samples,
                          "Samples at each spot-check n");
  theorem_app->add_option("--window", theorem_cmd.window,
                          "Default exhaustive window above the bound");
  theorem_app->add_flag("--no-spots", theorem_cmd.no_spots,
                        "Skip the 2x and 10x bound spot checks");
  theorem_app->add_option("--cap", theorem_cmd.cap,
                          "Max rotation classes per exhaustive (k, n)");
  theorem_app->add_option("--seed", theorem_cmd.seed, "Base seed");
  theorem_app->add_option("--jobs", theorem_cmd.jobs, "Worker threads");
  theorem_app->add_option("--report", theorem_cmd.report_path,
                          "JSON output path");
  theorem_app->add_option("--csv", theorem_cmd.csv_path,
                          "Per-configuration CSV path");

  KillingCmd killing_cmd;
  auto* killing_app = verify_app->add_subcommand(
      "killing", "Segments erased by flanking intervals within 2|S| steps");
  killing_app->add_option("--max-len", killing_cmd.max_len,
                          "Sweep all valid segments up to this length");
  killing_app->add_option("--segment", killing_cmd.segment,
                          "Check a single segment instead");
  killing_app->add_option("--pad", killing_cmd.pad,
                          "Extra trailing R cells (default 6|S|)");
  killing_app->add_option("--report", killing_cmd.report_path,
                          "JSON output path");

  FibonacciCmd fibonacci_cmd;
  auto* fibonacci_app = verify_app->add_subcommand(
      "fibonacci", "Family rings reach uniform L within 4|S|^2 steps");
  fibonacci_app->add_option("--max-index", fibonacci_cmd.max_index,
                            "Check family indices 0..I");
  fibonacci_app->add_option("--report", fibonacci_cmd.report_path,
                            "JSON output path");

  SolidsCmd solids_cmd;
  auto* solids_app = verify_app->add_subcommand(
      "solids", "Solid spans stay within (3 k^alpha - 1)/2");
  solids_app->add_option("--rings", solids_cmd.rings, "Random rings to audit");
  solids_app->add_option("--n-max", solids_cmd.n_max, "Largest random n");
  solids_app->add_option("--fibonacci-max", solids_cmd.fibonacci_max,
                         "Audit family indices 0..I as well");
  solids_app->add_option("--seed", solids_cmd.seed, "Base seed");
  solids_app->add_option("--jobs", solids_cmd.jobs, "Worker threads");
  solids_app->add_option("--report", solids_cmd.report_path,
                         "JSON output path");

  TightnessCmd tightness_cmd;
  auto* tightness_app = app.add_subcommand(
      "tightness", "Empirical worst-case erosion profile and slopes");
  tightness_app->add_option("--k-range", tightness_cmd.k_range,
                            "Range A..B of k");
  tightness_app->add_option("--samples", tightness_cmd.samples,
                            "Samples per (k, n)");
  tightness_app->add_option("--seed", tightness_cmd.seed, "Base seed");
  tightness_app->add_option("--jobs", tightness_cmd.jobs, "Worker threads");
  tightness_app->add_option("--report", tightness_cmd.report_path,
                            "JSON output path");
  tightness_app->add_option("--csv", tightness_cmd.csv_path,
                            "Profile CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*alpha_app) return alpha_cmd.run();
    if (*step_app) return step_cmd.run();
    if (*simulate_app) return simulate_cmd.run();
    if (*analyze_app) return analyze_cmd.run();
    if (*construct_app) {
      if (*fib_app) return construct_cmd.run_fibonacci();
      if (*kill_app) return construct_cmd.run_killing();
      if (*random_app) return construct_cmd.run_random();
      if (*enum_app) return construct_cmd.run_enumerate();
    }
    if (*verify_app) {
      if (*theorem_app) return theorem_cmd.run();
      if (*killing_app) return killing_cmd.run();
      if (*fibonacci_app) return fibonacci_cmd.run();
      if (*solids_app) return solids_cmd.run();
    }
    if (*tightness_app) return tightness_cmd.run();
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const gkl::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const gkl::EnumerationCapExceeded& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitViolation;
  }
  return kExitUsage;
}
