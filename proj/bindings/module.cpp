#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "gkl/analysis.hpp"
#include "gkl/constructions.hpp"
#include "gkl/report.hpp"
#include "gkl/ring.hpp"
#include "gkl/simulate.hpp"
#include "gkl/verify.hpp"

namespace py = pybind11;

namespace {

py::dict node_dict(const gkl::SolidNode& node) {
  py::dict d;
  d["span_start"] = node.span_start;
  d["span_length"] = node.span_length;
  d["minority_count"] = node.minority_count;
  d["gap_between_children"] = node.gap_between_children;
  d["closed_left"] = node.closed_left;
  d["closed_right"] = node.closed_right;
  if (node.left) {
    d["left"] = node_dict(*node.left);
    d["right"] = node_dict(*node.right);
  }
  return d;
}

py::dict record_dict(const gkl::ErosionRecord& record) {
  py::dict d;
  d["ring"] = record.ring_text;
  d["n"] = record.n;
  d["k"] = record.k;
  d["bound"] = record.bound;
  d["applicable"] = record.applicable;
  d["small_ring"] = record.small_ring;
  d["outcome"] = std::string(gkl::to_string(record.outcome));
  if (record.erosion_steps) {
    d["erosion_steps"] = *record.erosion_steps;
  } else {
    d["erosion_steps"] = py::none();
  }
  d["ceil_pass"] = record.ceil_pass;
  d["verdict"] = std::string(gkl::to_string(record.verdict));
  return d;
}

gkl::AlphaConstant default_alpha() { return gkl::solve_alpha(1e-12); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bit-packed GKL ring automaton: stepping, structure analysis, "
            "constructions, and verification campaigns.";

  py::enum_<gkl::CellState>(m, "CellState")
      .value("R", gkl::CellState::R)
      .value("L", gkl::CellState::L);

  py::register_exception<gkl::ParseError>(m, "RingParseError",
                                          PyExc_ValueError);
  py::register_exception<gkl::EnumerationCapExceeded>(
      m, "EnumerationCapExceeded", PyExc_RuntimeError);

  py::class_<gkl::Ring>(m, "Ring")
      .def(py::init([](const std::string& text) {
             return gkl::Ring::parse(text);
           }),
           py::arg("text"))
      .def_static("parse", [](const std::string& text) {
        return gkl::Ring::parse(text);
      })
      .def("render", &gkl::Ring::render)
      .def("__str__", &gkl::Ring::render)
      .def("__repr__",
           [](const gkl::Ring& r) { return "Ring(\"" + r.render() + "\")"; })
      .def("__len__", &gkl::Ring::size)
      .def("at", &gkl::Ring::at, py::arg("i"),
           "Cell at index i; any integer, wraps modulo n.")
      .def("count", &gkl::Ring::count, py::arg("state"))
      .def("uniform", &gkl::Ring::uniform, py::arg("state"))
      .def("is_uniform", &gkl::Ring::is_uniform)
      .def("step", &gkl::Ring::step)
      .def("rotated", &gkl::Ring::rotated, py::arg("r"))
      .def("mirrored", &gkl::Ring::mirrored)
      .def("__eq__",
           [](const gkl::Ring& a, const gkl::Ring& b) { return a == b; })
      .def("__hash__", &gkl::Ring::hash);

  py::class_<gkl::AlphaConstant>(m, "AlphaConstant")
      .def_readonly("x", &gkl::AlphaConstant::x)
      .def_readonly("alpha", &gkl::AlphaConstant::alpha)
      .def_readonly("tolerance", &gkl::AlphaConstant::tolerance)
      .def("__repr__", [](const gkl::AlphaConstant& a) {
        return "AlphaConstant(x=" + gkl::format_double(a.x, 12) +
               ", alpha=" + gkl::format_double(a.alpha, 12) + ")";
      });

  m.def("solve_alpha", &gkl::solve_alpha, py::arg("tolerance") = 1e-12,
        "Root x of 5^x = 2^x + 1 and the erosion exponent alpha = 1/x.");
  m.def(
      "bound_for",
      [](std::size_t k, std::optional<gkl::AlphaConstant> alpha) {
        return gkl::bound_for(k, alpha ? *alpha : default_alpha());
      },
      py::arg("k"), py::arg("alpha") = py::none(),
      "The erosion bound 3 * k^alpha.");

  m.def(
      "step_text",
      [](const std::string& text, std::int64_t count) {
        gkl::Ring ring = gkl::Ring::parse(text);
        for (std::int64_t i = 0; i < count; ++i) ring = ring.step();
        return ring.render();
      },
      py::arg("text"), py::arg("count") = 1);

  m.def(
      "simulate",
      [](const std::string& text, std::int64_t max_steps) {
        const auto outcome = gkl::simulate(gkl::Ring::parse(text), max_steps);
        py::dict d;
        d["status"] = std::string(gkl::to_string(outcome.status));
        d["steps"] = outcome.steps;
        if (outcome.cycle_length) {
          d["cycle_length"] = *outcome.cycle_length;
        } else {
          d["cycle_length"] = py::none();
        }
        d["final"] = outcome.final.render();
        return d;
      },
      py::arg("text"), py::arg("max_steps"));

  m.def(
      "erosion_time",
      [](const std::string& text, gkl::CellState majority,
         std::int64_t max_steps) {
        const auto result =
            gkl::erosion_time(gkl::Ring::parse(text), majority, max_steps);
        py::dict d;
        d["status"] = std::string(gkl::to_string(result.status));
        d["steps"] = result.steps;
        d["eroded"] = result.eroded();
        return d;
      },
      py::arg("text"), py::arg("majority"), py::arg("max_steps"));

  m.def(
      "diagram_bytes",
      [](const std::string& text, std::size_t steps) {
        const auto bytes =
            gkl::write_diagram(gkl::record_trace(gkl::Ring::parse(text), steps));
        return py::bytes(reinterpret_cast<const char*>(bytes.data()),
                         bytes.size());
      },
      py::arg("text"), py::arg("steps"),
      "Binary PBM space-time diagram, one row per step.");

  m.def(
      "intervals",
      [](const std::string& text) {
        py::list out;
        for (const auto& iv : gkl::find_intervals(gkl::Ring::parse(text))) {
          py::dict d;
          d["start"] = iv.start;
          d["length"] = iv.length;
          d["whole_ring"] = iv.whole_ring;
          out.append(d);
        }
        return out;
      },
      py::arg("text"));

  m.def(
      "segments",
      [](const std::string& text) {
        py::list out;
        for (const auto& seg : gkl::find_segments(gkl::Ring::parse(text))) {
          py::dict d;
          d["start"] = seg.start;
          d["length"] = seg.length;
          d["closed_left"] = seg.closed_left;
          d["closed_right"] = seg.closed_right;
          d["whole_ring"] = seg.whole_ring;
          out.append(d);
        }
        return out;
      },
      py::arg("text"));

  m.def(
      "solid_hierarchy",
      [](const std::string& text) {
        const gkl::Ring ring = gkl::Ring::parse(text);
        const auto report = gkl::build_solid_hierarchy(ring);
        const auto audit = gkl::audit_solid_bound(report, default_alpha());
        py::list roots;
        for (const auto& root : report.roots) roots.append(node_dict(*root));
        py::dict d;
        d["roots"] = roots;
        d["gap_tie_breaks"] = report.gap_tie_breaks;
        py::dict a;
        a["nodes_checked"] = audit.nodes_checked;
        py::list violations;
        for (const auto& v : audit.violations) {
          py::dict vd;
          vd["span_start"] = v.span_start;
          vd["span_length"] = v.span_length;
          vd["minority_count"] = v.minority_count;
          vd["bound"] = v.bound;
          violations.append(vd);
        }
        a["violations"] = violations;
        a["ok"] = audit.ok();
        d["audit"] = a;
        return d;
      },
      py::arg("text"),
      "Binary hierarchy of solids plus the span-bound audit.");

  m.def(
      "fibonacci_string",
      [](int i) {
        const auto fs = gkl::fibonacci_string(i);
        py::dict d;
        d["index"] = fs.index;
        d["text"] = fs.text;
        d["length"] = fs.length;
        d["minority_count"] = fs.minority_count;
        return d;
      },
      py::arg("i"));

  m.def("is_valid_segment",
        [](const std::string& text) { return gkl::is_valid_segment(text); },
        py::arg("text"));
  m.def("enumerate_segment_texts", &gkl::enumerate_segment_texts,
        py::arg("max_len"));

  m.def(
      "killing_scenario",
      [](const std::string& segment, std::optional<std::size_t> pad) {
        const auto scenario = gkl::killing_scenario(
            segment, pad ? *pad : gkl::default_killing_pad(segment.size()));
        py::dict d;
        d["segment"] = scenario.segment;
        d["pad"] = scenario.pad;
        d["deadline"] = scenario.deadline;
        d["ring"] = scenario.ring.render();
        return d;
      },
      py::arg("segment"), py::arg("pad") = py::none());

  m.def(
      "verify_killing",
      [](const std::string& segment, std::optional<std::size_t> pad) {
        const auto verdict = gkl::verify_killing_lemma(gkl::killing_scenario(
            segment, pad ? *pad : gkl::default_killing_pad(segment.size())));
        py::dict d;
        d["segment"] = verdict.segment;
        d["pad"] = verdict.pad;
        d["deadline"] = verdict.deadline;
        d["erased"] = verdict.erased;
        if (verdict.steps_to_uniform) {
          d["steps_to_uniform"] = *verdict.steps_to_uniform;
        } else {
          d["steps_to_uniform"] = py::none();
        }
        d["rightmost_monotone"] = verdict.rightmost_monotone;
        d["leftmost_speed_ok"] = verdict.leftmost_speed_ok;
        d["pass"] = verdict.pass();
        return d;
      },
      py::arg("segment"), py::arg("pad") = py::none());

  m.def(
      "verify_fibonacci_kill",
      [](int i) {
        const auto verdict = gkl::verify_fibonacci_kill(i);
        py::dict d;
        d["index"] = verdict.index;
        d["n"] = verdict.n;
        d["minority_count"] = verdict.minority_count;
        d["strict_minority"] = verdict.strict_minority;
        d["budget"] = verdict.budget;
        d["reached_uniform_l"] = verdict.reached_uniform_l;
        d["steps"] = verdict.steps;
        d["pass"] = verdict.pass();
        return d;
      },
      py::arg("i"));

  m.def(
      "check_configuration",
      [](const std::string& text) {
        return record_dict(
            gkl::check_configuration(gkl::Ring::parse(text), default_alpha()));
      },
      py::arg("text"),
      "One configuration against the floor(3 k^alpha) erosion budget.");

  m.def("necklace_count", &gkl::necklace_count, py::arg("n"), py::arg("k"),
        "Rotation classes of n-cell rings with k L cells.");
  m.def(
      "necklaces",
      [](std::size_t n, std::size_t k, std::size_t limit) {
        std::vector<std::string> out;
        gkl::NecklaceEnumerator stream(n, k);
        while (auto ring = stream.next()) {
          if (limit != 0 && out.size() == limit) break;
          out.push_back(ring->render());
        }
        return out;
      },
      py::arg("n"), py::arg("k"), py::arg("limit") = 0,
      "Lexicographically minimal rotation representatives.");

  m.def(
      "random_ring",
      [](std::size_t n, std::size_t k, std::uint64_t seed) {
        return gkl::random_configuration(n, k, seed).render();
      },
      py::arg("n"), py::arg("k"), py::arg("seed") = gkl::kDefaultSeed);

  m.def("derive_seed", &gkl::derive_seed, py::arg("base"), py::arg("a"),
        py::arg("b") = 0, py::arg("c") = 0);

  m.def(
      "theorem_campaign",
      [](std::vector<std::size_t> ks, bool sampled, std::size_t samples,
         std::size_t spot_samples, std::size_t window, bool spots,
         std::optional<std::pair<std::size_t, std::size_t>> n_range,
         std::uint64_t seed, int jobs) {
        gkl::CampaignSpec spec;
        spec.mode = sampled ? gkl::SourceMode::RandomSample
                            : gkl::SourceMode::ExhaustiveUpToRotation;
        spec.ks = std::move(ks);
        spec.samples = samples;
        spec.spot_samples = spot_samples;
        spec.window = window;
        spec.spot_checks = spots;
        spec.n_range = n_range;
        spec.seed = seed;
        spec.jobs = jobs;
        spec.keep_records = false;
        const auto report = gkl::run_campaign(spec, default_alpha());
        py::dict d;
        d["all_pass"] = report.all_pass();
        d["total_checked"] = report.total_checked;
        d["small_ring_count"] = report.small_ring_count;
        py::list per_k;
        for (const auto& stats : report.per_k) {
          py::dict kd;
          kd["k"] = stats.k;
          kd["checked"] = stats.checked;
          kd["passed"] = stats.passed;
          kd["failed"] = stats.failed;
          kd["not_applicable"] = stats.not_applicable;
          kd["worst_steps"] = stats.worst_steps;
          kd["worst_ring"] = stats.worst_ring;
          per_k.append(kd);
        }
        d["per_k"] = per_k;
        py::list failures;
        for (const auto& record : report.failures) {
          failures.append(record_dict(record));
        }
        d["failures"] = failures;
        return d;
      },
      py::arg("ks"), py::arg("sampled") = false, py::arg("samples") = 10000,
      py::arg("spot_samples") = 1000, py::arg("window") = 16,
      py::arg("spots") = true, py::arg("n_range") = py::none(),
      py::arg("seed") = gkl::kDefaultSeed, py::arg("jobs") = 1,
      "Erosion-theorem campaign; exhaustive over rotation classes or "
      "seeded-random sampled.");

  m.def(
      "solids_audit",
      [](std::size_t rings, std::size_t n_max, int fibonacci_max,
         std::uint64_t seed, int jobs) {
        gkl::SolidsAuditSpec spec;
        spec.rings = rings;
        spec.n_max = n_max;
        spec.fibonacci_max = fibonacci_max;
        spec.seed = seed;
        spec.jobs = jobs;
        const auto report = gkl::run_solids_audit(spec, default_alpha());
        py::dict d;
        d["rings_checked"] = report.rings_checked;
        d["nodes_checked"] = report.nodes_checked;
        d["degenerate_skipped"] = report.degenerate_skipped;
        d["gap_tie_breaks"] = report.gap_tie_breaks;
        d["violations"] = report.failures.size();
        d["all_pass"] = report.all_pass();
        return d;
      },
      py::arg("rings") = 10000, py::arg("n_max") = 256,
      py::arg("fibonacci_max") = 10, py::arg("seed") = gkl::kDefaultSeed,
      py::arg("jobs") = 1);

  m.def(
      "analysis_json",
      [](const std::string& text) {
        return gkl::analysis_report(gkl::Ring::parse(text), default_alpha());
      },
      py::arg("text"), "The analyze report document as a JSON string.");
}
