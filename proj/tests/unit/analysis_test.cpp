#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gkl/analysis.hpp"
#include "gkl/constructions.hpp"
#include "../support/naive_rule.hpp"

using gkl::CellState;
using gkl::Ring;
using gkl::SolidNode;

namespace {

const gkl::AlphaConstant kAlpha = gkl::solve_alpha(1e-12);

void collect_l_cells(const SolidNode& node, const Ring& config,
                     std::set<std::size_t>* cells) {
  if (node.is_leaf()) {
    CHECK(node.span_length == 1);
    CHECK(config.at(static_cast<std::int64_t>(node.span_start)) ==
          CellState::L);
    cells->insert(node.span_start);
    return;
  }
  REQUIRE(node.left);
  REQUIRE(node.right);
  const std::size_t n = config.size();
  const std::size_t left_end =
      (node.left->span_start + node.left->span_length) % n;
  CHECK(node.span_start == node.left->span_start);
  CHECK(node.right->span_start == (left_end + node.gap_between_children) % n);
  CHECK(node.span_length == node.left->span_length +
                                node.gap_between_children +
                                node.right->span_length);
  CHECK(node.minority_count ==
        node.left->minority_count + node.right->minority_count);
  collect_l_cells(*node.left, config, cells);
  collect_l_cells(*node.right, config, cells);
}

}  // namespace

TEST_CASE("intervals and segments of the worked 12-cell example") {
  Ring ring = Ring::parse(">>><<>>>><<<");
  auto intervals = gkl::find_intervals(ring);
  REQUIRE(intervals.size() == 2);
  CHECK(intervals[0].start == 0);
  CHECK(intervals[0].length == 3);
  CHECK_FALSE(intervals[0].whole_ring);
  CHECK(intervals[1].start == 5);
  CHECK(intervals[1].length == 4);

  auto segments = gkl::find_segments(ring);
  REQUIRE(segments.size() == 2);
  CHECK(segments[0].start == 3);
  CHECK(segments[0].length == 2);
  // Right window (3 cells clockwise: 5,6,7) is all R; left window
  // (4 cells counterclockwise: 2,1,0,11) reaches the L at 11.
  CHECK(segments[0].closed_left);
  CHECK_FALSE(segments[0].closed_right);
  CHECK(segments[1].start == 9);
  CHECK(segments[1].length == 3);
  CHECK(segments[1].closed_left);
  CHECK(segments[1].closed_right);
}

TEST_CASE("single L cell yields one interval and a unit segment") {
  Ring ring = Ring::parse(">>>><>>>>>");
  auto intervals = gkl::find_intervals(ring);
  REQUIRE(intervals.size() == 1);
  CHECK(intervals[0].start == 5);
  CHECK(intervals[0].length == 9);
  auto segments = gkl::find_segments(ring);
  REQUIRE(segments.size() == 1);
  CHECK(segments[0].start == 4);
  CHECK(segments[0].length == 1);
  CHECK_FALSE(segments[0].closed_left);
  CHECK_FALSE(segments[0].closed_right);
}

TEST_CASE("uniform rings degenerate as documented") {
  Ring all_r(9, CellState::R);
  auto intervals = gkl::find_intervals(all_r);
  REQUIRE(intervals.size() == 1);
  CHECK(intervals[0].whole_ring);
  CHECK(intervals[0].length == 9);
  CHECK(gkl::find_segments(all_r).empty());

  Ring all_l(9, CellState::L);
  CHECK(gkl::find_intervals(all_l).empty());
  auto segments = gkl::find_segments(all_l);
  REQUIRE(segments.size() == 1);
  CHECK(segments[0].whole_ring);
  CHECK(segments[0].start == 0);
  CHECK(segments[0].length == 9);
}

TEST_CASE("a ring with L cells but no interval is one whole-ring segment") {
  Ring ring = Ring::parse("<>><");
  CHECK(gkl::find_intervals(ring).empty());
  auto segments = gkl::find_segments(ring);
  REQUIRE(segments.size() == 1);
  CHECK(segments[0].whole_ring);
  CHECK(segments[0].start == 0);  // smallest L index
  CHECK(segments[0].length == 4);
}

TEST_CASE("closure windows truncate at the span's complement") {
  Ring ring = Ring::parse("><>><");
  // Span (0,2) on n=5: both windows would be 3 and 4 but only 3 cells exist
  // outside; the right window sees cells 2,3,4 and the left 4,3,2.
  auto cl = gkl::closure_status(0, 2, ring);
  CHECK(cl.right);
  CHECK(cl.left);
  CHECK_THROWS_AS(gkl::closure_status(0, 0, ring), std::invalid_argument);
  CHECK_THROWS_AS(gkl::closure_status(0, 5, ring), std::invalid_argument);
}

TEST_CASE("two isolated L cells too far apart never merge") {
  Ring ring = Ring::parse("<>><>>>>>>");
  auto report = gkl::build_solid_hierarchy(ring);
  REQUIRE(report.roots.size() == 2);
  CHECK(report.roots[0]->span_start == 0);
  CHECK(report.roots[0]->span_length == 1);
  CHECK(report.roots[1]->span_start == 3);
  CHECK(report.roots[1]->span_length == 1);
  CHECK(report.gap_tie_breaks == 0);
}

TEST_CASE("adjacent L cells merge into one two-cell solid") {
  Ring ring = Ring::parse("<<>>>>>>");
  auto report = gkl::build_solid_hierarchy(ring);
  REQUIRE(report.roots.size() == 1);
  const SolidNode& root = *report.roots[0];
  CHECK(root.span_start == 0);
  CHECK(root.span_length == 2);
  CHECK(root.minority_count == 2);
  CHECK(root.gap_between_children == 0);
  CHECK_FALSE(root.is_leaf());
  CHECK(report.gap_tie_breaks == 0);
  auto audit = gkl::audit_solid_bound(report, kAlpha);
  CHECK(audit.nodes_checked == 3);
  CHECK(audit.ok());
}

TEST_CASE("symmetric rings fire the gap tie-break") {
  Ring ring = Ring::parse("<><>");
  auto report = gkl::build_solid_hierarchy(ring);
  REQUIRE(report.roots.size() == 1);
  CHECK(report.gap_tie_breaks >= 1);
  CHECK(report.roots[0]->span_start == 0);
  CHECK(report.roots[0]->span_length == 3);
  CHECK(report.roots[0]->minority_count == 2);
}

TEST_CASE("hierarchy rejects uniform rings") {
  CHECK_THROWS_AS(gkl::build_solid_hierarchy(Ring(5, CellState::R)),
                  std::invalid_argument);
  CHECK_THROWS_AS(gkl::build_solid_hierarchy(Ring(5, CellState::L)),
                  std::invalid_argument);
}

TEST_CASE("hierarchy invariants hold on random rings") {
  std::mt19937_64 rng(31337);
  for (int it = 0; it < 1500; ++it) {
    std::size_t n = 2 + rng() % 120;
    std::string text = naive::random_text(rng, n);
    Ring ring = Ring::parse(text);
    if (ring.is_uniform()) continue;
    CAPTURE(text);
    auto report = gkl::build_solid_hierarchy(ring);
    REQUIRE(!report.roots.empty());
    std::set<std::size_t> covered;
    for (const auto& root : report.roots) {
      // Spans start and end on an L cell.
      CHECK(ring.at(static_cast<std::int64_t>(root->span_start)) ==
            CellState::L);
      CHECK(ring.at(static_cast<std::int64_t>(root->span_start +
                                              root->span_length - 1)) ==
            CellState::L);
      collect_l_cells(*root, ring, &covered);
    }
    CHECK(covered.size() == ring.count(CellState::L));
    auto audit = gkl::audit_solid_bound(report, kAlpha);
    CHECK(audit.ok());
  }
}

TEST_CASE("hierarchy commutes with rotation when no tie-break fires") {
  // Sparse rings keep the R-gaps distinct, so most runs are tie-free and
  // the shifted span sets must match exactly.
  std::mt19937_64 rng(90210);
  int compared = 0;
  for (int it = 0; it < 1200; ++it) {
    std::size_t n = 10 + rng() % 80;
    std::size_t k = 1 + rng() % 5;
    Ring ring = gkl::random_configuration(n, k, rng());
    if (ring.is_uniform()) continue;
    std::int64_t r = static_cast<std::int64_t>(rng() % n);
    Ring turned = ring.rotated(r);
    auto base = gkl::build_solid_hierarchy(ring);
    auto other = gkl::build_solid_hierarchy(turned);
    if (base.gap_tie_breaks != 0 || other.gap_tie_breaks != 0) continue;
    // Cell i of `turned` is cell i+r of `ring`, so spans shift by -r.
    std::multiset<std::pair<std::size_t, std::size_t>> expect, got;
    for (const auto& root : base.roots) {
      std::size_t shifted =
          static_cast<std::size_t>(
              (static_cast<std::int64_t>(root->span_start) - r +
               2 * static_cast<std::int64_t>(n)) %
              static_cast<std::int64_t>(n));
      expect.insert({shifted, root->span_length});
    }
    for (const auto& root : other.roots) {
      got.insert({root->span_start, root->span_length});
    }
    CHECK(expect == got);
    ++compared;
  }
  CHECK(compared > 300);
}

TEST_CASE("fibonacci family members stay within the solid bound") {
  for (int i = 4; i <= 10; ++i) {
    Ring ring = Ring::parse(gkl::fibonacci_string(i).text);
    if (ring.is_uniform()) continue;
    auto report = gkl::build_solid_hierarchy(ring);
    auto audit = gkl::audit_solid_bound(report, kAlpha);
    CHECK(audit.ok());
    // L leaves plus one internal node per merge.
    CHECK(audit.nodes_checked ==
          2 * ring.count(CellState::L) - report.roots.size());
  }
}
