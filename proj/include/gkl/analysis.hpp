#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "gkl/alpha.hpp"
#include "gkl/ring.hpp"

namespace gkl {

/// Maximal cyclic run of three or more R cells. A uniform-R ring is reported
/// as one whole-ring interval.
struct Interval {
  std::size_t start = 0;
  std::size_t length = 0;
  bool whole_ring = false;
};

/// Maximal block between intervals; begins and ends with L. A ring with L
/// cells but no interval is reported as one whole-ring segment anchored at
/// its smallest L index (closure flags are meaningless there).
struct Segment {
  std::size_t start = 0;
  std::size_t length = 0;
  bool closed_left = false;
  bool closed_right = false;
  bool whole_ring = false;
};

struct Closure {
  bool left = false;
  bool right = false;
};

std::vector<Interval> find_intervals(const Ring& config);
std::vector<Segment> find_segments(const Ring& config);

/// Closure of a span of `length` cells starting at `start`: closed right iff
/// an L sits among the length+1 cells immediately clockwise of the span,
/// closed left iff an L sits among the 2*length cells immediately
/// counterclockwise. Windows truncate to the cells outside the span (no
/// wrap back into it). Throws std::invalid_argument when the span covers
/// the whole ring.
Closure closure_status(std::size_t start, std::size_t length,
                       const Ring& config);

/// Node of the binary hierarchy of solids. Leaves are single L cells;
/// an internal node covers both children's spans plus the R gap between
/// them. Closure flags are computed on this node's own span.
struct SolidNode {
  std::size_t span_start = 0;
  std::size_t span_length = 0;
  std::size_t minority_count = 0;
  std::size_t gap_between_children = 0;
  bool closed_left = false;
  bool closed_right = false;
  std::unique_ptr<SolidNode> left;
  std::unique_ptr<SolidNode> right;

  bool is_leaf() const { return !left; }
};

struct BoundViolation {
  std::size_t span_start = 0;
  std::size_t span_length = 0;
  std::size_t minority_count = 0;
  double bound = 0.0;
};

struct SolidBoundAudit {
  std::size_t nodes_checked = 0;
  std::vector<BoundViolation> violations;
  bool ok() const { return violations.empty(); }
};

struct HierarchyReport {
  /// Surviving maximal solids in cyclic index order.
  std::vector<std::unique_ptr<SolidNode>> roots;
  /// Number of merge steps where the smallest R-gap was shared by several
  /// candidate pairs and the span-start tie-break decided. Exact rotation
  /// equivariance of the tree holds only when this is zero.
  std::size_t gap_tie_breaks = 0;
  std::optional<SolidBoundAudit> audit;
};

/// Builds the hierarchy: one leaf per L cell, then repeatedly merges the
/// adjacent pair (A left, B right) with A closed toward the right and B
/// closed toward the left, smallest R-gap first, ties broken by the left
/// solid's span start. Closure of a merged solid is recomputed on the merged
/// span. Requires at least one L and one R cell (throws
/// std::invalid_argument on uniform rings).
HierarchyReport build_solid_hierarchy(const Ring& config);

/// Checks span_length <= (3 k^alpha - 1) / 2 with k = minority_count for
/// every node of every root. Violations are returned as data, not errors.
SolidBoundAudit audit_solid_bound(const HierarchyReport& report,
                                  const AlphaConstant& alpha);

}  // namespace gkl
