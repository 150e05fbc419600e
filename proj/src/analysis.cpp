#include "gkl/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkl {

namespace {

std::vector<std::size_t> l_positions(const Ring& config) {
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (config.at(static_cast<std::int64_t>(i)) == CellState::L) {
      positions.push_back(i);
    }
  }
  return positions;
}

}  // namespace

std::vector<Interval> find_intervals(const Ring& config) {
  const std::size_t n = config.size();
  if (config.uniform(CellState::R)) return {{0, n, true}};
  const std::vector<std::size_t> ls = l_positions(config);
  std::vector<Interval> out;
  const std::size_t m = ls.size();
  for (std::size_t j = 0; j < m; ++j) {
    std::size_t p = ls[j];
    std::size_t q = ls[(j + 1) % m];
    // R cells strictly between consecutive L cells, clockwise.
    std::size_t len = (q + n - p - 1) % n;
    if (len >= 3) out.push_back({(p + 1) % n, len, false});
  }
  std::sort(out.begin(), out.end(),
            [](const Interval& a, const Interval& b) { return a.start < b.start; });
  return out;
}

std::vector<Segment> find_segments(const Ring& config) {
  const std::size_t n = config.size();
  if (config.uniform(CellState::R)) return {};
  const std::vector<Interval> intervals = find_intervals(config);
  if (intervals.empty()) {
    std::size_t anchor = 0;
    while (config.at(static_cast<std::int64_t>(anchor)) != CellState::L) {
      ++anchor;
    }
    return {{anchor, n, false, false, true}};
  }
  std::vector<Segment> out;
  const std::size_t m = intervals.size();
  for (std::size_t j = 0; j < m; ++j) {
    const Interval& cur = intervals[j];
    const Interval& nxt = intervals[(j + 1) % m];
    std::size_t start = (cur.start + cur.length) % n;
    std::size_t len = (nxt.start + n - start) % n;
    Closure cl = closure_status(start, len, config);
    out.push_back({start, len, cl.left, cl.right, false});
  }
  std::sort(out.begin(), out.end(),
            [](const Segment& a, const Segment& b) { return a.start < b.start; });
  return out;
}

Closure closure_status(std::size_t start, std::size_t length,
                       const Ring& config) {
  const std::size_t n = config.size();
  if (length == 0 || length >= n) {
    throw std::invalid_argument("span must be a proper nonempty arc");
  }
  const std::size_t outside = n - length;
  Closure cl;
  const std::size_t right_window = std::min(length + 1, outside);
  for (std::size_t d = 1; d <= right_window; ++d) {
    std::int64_t i = static_cast<std::int64_t>(start + length + d - 1);
    if (config.at(i) == CellState::L) {
      cl.right = true;
      break;
    }
  }
  const std::size_t left_window = std::min(2 * length, outside);
  for (std::size_t d = 1; d <= left_window; ++d) {
    std::int64_t i = static_cast<std::int64_t>(start) - static_cast<std::int64_t>(d);
    if (config.at(i) == CellState::L) {
      cl.left = true;
      break;
    }
  }
  return cl;
}

HierarchyReport build_solid_hierarchy(const Ring& config) {
  const std::size_t n = config.size();
  if (n == 0 || config.is_uniform()) {
    throw std::invalid_argument("uniform ring has no solid hierarchy");
  }
  std::vector<std::unique_ptr<SolidNode>> solids;
  for (std::size_t i : l_positions(config)) {
    auto leaf = std::make_unique<SolidNode>();
    leaf->span_start = i;
    leaf->span_length = 1;
    leaf->minority_count = 1;
    Closure cl = closure_status(i, 1, config);
    leaf->closed_left = cl.left;
    leaf->closed_right = cl.right;
    solids.push_back(std::move(leaf));
  }
  HierarchyReport report;
  while (solids.size() >= 2) {
    const std::size_t m = solids.size();
    std::size_t best = m;
    std::size_t best_gap = 0;
    std::size_t ties_at_best = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const SolidNode& a = *solids[i];
      const SolidNode& b = *solids[(i + 1) % m];
      if (!(a.closed_right && b.closed_left)) continue;
      std::size_t a_end = (a.span_start + a.span_length) % n;
      std::size_t gap = (b.span_start + n - a_end) % n;
      if (best == m || gap < best_gap) {
        best = i;
        best_gap = gap;
        ties_at_best = 1;
      } else if (gap == best_gap) {
        ++ties_at_best;
        if (a.span_start < solids[best]->span_start) best = i;
      }
    }
    if (best == m) break;  // nothing left to merge
    if (ties_at_best > 1) ++report.gap_tie_breaks;
    std::size_t j = (best + 1) % m;
    auto merged = std::make_unique<SolidNode>();
    {
      const SolidNode& a = *solids[best];
      const SolidNode& b = *solids[j];
      merged->span_start = a.span_start;
      merged->span_length = a.span_length + best_gap + b.span_length;
      merged->minority_count = a.minority_count + b.minority_count;
      merged->gap_between_children = best_gap;
      if (merged->span_length < n) {
        Closure cl = closure_status(merged->span_start, merged->span_length, config);
        merged->closed_left = cl.left;
        merged->closed_right = cl.right;
      }
    }
    merged->left = std::move(solids[best]);
    merged->right = std::move(solids[j]);
    solids[best] = std::move(merged);
    solids.erase(solids.begin() + static_cast<std::ptrdiff_t>(j));
  }
  std::sort(solids.begin(), solids.end(),
            [](const std::unique_ptr<SolidNode>& a,
               const std::unique_ptr<SolidNode>& b) {
              return a->span_start < b->span_start;
            });
  report.roots = std::move(solids);
  return report;
}

namespace {

void audit_node(const SolidNode& node, const AlphaConstant& alpha,
                SolidBoundAudit& audit) {
  ++audit.nodes_checked;
  double limit = (bound_for(node.minority_count, alpha) - 1.0) / 2.0;
  if (static_cast<double>(node.span_length) > limit) {
    audit.violations.push_back(
        {node.span_start, node.span_length, node.minority_count, limit});
  }
  if (node.left) audit_node(*node.left, alpha, audit);
  if (node.right) audit_node(*node.right, alpha, audit);
}

}  // namespace

SolidBoundAudit audit_solid_bound(const HierarchyReport& report,
                                  const AlphaConstant& alpha) {
  SolidBoundAudit audit;
  for (const auto& root : report.roots) audit_node(*root, alpha, audit);
  return audit;
}

}  // namespace gkl
