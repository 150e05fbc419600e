#include "gkl/simulate.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace gkl {

SpaceTimeTrace record_trace(const Ring& start, std::size_t steps) {
  SpaceTimeTrace trace;
  trace.rows.reserve(steps + 1);
  trace.rows.push_back(start);
  for (std::size_t t = 0; t < steps; ++t) {
    trace.rows.push_back(trace.rows.back().step());
  }
  return trace;
}

const char* to_string(SimulationStatus status) {
  switch (status) {
    case SimulationStatus::UniformR: return "UniformR";
    case SimulationStatus::UniformL: return "UniformL";
    case SimulationStatus::CycleDetected: return "CycleDetected";
    case SimulationStatus::BudgetExhausted: return "BudgetExhausted";
  }
  return "?";
}

const char* to_string(ErosionStatus status) {
  switch (status) {
    case ErosionStatus::Eroded: return "Eroded";
    case ErosionStatus::WrongAbsorber: return "WrongAbsorber";
    case ErosionStatus::BudgetExhausted: return "BudgetExhausted";
  }
  return "?";
}

SimulationOutcome simulate(const Ring& start, std::int64_t max_steps) {
  if (max_steps < 0) throw std::invalid_argument("negative step budget");
  // hash -> indices into `visited`; equality is confirmed on the full ring,
  // so hash collisions cost a comparison, never a wrong answer.
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen;
  std::vector<Ring> visited;
  Ring current = start;
  std::int64_t t = 0;
  for (;;) {
    if (current.uniform(CellState::R)) {
      return {SimulationStatus::UniformR, t, std::nullopt, std::move(current)};
    }
    if (current.uniform(CellState::L)) {
      return {SimulationStatus::UniformL, t, std::nullopt, std::move(current)};
    }
    if (t == max_steps) {
      return {SimulationStatus::BudgetExhausted, t, std::nullopt,
              std::move(current)};
    }
    seen[current.hash()].push_back(visited.size());
    visited.push_back(std::move(current));
    current = visited.back().step();
    ++t;
    auto hit = seen.find(current.hash());
    if (hit != seen.end()) {
      for (std::size_t idx : hit->second) {
        if (visited[idx] == current) {
          std::int64_t entered = static_cast<std::int64_t>(idx);
          return {SimulationStatus::CycleDetected, t, t - entered,
                  std::move(current)};
        }
      }
    }
  }
}

ErosionResult erosion_time(const Ring& start, CellState majority,
                           std::int64_t max_steps) {
  if (max_steps < 0) throw std::invalid_argument("negative step budget");
  Ring current = start;
  std::int64_t t = 0;
  for (;;) {
    if (current.uniform(majority)) return {ErosionStatus::Eroded, t};
    if (current.uniform(opposite(majority))) {
      return {ErosionStatus::WrongAbsorber, t};
    }
    if (t == max_steps) return {ErosionStatus::BudgetExhausted, -1};
    current = current.step();
    ++t;
  }
}

std::vector<std::uint8_t> write_diagram(const SpaceTimeTrace& trace) {
  if (trace.rows.empty()) throw std::invalid_argument("empty trace");
  const std::size_t width = trace.rows.front().size();
  const std::size_t height = trace.rows.size();
  std::string header = "P4\n" + std::to_string(width) + " " +
                       std::to_string(height) + "\n";
  const std::size_t row_bytes = (width + 7) / 8;
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + row_bytes * height);
  for (const Ring& row : trace.rows) {
    for (std::size_t byte = 0; byte < row_bytes; ++byte) {
      std::uint8_t packed = 0;
      for (std::size_t bit = 0; bit < 8; ++bit) {
        std::size_t i = byte * 8 + bit;
        if (i >= width) break;
        if (row.at(static_cast<std::int64_t>(i)) == CellState::L) {
          packed |= static_cast<std::uint8_t>(0x80u >> bit);
        }
      }
      out.push_back(packed);
    }
  }
  return out;
}

}  // namespace gkl
