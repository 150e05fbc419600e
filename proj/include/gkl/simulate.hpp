#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gkl/ring.hpp"

namespace gkl {

/// Configurations over time; rows[0] is the initial ring and each later row
/// is one GKL step after the previous.
struct SpaceTimeTrace {
  std::vector<Ring> rows;
  std::size_t step_count() const { return rows.empty() ? 0 : rows.size() - 1; }
};

/// Trace of `steps` applications of the rule (steps + 1 rows).
SpaceTimeTrace record_trace(const Ring& start, std::size_t steps);

enum class SimulationStatus : std::uint8_t {
  UniformR,
  UniformL,
  CycleDetected,
  BudgetExhausted,
};

const char* to_string(SimulationStatus status);

struct SimulationOutcome {
  SimulationStatus status = SimulationStatus::BudgetExhausted;
  /// Steps applied when the run stopped. For UniformR/UniformL this is the
  /// first step index at which the ring is uniform.
  std::int64_t steps = 0;
  std::optional<std::int64_t> cycle_length;
  Ring final;
};

/// Steps until the ring is uniform (reporting which state), a previously
/// seen configuration repeats, or the budget runs out. Cycle detection keeps
/// every visited configuration, so memory grows with the step count.
SimulationOutcome simulate(const Ring& start, std::int64_t max_steps);

enum class ErosionStatus : std::uint8_t {
  Eroded,           // uniform in the requested majority state
  WrongAbsorber,    // uniform in the opposite state
  BudgetExhausted,
};

const char* to_string(ErosionStatus status);

struct ErosionResult {
  ErosionStatus status = ErosionStatus::BudgetExhausted;
  /// For Eroded: first t with row t uniform in the majority state.
  /// For WrongAbsorber: the step at which the wrong uniform state appeared.
  std::int64_t steps = -1;
  bool eroded() const { return status == ErosionStatus::Eroded; }
};

/// Smallest t <= max_steps with row t uniform in `majority`. Unlike
/// simulate(), keeps no history; memory stays constant.
ErosionResult erosion_time(const Ring& start, CellState majority,
                           std::int64_t max_steps);

/// Binary PBM ("P4") image of a trace: width n, height rows, top row the
/// initial configuration; bit 1 (black) = L, bit 0 (white) = R; each row
/// padded to a byte boundary. Throws std::invalid_argument on empty traces.
std::vector<std::uint8_t> write_diagram(const SpaceTimeTrace& trace);

}  // namespace gkl
