#include <doctest.h>

#include <random>
#include <vector>

#include "gkl/ring.hpp"
#include "gkl/simulate.hpp"
#include "../support/naive_rule.hpp"

using gkl::CellState;
using gkl::ErosionStatus;
using gkl::Ring;
using gkl::SimulationStatus;

TEST_CASE("record_trace counts rows") {
  auto trace = gkl::record_trace(Ring::parse(">>>><<>>>>"), 2);
  REQUIRE(trace.rows.size() == 3);
  CHECK(trace.step_count() == 2);
  CHECK(trace.rows[1].render() == ">>>>><>>>>");
  CHECK(trace.rows[2].render() == ">>>>>>>>>>");
}

TEST_CASE("simulate reaches the uniform absorbers") {
  auto r = gkl::simulate(Ring::parse(">>>><>>>>>"), 10);
  CHECK(r.status == SimulationStatus::UniformR);
  CHECK(r.steps == 1);
  CHECK_FALSE(r.cycle_length.has_value());
  CHECK(r.final.render() == ">>>>>>>>>>");

  auto l = gkl::simulate(Ring::parse("<<<<<"), 10);
  CHECK(l.status == SimulationStatus::UniformL);
  CHECK(l.steps == 0);
}

TEST_CASE("simulate detects short cycles") {
  auto two = gkl::simulate(Ring::parse("><"), 100);
  CHECK(two.status == SimulationStatus::CycleDetected);
  CHECK(two.steps == 2);
  CHECK(two.cycle_length == 2);

  // A non-uniform fixed point: reported as a length-1 cycle.
  auto fixed = gkl::simulate(Ring::parse("<<>>"), 100);
  CHECK(fixed.status == SimulationStatus::CycleDetected);
  CHECK(fixed.steps == 1);
  CHECK(fixed.cycle_length == 1);

  // n = 3 aliases the +-3 offsets onto the cell itself; "<>>" freezes.
  auto aliased = gkl::simulate(Ring::parse("<>>"), 100);
  CHECK(aliased.status == SimulationStatus::CycleDetected);
  CHECK(aliased.cycle_length == 1);
  CHECK(aliased.final.render() == "<>>");
}

TEST_CASE("simulate respects the budget") {
  auto r = gkl::simulate(Ring::parse("><"), 0);
  CHECK(r.status == SimulationStatus::BudgetExhausted);
  CHECK(r.steps == 0);
  CHECK_THROWS_AS(gkl::simulate(Ring::parse("><"), -1), std::invalid_argument);
}

TEST_CASE("erosion_time frozen example") {
  auto r = gkl::erosion_time(Ring::parse(">>>><<>>>>"), CellState::R, 10);
  CHECK(r.status == ErosionStatus::Eroded);
  CHECK(r.steps == 2);
  CHECK(r.eroded());
}

TEST_CASE("erosion_time flags the wrong absorber and empty budgets") {
  // Majority L ring asked to erode to R: it converges to L instead.
  auto wrong = gkl::erosion_time(Ring::parse(">><<<<<<"), CellState::R, 1000);
  CHECK(wrong.status == ErosionStatus::WrongAbsorber);
  CHECK(wrong.steps >= 1);

  auto out = gkl::erosion_time(Ring::parse("><"), CellState::R, 5);
  CHECK(out.status == ErosionStatus::BudgetExhausted);
  CHECK(out.steps == -1);
}

TEST_CASE("erosion_time agrees with simulate on random rings") {
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 400; ++it) {
    std::size_t n = 1 + rng() % 40;
    Ring ring = Ring::parse(naive::random_text(rng, n));
    auto sim = gkl::simulate(ring, 300);
    for (CellState target : {CellState::R, CellState::L}) {
      auto ero = gkl::erosion_time(ring, target, 300);
      bool sim_hits =
          (sim.status == SimulationStatus::UniformR && target == CellState::R) ||
          (sim.status == SimulationStatus::UniformL && target == CellState::L);
      if (sim_hits) {
        CHECK(ero.status == ErosionStatus::Eroded);
        CHECK(ero.steps == sim.steps);
      } else {
        CHECK(ero.status != ErosionStatus::Eroded);
      }
    }
  }
}

TEST_CASE("influence travels at most three cells per step") {
  // Two rings agreeing on a window around i must agree at i for as long as
  // the outside difference, moving 3 cells a step, cannot have arrived.
  std::mt19937_64 rng(5150);
  int cases = 0;
  while (cases < 10000) {
    std::size_t n = 40 + rng() % 60;
    int t = 1 + static_cast<int>(rng() % 5);
    if (n < 6 * static_cast<std::size_t>(t) + 1) continue;
    std::string a = naive::random_text(rng, n);
    std::string b = naive::random_text(rng, n);
    std::size_t i = rng() % n;
    for (int d = -3 * t; d <= 3 * t; ++d) {
      std::size_t j = static_cast<std::size_t>(
          (static_cast<std::int64_t>(i) + d +
           static_cast<std::int64_t>(4 * n)) %
          static_cast<std::int64_t>(n));
      b[j] = a[j];
    }
    Ring ra = Ring::parse(a);
    Ring rb = Ring::parse(b);
    for (int s = 0; s < t; ++s) {
      ra = ra.step();
      rb = rb.step();
    }
    CHECK(ra.at(static_cast<std::int64_t>(i)) ==
          rb.at(static_cast<std::int64_t>(i)));
    ++cases;
  }
}

TEST_CASE("diagram bytes are frozen") {
  auto trace = gkl::record_trace(Ring::parse(">>>><<>>>>"), 2);
  std::vector<std::uint8_t> expected = {'P', '4', '\n', '1', '0', ' ', '3',
                                        '\n', 12, 0, 4, 0, 0, 0};
  CHECK(gkl::write_diagram(trace) == expected);

  auto tiny = gkl::record_trace(Ring::parse("><"), 0);
  std::vector<std::uint8_t> tiny_expected = {'P', '4', '\n', '2', ' ', '1',
                                             '\n', 64};
  CHECK(gkl::write_diagram(tiny) == tiny_expected);
}

TEST_CASE("diagram rejects empty traces") {
  gkl::SpaceTimeTrace empty;
  CHECK_THROWS_AS(gkl::write_diagram(empty), std::invalid_argument);
}
