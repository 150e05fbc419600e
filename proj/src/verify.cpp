#include "gkl/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

namespace gkl {

namespace {

/// Runs fn(0..count-1) across `jobs` threads, work-stealing by atomic index.
/// The first exception thrown by any worker is rethrown after the join.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, const Fn& fn) {
  const int workers = std::max(1, jobs);
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not_applicable";
  }
  return "?";
}

const char* to_string(RecordOutcome outcome) {
  switch (outcome) {
    case RecordOutcome::Eroded: return "eroded";
    case RecordOutcome::WrongAbsorber: return "wrong_absorber";
    case RecordOutcome::BudgetExhausted: return "budget_exhausted";
    case RecordOutcome::Skipped: return "skipped";
  }
  return "?";
}

ErosionRecord check_configuration(const Ring& config,
                                  const AlphaConstant& alpha) {
  ErosionRecord rec;
  rec.ring_text = config.render();
  rec.n = config.size();
  rec.small_ring = rec.n < 7;
  const std::size_t l = config.count(CellState::L);
  const std::size_t r = rec.n - l;
  if (l == r) {
    // Tied density: no majority, the theorem says nothing.
    rec.k = l;
    rec.bound = bound_for(rec.k, alpha);
    return rec;
  }
  const CellState majority = l < r ? CellState::R : CellState::L;
  rec.k = std::min(l, r);
  rec.bound = bound_for(rec.k, alpha);
  rec.applicable = static_cast<double>(rec.n) > rec.bound;
  const std::int64_t budget = static_cast<std::int64_t>(rec.bound);
  ErosionResult result = erosion_time(config, majority, budget);
  switch (result.status) {
    case ErosionStatus::Eroded:
      rec.outcome = RecordOutcome::Eroded;
      rec.erosion_steps = result.steps;
      break;
    case ErosionStatus::WrongAbsorber:
      rec.outcome = RecordOutcome::WrongAbsorber;
      break;
    case ErosionStatus::BudgetExhausted:
      rec.outcome = RecordOutcome::BudgetExhausted;
      break;
  }
  if (!rec.applicable) {
    rec.verdict = Verdict::NotApplicable;
    return rec;
  }
  if (rec.outcome == RecordOutcome::Eroded) {
    rec.verdict = Verdict::Pass;
    return rec;
  }
  rec.verdict = Verdict::Fail;
  if (rec.outcome == RecordOutcome::BudgetExhausted) {
    const std::int64_t ceil_budget =
        static_cast<std::int64_t>(std::ceil(rec.bound));
    if (ceil_budget > budget) {
      ErosionResult retry = erosion_time(config, majority, ceil_budget);
      if (retry.eroded()) {
        rec.ceil_pass = true;
        rec.erosion_steps = retry.steps;
      }
    }
  }
  return rec;
}

namespace {

struct CampaignItem {
  Ring ring;
  std::size_t k = 0;
};

struct PlanEntry {
  std::size_t n = 0;
  bool exhaustive = false;
  std::size_t samples = 0;
};

std::vector<PlanEntry> plan_for_k(const CampaignSpec& spec, std::size_t k,
                                  const AlphaConstant& alpha) {
  std::vector<PlanEntry> plan;
  auto add_unique = [&plan](PlanEntry entry) {
    for (const PlanEntry& e : plan) {
      if (e.n == entry.n) return;
    }
    plan.push_back(entry);
  };
  if (spec.n_range) {
    for (std::size_t n = spec.n_range->first; n <= spec.n_range->second; ++n) {
      if (n == 0 || n < k) continue;
      bool exhaustive = spec.mode == SourceMode::ExhaustiveUpToRotation;
      add_unique({n, exhaustive, exhaustive ? 0 : spec.samples});
    }
    return plan;
  }
  const double bound = bound_for(k, alpha);
  const std::size_t floor_bound = static_cast<std::size_t>(bound);
  if (spec.mode == SourceMode::ExhaustiveUpToRotation) {
    for (std::size_t n = floor_bound + 1; n <= floor_bound + spec.window; ++n) {
      add_unique({n, true, 0});
    }
  } else {
    add_unique({floor_bound + 1, false, spec.samples});
  }
  if (spec.spot_checks) {
    for (double factor : {2.0, 10.0}) {
      std::size_t n = static_cast<std::size_t>(std::ceil(factor * bound));
      if (spec.mode == SourceMode::ExhaustiveUpToRotation &&
          n > floor_bound && n <= floor_bound + spec.window) {
        continue;  // already covered exhaustively
      }
      add_unique({n, false, spec.spot_samples});
    }
  }
  return plan;
}

}  // namespace

CampaignReport run_campaign(const CampaignSpec& spec,
                            const AlphaConstant& alpha) {
  CampaignReport report;
  report.spec = spec;
  std::vector<CampaignItem> items;
  for (std::size_t k : spec.ks) {
    for (const PlanEntry& entry : plan_for_k(spec, k, alpha)) {
      if (entry.exhaustive) {
        std::uint64_t classes = 0;
        try {
          classes = necklace_count(entry.n, k);
        } catch (const std::overflow_error&) {
          classes = std::numeric_limits<std::uint64_t>::max();
        }
        if (classes > spec.enumeration_cap) {
          throw EnumerationCapExceeded(
              "exhaustive enumeration for n=" + std::to_string(entry.n) +
              ", k=" + std::to_string(k) + " has " +
              (classes == std::numeric_limits<std::uint64_t>::max()
                   ? std::string("more than 2^64")
                   : std::to_string(classes)) +
              " rotation classes (cap " + std::to_string(spec.enumeration_cap) +
              "); sample instead or raise the cap");
        }
        NecklaceEnumerator necklaces(entry.n, k);
        while (auto ring = necklaces.next()) {
          items.push_back({std::move(*ring), k});
        }
      } else {
        for (std::size_t s = 0; s < entry.samples; ++s) {
          items.push_back(
              {random_configuration(entry.n, k,
                                    derive_seed(spec.seed, k, entry.n, s)),
               k});
        }
      }
    }
  }

  std::vector<ErosionRecord> records(items.size());
  parallel_for(items.size(), spec.jobs, [&](std::size_t i) {
    records[i] = check_configuration(items[i].ring, alpha);
  });

  std::map<std::size_t, std::size_t> k_slot;
  for (std::size_t k : spec.ks) {
    if (k_slot.emplace(k, report.per_k.size()).second) {
      CampaignKStats stats;
      stats.k = k;
      report.per_k.push_back(stats);
    }
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    ErosionRecord& rec = records[i];
    CampaignKStats& stats = report.per_k[k_slot.at(items[i].k)];
    ++stats.checked;
    ++report.total_checked;
    if (rec.small_ring) ++report.small_ring_count;
    switch (rec.verdict) {
      case Verdict::Pass:
        ++stats.passed;
        if (rec.erosion_steps && *rec.erosion_steps > stats.worst_steps) {
          stats.worst_steps = *rec.erosion_steps;
          stats.worst_ring = rec.ring_text;
        }
        break;
      case Verdict::Fail:
        ++stats.failed;
        report.failures.push_back(rec);
        break;
      case Verdict::NotApplicable:
        ++stats.not_applicable;
        break;
    }
  }
  if (spec.keep_records) {
    report.records = std::move(records);
  }
  return report;
}

KillingVerdict verify_killing_lemma(const KillingScenario& scenario) {
  KillingVerdict verdict;
  verdict.segment = scenario.segment;
  verdict.pad = scenario.pad;
  verdict.deadline = scenario.deadline;
  Ring current = scenario.ring;
  const std::size_t n = current.size();
  std::int64_t prev_min = -1;
  std::int64_t prev_max = -1;
  for (std::int64_t t = 0;; ++t) {
    if (current.uniform(CellState::R)) {
      verdict.steps_to_uniform = t;
      verdict.erased = t <= scenario.deadline;
      break;
    }
    // Plain (unwrapped) extremes of the L population. The flanking R blocks
    // are wide enough that no influence wraps within the deadline, so these
    // are meaningful positions, not cyclic artifacts.
    std::int64_t lo = -1;
    std::int64_t hi = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (current.at(static_cast<std::int64_t>(i)) == CellState::L) {
        if (lo < 0) lo = static_cast<std::int64_t>(i);
        hi = static_cast<std::int64_t>(i);
      }
    }
    if (t > 0) {
      if (hi > prev_max) verdict.rightmost_monotone = false;
      if (lo < prev_min - 1) verdict.leftmost_speed_ok = false;
    }
    prev_min = lo;
    prev_max = hi;
    if (t == scenario.deadline) break;
    current = current.step();
  }
  return verdict;
}

FibonacciKillVerdict verify_fibonacci_kill(int i) {
  const FibonacciString fs = fibonacci_string(i);
  FibonacciKillVerdict verdict;
  verdict.index = i;
  verdict.n = fs.length;
  verdict.minority_count = fs.minority_count;
  verdict.strict_minority = 2 * fs.minority_count < fs.length;
  verdict.budget = 4 * static_cast<std::int64_t>(fs.length) *
                   static_cast<std::int64_t>(fs.length);
  const Ring ring = Ring::parse(fs.text);
  const ErosionResult result = erosion_time(ring, CellState::L, verdict.budget);
  verdict.reached_uniform_l = result.eroded();
  verdict.steps = result.steps;
  return verdict;
}

InductionCheck check_induction_inequality(double x,
                                          std::span<const double> t_grid) {
  InductionCheck check;
  auto g = [x](double t) {
    return 1.0 + std::pow(t, x) - std::pow(1.0 + t + std::min(2.0, t), x);
  };
  check.g_at_2 = g(2.0);
  check.min_value = std::numeric_limits<double>::infinity();
  check.min_t = 2.0;
  for (double t : t_grid) {
    double value = g(t);
    if (value < check.min_value) {
      check.min_value = value;
      check.min_t = t;
    }
  }
  if (t_grid.empty()) check.min_value = check.g_at_2;
  check.passed = check.min_value >= -check.epsilon &&
                 std::abs(check.g_at_2) <= check.epsilon;
  return check;
}

std::vector<double> induction_grid() {
  std::vector<double> grid;
  grid.reserve(901);
  for (int i = 100; i <= 1000; ++i) grid.push_back(i / 100.0);
  return grid;
}

namespace {

struct LogFit {
  double slope = 0.0;
  double residual = 0.0;
};

/// Least-squares slope of log(y) against log(x); points with x or y below 1
/// are dropped. Fewer than two usable points yields the zero fit.
LogFit fit_loglog(const std::vector<std::pair<double, double>>& points) {
  std::vector<std::pair<double, double>> logs;
  for (auto [x, y] : points) {
    if (x >= 1.0 && y >= 1.0) logs.emplace_back(std::log(x), std::log(y));
  }
  LogFit fit;
  if (logs.size() < 2) return fit;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [lx, ly] : logs) {
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double m = static_cast<double>(logs.size());
  const double denom = m * sxx - sx * sx;
  if (denom == 0.0) return fit;
  fit.slope = (m * sxy - sx * sy) / denom;
  const double intercept = (sy - fit.slope * sx) / m;
  double ss = 0;
  for (auto [lx, ly] : logs) {
    double e = ly - (intercept + fit.slope * lx);
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / m);
  return fit;
}

}  // namespace

TightnessProfile tightness_profile(std::span<const std::size_t> ks,
                                   std::size_t samples, std::uint64_t seed,
                                   const AlphaConstant& alpha, int jobs) {
  TightnessProfile profile;
  profile.alpha_reference = alpha.alpha;
  profile.golden_reference = 1.0 / std::log2((1.0 + std::sqrt(5.0)) / 2.0);
  profile.seed = seed;
  profile.samples_per_n = samples;

  struct Unit {
    std::size_t k = 0;
    std::size_t n = 0;
  };
  struct UnitResult {
    std::int64_t worst = -1;
    std::size_t overrun_n = 0;
    std::size_t count = 0;
  };
  std::vector<Unit> units;
  for (std::size_t k : ks) {
    const std::size_t n_hi =
        static_cast<std::size_t>(bound_for(k, alpha)) + 16;
    for (std::size_t n = 2 * k + 1; n <= n_hi; ++n) units.push_back({k, n});
  }
  std::vector<UnitResult> unit_results(units.size());
  parallel_for(units.size(), jobs, [&](std::size_t u) {
    const auto [k, n] = units[u];
    UnitResult out;
    const std::int64_t budget =
        4 * static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n);
    for (std::size_t s = 0; s < samples; ++s) {
      const Ring config =
          random_configuration(n, k, derive_seed(seed, k, n, s));
      const ErosionResult result =
          erosion_time(config, CellState::R, budget);
      ++out.count;
      if (result.eroded()) {
        if (result.steps > out.worst) out.worst = result.steps;
      } else if (result.status == ErosionStatus::WrongAbsorber) {
        out.overrun_n = n;
      }
    }
    unit_results[u] = out;
  });

  std::map<std::size_t, std::size_t> row_slot;
  for (std::size_t k : ks) {
    if (row_slot.emplace(k, profile.rows.size()).second) {
      TightnessRow row;
      row.k = k;
      profile.rows.push_back(row);
    }
  }
  for (std::size_t u = 0; u < units.size(); ++u) {
    TightnessRow& row = profile.rows[row_slot.at(units[u].k)];
    const UnitResult& out = unit_results[u];
    row.samples += out.count;
    if (out.worst > row.worst_steps) {
      row.worst_steps = out.worst;
      row.worst_steps_n = units[u].n;
    }
    row.largest_overrun_n = std::max(row.largest_overrun_n, out.overrun_n);
  }

  // Family members whose minority count matches a requested k join the same
  // rows; their erosion target is whichever state holds the majority.
  for (int i = 0; i <= 16; ++i) {
    const FibonacciString fs = fibonacci_string(i);
    const std::size_t l = fs.minority_count;
    const std::size_t r = fs.length - l;
    if (l == r || std::min(l, r) == 0) continue;
    const std::size_t k_eff = std::min(l, r);
    auto slot = row_slot.find(k_eff);
    if (slot == row_slot.end()) continue;
    TightnessRow& row = profile.rows[slot->second];
    const Ring ring = Ring::parse(fs.text);
    const std::int64_t budget = 4 * static_cast<std::int64_t>(fs.length) *
                                static_cast<std::int64_t>(fs.length);
    const CellState majority = l < r ? CellState::R : CellState::L;
    const ErosionResult result = erosion_time(ring, majority, budget);
    ++row.samples;
    if (result.eroded()) {
      if (result.steps > row.worst_steps) {
        row.worst_steps = result.steps;
        row.worst_steps_n = fs.length;
      }
    } else if (result.status == ErosionStatus::WrongAbsorber) {
      row.largest_overrun_n = std::max(row.largest_overrun_n, fs.length);
    }
  }

  std::vector<std::pair<double, double>> t_points;
  std::vector<std::pair<double, double>> n_points;
  for (const TightnessRow& row : profile.rows) {
    if (row.worst_steps >= 1) {
      t_points.emplace_back(static_cast<double>(row.k),
                            static_cast<double>(row.worst_steps));
    }
    if (row.largest_overrun_n >= 1) {
      n_points.emplace_back(static_cast<double>(row.k),
                            static_cast<double>(row.largest_overrun_n));
    }
  }
  const LogFit t_fit = fit_loglog(t_points);
  const LogFit n_fit = fit_loglog(n_points);
  profile.t_slope = t_fit.slope;
  profile.t_residual = t_fit.residual;
  profile.n_slope = n_fit.slope;
  profile.n_residual = n_fit.residual;
  return profile;
}

SolidsAuditReport run_solids_audit(const SolidsAuditSpec& spec,
                                   const AlphaConstant& alpha) {
  if (spec.n_max < 3) throw std::invalid_argument("n_max must be at least 3");
  SolidsAuditReport report;
  report.spec = spec;
  const std::size_t fib_items =
      spec.fibonacci_max >= 0 ? static_cast<std::size_t>(spec.fibonacci_max) + 1
                              : 0;
  struct ItemOut {
    std::size_t nodes = 0;
    std::size_t ties = 0;
    bool degenerate = false;
    std::optional<SolidsAuditFailure> failure;
  };
  std::vector<ItemOut> outs(spec.rings + fib_items);
  parallel_for(outs.size(), spec.jobs, [&](std::size_t idx) {
    Ring ring;
    if (idx < spec.rings) {
      SplitMix64 gen(derive_seed(spec.seed, 1, idx));
      const std::size_t n = 3 + gen.below(spec.n_max - 2);
      const std::size_t k = 1 + gen.below(n / 3);
      ring = random_configuration(n, k, gen.next());
    } else {
      ring = Ring::parse(
          fibonacci_string(static_cast<int>(idx - spec.rings)).text);
    }
    ItemOut out;
    if (ring.is_uniform()) {
      out.degenerate = true;
    } else {
      const HierarchyReport hierarchy = build_solid_hierarchy(ring);
      const SolidBoundAudit audit = audit_solid_bound(hierarchy, alpha);
      out.nodes = audit.nodes_checked;
      out.ties = hierarchy.gap_tie_breaks;
      if (!audit.ok()) {
        out.failure = SolidsAuditFailure{ring.render(), audit.violations};
      }
    }
    outs[idx] = out;
  });
  for (ItemOut& out : outs) {
    if (out.degenerate) {
      ++report.degenerate_skipped;
      continue;
    }
    ++report.rings_checked;
    report.nodes_checked += out.nodes;
    report.gap_tie_breaks += out.ties;
    if (out.failure) report.failures.push_back(std::move(*out.failure));
  }
  return report;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c) {
  std::uint64_t h = base;
  for (std::uint64_t v : {a, b, c}) {
    SplitMix64 mix(h ^ (v + 0x9E3779B97F4A7C15ull));
    h = mix.next();
  }
  return h;
}

}  // namespace gkl
