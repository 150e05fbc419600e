#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gkl/alpha.hpp"
#include "gkl/analysis.hpp"
#include "gkl/constructions.hpp"
#include "gkl/ring.hpp"
#include "gkl/simulate.hpp"

namespace gkl {

enum class Verdict : std::uint8_t { Pass, Fail, NotApplicable };

const char* to_string(Verdict verdict);

enum class RecordOutcome : std::uint8_t {
  Eroded,
  WrongAbsorber,
  BudgetExhausted,
  Skipped,  // tied density: no majority to erode to
};

const char* to_string(RecordOutcome outcome);

/// Verdict for one configuration against the erosion bound. k is the count
/// of the less frequent state; the bound is 3 k^alpha and the theorem applies
/// when n > bound. The step budget is floor(bound).
struct ErosionRecord {
  std::string ring_text;
  std::size_t n = 0;
  std::size_t k = 0;
  double bound = 0.0;
  bool applicable = false;
  bool small_ring = false;  // n < 7: neighbor offsets alias modulo n
  RecordOutcome outcome = RecordOutcome::Skipped;
  std::optional<std::int64_t> erosion_steps;
  /// Set when the run misses the floor(bound) budget by exactly the step a
  /// ceil reading would allow; surfaces the floor-vs-ceil convention.
  bool ceil_pass = false;
  Verdict verdict = Verdict::NotApplicable;
};

ErosionRecord check_configuration(const Ring& config,
                                  const AlphaConstant& alpha);

/// Campaign over the theorem's hypothesis family. In exhaustive mode every
/// rotation class with the requested (n, k) is checked; in sampled mode
/// `samples` seeded random configurations per (n, k). Without an explicit
/// n range the default policy is n in (floor(bound), floor(bound) + window]
/// exhaustively, plus sampled spot checks at ceil(2*bound) and
/// ceil(10*bound).
struct CampaignSpec {
  SourceMode mode = SourceMode::ExhaustiveUpToRotation;
  std::vector<std::size_t> ks;
  std::optional<std::pair<std::size_t, std::size_t>> n_range;  // inclusive
  std::size_t window = 16;
  bool spot_checks = true;       // default n policy only
  std::size_t samples = 10000;   // per (k, n) in sampled mode
  std::size_t spot_samples = 1000;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t enumeration_cap = 2'000'000;
  int jobs = 1;
  bool keep_records = true;  // retain every record (needed for CSV output)
};

struct CampaignKStats {
  std::size_t k = 0;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t not_applicable = 0;
  std::int64_t worst_steps = -1;  // max erosion time among applicable passes
  std::string worst_ring;
};

struct CampaignReport {
  CampaignSpec spec;
  std::vector<CampaignKStats> per_k;
  std::vector<ErosionRecord> failures;
  std::vector<ErosionRecord> records;  // all records, generation order
  std::size_t total_checked = 0;
  std::size_t small_ring_count = 0;
  bool all_pass() const { return failures.empty(); }
};

/// Thrown when an exhaustive campaign would enumerate more classes than the
/// configured cap; the caller should switch to sampling.
class EnumerationCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CampaignReport run_campaign(const CampaignSpec& spec,
                            const AlphaConstant& alpha);

/// Killing-lemma check: the scenario ring is stepped for exactly 2|S| steps
/// and must be uniform R at the deadline. Diagnostics track the rightmost L
/// index (must never move right) and the leftmost L index (moves left at
/// most one cell per step).
struct KillingVerdict {
  std::string segment;
  std::size_t pad = 0;
  std::int64_t deadline = 0;
  bool erased = false;
  std::optional<std::int64_t> steps_to_uniform;
  bool rightmost_monotone = true;
  bool leftmost_speed_ok = true;
  bool pass() const { return erased; }
};

KillingVerdict verify_killing_lemma(const KillingScenario& scenario);

/// Ring of exactly S_i must reach uniform L within 4 |S_i|^2 steps.
struct FibonacciKillVerdict {
  int index = 0;
  std::size_t n = 0;
  std::size_t minority_count = 0;  // L cells
  bool strict_minority = false;    // L count < R count
  std::int64_t budget = 0;
  bool reached_uniform_l = false;
  std::int64_t steps = -1;
  bool pass() const { return reached_uniform_l; }
};

FibonacciKillVerdict verify_fibonacci_kill(int i);

/// g(t) = 1 + t^x - (1 + t + min(2, t))^x must stay >= -epsilon on the grid
/// and vanish at t = 2 (where 1 + 2^x = 5^x by the defining equation).
struct InductionCheck {
  double epsilon = 1e-9;
  double g_at_2 = 0.0;
  double min_value = 0.0;
  double min_t = 0.0;
  bool passed = false;
};

InductionCheck check_induction_inequality(double x,
                                          std::span<const double> t_grid);

/// The canonical grid t = 1.00, 1.01, ..., 10.00.
std::vector<double> induction_grid();

/// Per-k worst case data: the longest observed erosion and the largest ring
/// a k-minority overran (ended uniform in the minority state).
struct TightnessRow {
  std::size_t k = 0;
  std::int64_t worst_steps = 0;
  std::size_t worst_steps_n = 0;
  std::size_t largest_overrun_n = 0;  // 0 when no overrun was seen
  std::size_t samples = 0;
};

struct TightnessProfile {
  std::vector<TightnessRow> rows;
  double t_slope = 0.0;  // log worst_steps vs log k, least squares
  double t_residual = 0.0;
  double n_slope = 0.0;  // log largest_overrun_n vs log k
  double n_residual = 0.0;
  double alpha_reference = 0.0;   // the solved erosion exponent
  double golden_reference = 0.0;  // 1 / log2(golden ratio)
  std::uint64_t seed = 0;
  std::size_t samples_per_n = 0;
};

/// Searches, per k, seeded random configurations with n from 2k+1 up to
/// floor(3 k^alpha) + 16 (plus family members of matching minority count)
/// for worst erosion times and overruns, then fits log-log slopes.
/// Report only; nothing is asserted against the references.
TightnessProfile tightness_profile(std::span<const std::size_t> ks,
                                   std::size_t samples, std::uint64_t seed,
                                   const AlphaConstant& alpha, int jobs = 1);

/// Solid-bound audit over random rings (n uniform in [3, n_max], k uniform
/// in [1, floor(n/3)]) plus the adversarial family members with index up to
/// fibonacci_max. Uniform rings have no hierarchy and count as degenerate.
struct SolidsAuditSpec {
  std::size_t rings = 10000;
  std::size_t n_max = 256;
  int fibonacci_max = 10;
  std::uint64_t seed = kDefaultSeed;
  int jobs = 1;
};

struct SolidsAuditFailure {
  std::string ring_text;
  std::vector<BoundViolation> violations;
};

struct SolidsAuditReport {
  SolidsAuditSpec spec;
  std::size_t rings_checked = 0;
  std::size_t nodes_checked = 0;
  std::size_t degenerate_skipped = 0;
  std::size_t gap_tie_breaks = 0;
  std::vector<SolidsAuditFailure> failures;
  bool all_pass() const { return failures.empty(); }
};

SolidsAuditReport run_solids_audit(const SolidsAuditSpec& spec,
                                   const AlphaConstant& alpha);

/// Per-item seed for campaigns: SplitMix64 finalizer chained over the base
/// seed and up to three coordinates, so work items draw independent streams
/// in any processing order.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                          std::uint64_t b = 0, std::uint64_t c = 0);

}  // namespace gkl
