#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gkl/ring.hpp"

namespace gkl {

/// Fixed default seed for every sampled campaign; never wall-clock.
constexpr std::uint64_t kDefaultSeed = 42;

/// SplitMix64: the campaign generator. Fully specified so seeded outputs are
/// reproducible: state advances by 0x9E3779B97F4A7C15 and the output is the
/// finalized previous state (shift-xor-multiply, constants below).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, bound) by rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Member of the adversarial family S_0 = S_1 = "<<<",
/// S_{i+2} = S_i + ">"^max(0, |S_i|-4) + S_{i+1}. The repetition exponent is
/// clamped at zero, which only affects i = 2 and 3.
struct FibonacciString {
  int index = 0;
  std::string text;
  std::size_t length = 0;
  std::size_t minority_count = 0;  // number of L cells, equal to 3*F_index
};

FibonacciString fibonacci_string(int i);

/// True iff text begins and ends with '<' and contains no run of three or
/// more '>' cells.
bool is_valid_segment(std::string_view text);

/// Segment S flanked by R intervals sized to kill it: the ring is
/// R^(2|S|+1) + S + R^(|S|+2) + R^pad and the deadline is 2|S| steps.
struct KillingScenario {
  std::string segment;
  std::size_t pad = 0;
  Ring ring;
  std::int64_t deadline = 0;
};

/// Throws std::invalid_argument unless segment_text is a valid segment.
KillingScenario killing_scenario(std::string_view segment_text,
                                 std::size_t pad);

/// Default pad = 3 * deadline, so wrap-around influence (3 cells/step)
/// cannot reach the segment within the deadline.
constexpr std::size_t default_killing_pad(std::size_t segment_length) {
  return 6 * segment_length;
}

/// All valid segments with 1 <= |S| <= max_len, shortest first, interiors in
/// lexicographic order ('<' before '>').
std::vector<std::string> enumerate_segment_texts(std::size_t max_len);

/// Uniformly random ring with exactly k L cells among n, deterministic for a
/// given seed (SplitMix64 + partial Fisher-Yates with rejection sampling).
/// Throws std::invalid_argument if k > n.
Ring random_configuration(std::size_t n, std::size_t k, std::uint64_t seed);

/// Exact number of rotation classes of n-cell rings with k L cells:
/// (1/n) * sum over d | gcd(n,k) of phi(d) * C(n/d, k/d).
/// Throws std::overflow_error when the count exceeds 64 bits.
std::uint64_t necklace_count(std::size_t n, std::size_t k);

/// Streams one representative per rotation class: the lexicographically
/// smallest rotation with '<' < '>', emitted in increasing string order.
class NecklaceEnumerator {
 public:
  NecklaceEnumerator(std::size_t n, std::size_t k);
  std::optional<Ring> next();

 private:
  std::size_t n_;
  std::size_t k_;
  bool done_ = false;
  bool first_ = true;
  std::vector<std::size_t> positions_;  // sorted L positions
};

enum class SourceMode : std::uint8_t { RandomSample, ExhaustiveUpToRotation };

/// Parameters of a configuration source: every produced ring has exactly k
/// cells in state L out of n.
struct ConfigurationSource {
  SourceMode mode = SourceMode::ExhaustiveUpToRotation;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t seed = kDefaultSeed;  // sampling mode only
  std::size_t samples = 0;            // sampling mode only
};

}  // namespace gkl
