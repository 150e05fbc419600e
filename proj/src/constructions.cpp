#include "gkl/constructions.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace gkl {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bound must be positive");
  // Reject the incomplete top interval so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  std::uint64_t value = next();
  while (value < threshold) value = next();
  return value % bound;
}

FibonacciString fibonacci_string(int i) {
  if (i < 0) throw std::invalid_argument("family index must be nonnegative");
  std::string prev = "<<<";
  std::string cur = "<<<";
  for (int j = 2; j <= i; ++j) {
    std::size_t reps = prev.size() > 4 ? prev.size() - 4 : 0;
    std::string text = prev + std::string(reps, '>') + cur;
    prev = std::move(cur);
    cur = std::move(text);
  }
  const std::string& text = (i == 0) ? prev : cur;
  FibonacciString fs;
  fs.index = i;
  fs.text = text;
  fs.length = text.size();
  fs.minority_count =
      static_cast<std::size_t>(std::count(text.begin(), text.end(), '<'));
  return fs;
}

bool is_valid_segment(std::string_view text) {
  if (text.empty() || text.front() != '<' || text.back() != '<') return false;
  std::size_t run = 0;
  for (char c : text) {
    if (c == '>') {
      if (++run == 3) return false;
    } else if (c == '<') {
      run = 0;
    } else {
      return false;
    }
  }
  return true;
}

KillingScenario killing_scenario(std::string_view segment_text,
                                 std::size_t pad) {
  if (!is_valid_segment(segment_text)) {
    throw std::invalid_argument("not a valid segment: must start and end "
                                "with '<' and contain no '>>>' run");
  }
  const std::size_t s = segment_text.size();
  std::string text;
  text.reserve(2 * s + 1 + s + s + 2 + pad);
  text.append(2 * s + 1, '>');
  text.append(segment_text);
  text.append(s + 2 + pad, '>');
  KillingScenario scenario;
  scenario.segment = std::string(segment_text);
  scenario.pad = pad;
  scenario.ring = Ring::parse(text);
  scenario.deadline = static_cast<std::int64_t>(2 * s);
  return scenario;
}

std::vector<std::string> enumerate_segment_texts(std::size_t max_len) {
  std::vector<std::string> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    if (len == 1) {
      out.emplace_back("<");
      continue;
    }
    const std::size_t mid = len - 2;
    if (mid >= 63) throw std::invalid_argument("segment sweep too large");
    const std::uint64_t total = 1ull << mid;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      std::string text(len, '<');
      // Bit (mid-1-j) drives character j, so ascending masks come out in
      // lexicographic order ('<' = 0 sorts before '>' = 1).
      for (std::size_t j = 0; j < mid; ++j) {
        if ((mask >> (mid - 1 - j)) & 1u) text[j + 1] = '>';
      }
      if (is_valid_segment(text)) out.push_back(std::move(text));
    }
  }
  return out;
}

Ring random_configuration(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k > n) throw std::invalid_argument("more L cells than cells");
  Ring ring(n, CellState::R);
  if (k == 0) return ring;
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  SplitMix64 gen(seed);
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t pick = j + static_cast<std::size_t>(gen.below(n - j));
    std::swap(idx[j], idx[pick]);
    ring.set(idx[j], CellState::L);
  }
  return ring;
}

namespace {

using U128 = unsigned __int128;

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

U128 binomial_u128(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr U128 kLimit = ~U128{0};
  U128 r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    U128 factor = n - k + i;
    if (r > kLimit / factor) throw std::overflow_error("necklace count overflow");
    r = r * factor / i;  // product of i consecutive integers divides by i!
  }
  return r;
}

std::uint64_t euler_phi(std::uint64_t d) {
  std::uint64_t result = d;
  for (std::uint64_t p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      while (d % p == 0) d /= p;
      result -= result / p;
    }
  }
  if (d > 1) result -= result / d;
  return result;
}

}  // namespace

std::uint64_t necklace_count(std::size_t n, std::size_t k) {
  if (k > n) throw std::invalid_argument("more L cells than cells");
  if (n == 0) return 0;
  const std::size_t g = std::gcd(n, k);
  U128 total = 0;
  for (std::size_t d = 1; d <= g; ++d) {
    if (g % d != 0) continue;
    U128 term = binomial_u128(n / d, k / d);
    U128 weight = euler_phi(d);
    if (term != 0 && weight > ~U128{0} / term) {
      throw std::overflow_error("necklace count overflow");
    }
    U128 add = weight * term;
    if (total > ~U128{0} - add) {
      throw std::overflow_error("necklace count overflow");
    }
    total += add;
  }
  total /= n;
  if (total > kU64Max) throw std::overflow_error("necklace count overflow");
  return static_cast<std::uint64_t>(total);
}

NecklaceEnumerator::NecklaceEnumerator(std::size_t n, std::size_t k)
    : n_(n), k_(k) {
  if (n == 0 || k > n) {
    throw std::invalid_argument("need 0 <= k <= n and n >= 1");
  }
  positions_.resize(k);
  std::iota(positions_.begin(), positions_.end(), std::size_t{0});
}

std::optional<Ring> NecklaceEnumerator::next() {
  while (!done_) {
    if (!first_) {
      // Advance to the next k-combination of {0..n-1} in lexicographic order.
      std::size_t i = k_;
      while (i > 0 && positions_[i - 1] == n_ - k_ + (i - 1)) --i;
      if (i == 0) {
        done_ = true;
        break;
      }
      ++positions_[i - 1];
      for (std::size_t j = i; j < k_; ++j) {
        positions_[j] = positions_[j - 1] + 1;
      }
    }
    first_ = false;
    if (k_ == 0) done_ = true;  // single combination: the empty one
    std::string text(n_, '>');
    for (std::size_t p : positions_) text[p] = '<';
    // Keep only the lexicographically smallest rotation of each class.
    bool canonical = true;
    for (std::size_t r = 1; r < n_ && canonical; ++r) {
      for (std::size_t i = 0; i < n_; ++i) {
        char rotated = text[(i + r) % n_];
        if (rotated < text[i]) {
          canonical = false;
          break;
        }
        if (rotated > text[i]) break;
      }
    }
    if (canonical) return Ring::parse(text);
  }
  return std::nullopt;
}

}  // namespace gkl
