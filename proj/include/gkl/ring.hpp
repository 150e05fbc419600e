#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gkl {

/// The two cell states. '>' (R) points toward increasing index, '<' (L)
/// toward decreasing index; the side a state points to is its sharp end.
enum class CellState : std::uint8_t { R = 0, L = 1 };

constexpr CellState opposite(CellState s) {
  return s == CellState::R ? CellState::L : CellState::R;
}

constexpr char to_char(CellState s) { return s == CellState::R ? '>' : '<'; }

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t index)
      : std::runtime_error(message), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// A ring of two-state cells, indexed modulo its size. Immutable in spirit:
/// stepping and rotating return new rings. Storage is bit-packed, one bit
/// per cell (1 = L), LSB-first within 64-bit words; tail bits stay zero.
class Ring {
 public:
  Ring() = default;
  explicit Ring(std::size_t n, CellState fill = CellState::R);

  /// Builds a ring from '>'/'<' text. Throws ParseError on empty input or
  /// any other character (the error carries the offending index).
  static Ring parse(std::string_view text);

  /// Inverse of parse.
  std::string render() const;

  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }

  /// Cell at index i, any integer; wraps modulo n.
  CellState at(std::int64_t i) const {
    std::size_t j = mod_index(i);
    return static_cast<CellState>((words_[j >> 6] >> (j & 63)) & 1u);
  }

  /// Direct write, 0 <= i < n. Used by builders; stepping never mutates.
  void set(std::size_t i, CellState s);

  std::size_t count(CellState s) const;
  bool uniform(CellState s) const;
  bool is_uniform() const { return uniform(CellState::R) || uniform(CellState::L); }

  /// result[i] = (*this)[(i + r) mod n], any integer r.
  Ring rotated(std::int64_t r) const;

  /// Reverses index order and swaps R and L in every cell.
  Ring mirrored() const;

  /// One synchronous GKL update: an R cell flips iff cells at +1 and +3 are
  /// both L; an L cell flips iff cells at -1 and -3 are both R. Word-parallel.
  Ring step() const;

  std::uint64_t hash() const;

  bool operator==(const Ring& other) const {
    return n_ == other.n_ && words_ == other.words_;
  }
  bool operator!=(const Ring& other) const { return !(*this == other); }

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  std::size_t mod_index(std::int64_t i) const {
    std::int64_t n = static_cast<std::int64_t>(n_);
    std::int64_t m = i % n;
    return static_cast<std::size_t>(m < 0 ? m + n : m);
  }

  /// dst bit i = src bit (i + k) mod n, 0 <= k < n.
  static void gather_shifted(const std::vector<std::uint64_t>& src,
                             std::vector<std::uint64_t>& dst, std::size_t n,
                             std::size_t k);

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Free-function form of Ring::step.
inline Ring gkl_step(const Ring& config) { return config.step(); }

}  // namespace gkl
