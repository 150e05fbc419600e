#include "gkl/ring.hpp"

#include <algorithm>
#include <bit>

namespace gkl {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

std::uint64_t tail_mask(std::size_t n) {
  std::size_t rem = n % kWordBits;
  return rem == 0 ? ~0ull : ((1ull << rem) - 1);
}

/// Low `count` bits starting at bit offset `off` (1 <= count <= 64). The
/// caller guarantees off + count does not run past the stored bits.
std::uint64_t read_bits(const std::vector<std::uint64_t>& src, std::size_t off,
                        std::size_t count) {
  std::size_t w = off >> 6;
  std::size_t b = off & 63;
  std::uint64_t bits = src[w] >> b;
  if (b != 0 && w + 1 < src.size()) bits |= src[w + 1] << (kWordBits - b);
  if (count < kWordBits) bits &= (1ull << count) - 1;
  return bits;
}

/// OR-copies `len` bits from src@src_off into dst@dst_off. dst must be zero
/// in the target range.
void copy_bits(const std::vector<std::uint64_t>& src, std::size_t src_off,
               std::vector<std::uint64_t>& dst, std::size_t dst_off,
               std::size_t len) {
  std::size_t done = 0;
  while (done < len) {
    std::size_t d = dst_off + done;
    std::size_t dw = d >> 6;
    std::size_t db = d & 63;
    std::size_t chunk = std::min(kWordBits - db, len - done);
    dst[dw] |= read_bits(src, src_off + done, chunk) << db;
    done += chunk;
  }
}

}  // namespace

Ring::Ring(std::size_t n, CellState fill) : n_(n), words_(word_count(n), 0) {
  if (fill == CellState::L && n > 0) {
    std::fill(words_.begin(), words_.end(), ~0ull);
    words_.back() &= tail_mask(n_);
  }
}

Ring Ring::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty ring text", 0);
  Ring ring(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '<') {
      ring.words_[i >> 6] |= 1ull << (i & 63);
    } else if (c != '>') {
      throw ParseError("illegal character '" + std::string(1, c) +
                           "' at index " + std::to_string(i) +
                           " (expected '>' or '<')",
                       i);
    }
  }
  return ring;
}

std::string Ring::render() const {
  std::string out(n_, '>');
  for (std::size_t i = 0; i < n_; ++i) {
    if ((words_[i >> 6] >> (i & 63)) & 1u) out[i] = '<';
  }
  return out;
}

void Ring::set(std::size_t i, CellState s) {
  std::uint64_t bit = 1ull << (i & 63);
  if (s == CellState::L) {
    words_[i >> 6] |= bit;
  } else {
    words_[i >> 6] &= ~bit;
  }
}

std::size_t Ring::count(CellState s) const {
  std::size_t ones = 0;
  for (std::uint64_t w : words_) ones += std::popcount(w);
  return s == CellState::L ? ones : n_ - ones;
}

bool Ring::uniform(CellState s) const {
  if (n_ == 0) return false;
  if (s == CellState::R) {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
  }
  for (std::size_t w = 0; w + 1 < words_.size(); ++w) {
    if (words_[w] != ~0ull) return false;
  }
  return words_.back() == tail_mask(n_);
}

void Ring::gather_shifted(const std::vector<std::uint64_t>& src,
                          std::vector<std::uint64_t>& dst, std::size_t n,
                          std::size_t k) {
  std::fill(dst.begin(), dst.end(), 0);
  if (k == 0) {
    dst = src;
    return;
  }
  copy_bits(src, k, dst, 0, n - k);
  copy_bits(src, 0, dst, n - k, k);
}

Ring Ring::rotated(std::int64_t r) const {
  Ring out(n_);
  gather_shifted(words_, out.words_, n_, mod_index(r));
  return out;
}

Ring Ring::mirrored() const {
  Ring out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    out.set(i, opposite(at(static_cast<std::int64_t>(n_ - 1 - i))));
  }
  return out;
}

Ring Ring::step() const {
  Ring out(n_);
  if (n_ == 0) return out;
  const std::size_t words = words_.size();
  std::vector<std::uint64_t> ahead1(words), ahead3(words), behind1(words),
      behind3(words);
  auto offset = [this](std::int64_t v) { return mod_index(v); };
  gather_shifted(words_, ahead1, n_, offset(1));
  gather_shifted(words_, ahead3, n_, offset(3));
  gather_shifted(words_, behind1, n_, offset(-1));
  gather_shifted(words_, behind3, n_, offset(-3));
  // R cell (bit 0): becomes L iff both cells toward its sharp end (+1, +3)
  // are L. L cell (bit 1): stays L unless both -1 and -3 are R.
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t cur = words_[w];
    out.words_[w] =
        (~cur & ahead1[w] & ahead3[w]) | (cur & (behind1[w] | behind3[w]));
  }
  out.words_.back() &= tail_mask(n_);
  return out;
}

std::uint64_t Ring::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(n_);
  for (std::uint64_t w : words_) mix(w);
  return h;
}

}  // namespace gkl
