#pragma once

// Reference implementation used only by tests: plain strings, textbook index
// arithmetic, no bit tricks. Deliberately written without looking at the
// library internals so the two can disagree.

#include <cstdint>
#include <random>
#include <string>

namespace naive {

inline char cell(const std::string& s, std::int64_t i) {
  const std::int64_t n = static_cast<std::int64_t>(s.size());
  const std::int64_t m = ((i % n) + n) % n;
  return s[static_cast<std::size_t>(m)];
}

inline std::string step(const std::string& s) {
  std::string out = s;
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(s.size()); ++i) {
    if (cell(s, i) == '>') {
      out[static_cast<std::size_t>(i)] =
          (cell(s, i + 1) == '<' && cell(s, i + 3) == '<') ? '<' : '>';
    } else {
      out[static_cast<std::size_t>(i)] =
          (cell(s, i - 1) == '>' && cell(s, i - 3) == '>') ? '>' : '<';
    }
  }
  return out;
}

inline std::string rotate(const std::string& s, std::int64_t r) {
  std::string out = s;
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(s.size()); ++i) {
    out[static_cast<std::size_t>(i)] = cell(s, i + r);
  }
  return out;
}

inline std::string mirror(const std::string& s) {
  std::string out(s.rbegin(), s.rend());
  for (char& c : out) c = (c == '<') ? '>' : '<';
  return out;
}

inline std::string random_text(std::mt19937_64& rng, std::size_t n) {
  std::string s(n, '>');
  for (char& c : s) {
    if (rng() & 1u) c = '<';
  }
  return s;
}

}  // namespace naive
