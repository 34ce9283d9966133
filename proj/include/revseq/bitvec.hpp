#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace revseq {

// Fixed-width vector of bits addressed by line index. Line 0 is the
// leftmost character in the string form and the most significant digit
// in the row-index form used by truth tables.
struct bitvec {
  int width = 0;
  std::uint32_t bits = 0;

  bitvec() = default;
  bitvec(int w, std::uint32_t b) : width(w), bits(b) {}

  static constexpr int max_width = 30;

  bool get(int line) const { return (bits >> line) & 1u; }

  void set(int line, bool v) {
    if (v)
      bits |= (1u << line);
    else
      bits &= ~(1u << line);
  }

  void flip(int line) { bits ^= (1u << line); }

  // Parity of the whole vector.
  bool xor_reduce() const { return __builtin_parity(bits); }

  int popcount() const { return __builtin_popcount(bits); }

  // Row index with line 0 as the most significant bit.
  std::uint32_t row_index() const {
    std::uint32_t r = 0;
    for (int i = 0; i < width; ++i) r = (r << 1) | (get(i) ? 1u : 0u);
    return r;
  }

  static bitvec from_row_index(std::uint32_t row, int w) {
    bitvec v(w, 0);
    for (int i = 0; i < w; ++i) v.set(i, (row >> (w - 1 - i)) & 1u);
    return v;
  }

  static bitvec from_string(const std::string& s) {
    if (s.size() > static_cast<std::size_t>(max_width))
      throw std::invalid_argument("bit string too wide: " + s);
    bitvec v(static_cast<int>(s.size()), 0);
    for (int i = 0; i < v.width; ++i) {
      char c = s[static_cast<std::size_t>(i)];
      if (c != '0' && c != '1')
        throw std::invalid_argument("bad bit character in: " + s);
      v.set(i, c == '1');
    }
    return v;
  }

  std::string to_string() const {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i)
      if (get(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
  }

  friend bool operator==(const bitvec&, const bitvec&) = default;
};

}  // namespace revseq
