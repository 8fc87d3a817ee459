#pragma once

// Bit-packed GF(2) row helpers shared by the dense and echelon code.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

#include "fusionlim/fpla/field.hpp"

namespace fusionlim::fpla::detail {

using Word = std::uint64_t;

constexpr std::size_t word_count(std::size_t bits) noexcept {
  return (bits + 63) / 64;
}

inline bool test_bit(const Word* row, std::size_t i) noexcept {
  return (row[i >> 6] >> (i & 63)) & 1u;
}

inline void set_bit(Word* row, std::size_t i) noexcept {
  row[i >> 6] |= Word{1} << (i & 63);
}

inline void flip_bit(Word* row, std::size_t i) noexcept {
  row[i >> 6] ^= Word{1} << (i & 63);
}

/// dst ^= src over words [first, count).
inline void xor_words(Word* __restrict dst, const Word* __restrict src,
                      std::size_t first, std::size_t count) noexcept {
  for (std::size_t w = first; w < count; ++w) dst[w] ^= src[w];
}

inline void pack(std::span<const Residue> values, Word* out,
                 std::size_t words) noexcept {
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] & 1u) set_bit(out, i);
}

inline void unpack(const Word* row, std::size_t bits,
                   std::span<Residue> out) noexcept {
  for (std::size_t i = 0; i < bits; ++i)
    out[i] = static_cast<Residue>(test_bit(row, i));
}

/// Index of the lowest set bit, or `bits` when the row is zero.
inline std::size_t lowest_bit(const Word* row, std::size_t words,
                              std::size_t bits) noexcept {
  for (std::size_t w = 0; w < words; ++w)
    if (row[w] != 0)
      return w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
  return bits;
}

}  // namespace fusionlim::fpla::detail
