#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

namespace qlat::detail {

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

inline void set_bit(std::span<std::uint64_t> row, std::size_t i) { row[i / 64] |= std::uint64_t{1} << (i % 64); }

inline bool test_bit(std::span<const std::uint64_t> row, std::size_t i) { return (row[i / 64] >> (i % 64)) & 1U; }

inline void or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] |= src[w];
}

// Index of the lowest set bit of a & b, or npos when the intersection is empty.
inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

inline std::size_t first_common(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (const std::uint64_t v = a[w] & b[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(v));
  }
  return npos;
}

inline std::size_t last_common(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t w = a.size(); w-- > 0;) {
    if (const std::uint64_t v = a[w] & b[w]) return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(v));
  }
  return npos;
}

// (a & b) is a subset of c.
inline bool common_within(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                          std::span<const std::uint64_t> c) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if ((a[w] & b[w]) & ~c[w]) return false;
  }
  return true;
}

}  // namespace qlat::detail
