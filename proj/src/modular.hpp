#pragma once

#include <cstdint>
#include <vector>

#include "fatpoints/rational.hpp"

namespace fatpoints::detail {

/// Arithmetic modulo a prime below 2^31 with Barrett reduction.
class Zp {
 public:
  explicit Zp(std::uint32_t p);

  std::uint32_t prime() const noexcept { return p_; }

  std::uint32_t reduce(std::uint64_t x) const noexcept {
    auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett_) >> 64);
    std::uint64_t r = x - q * p_;
    return static_cast<std::uint32_t>(r >= p_ ? r - p_ : r);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return reduce(static_cast<std::uint64_t>(a) * b);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t from(const BigInt& v) const;

 private:
  std::uint32_t p_;
  std::uint64_t barrett_;
};

struct ModEchelon {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  /// Original indices of the rows that supplied the pivots, in pivot order.
  std::vector<std::size_t> pivot_rows;
};

/// Row echelon form in place (row-major, rows x cols), greedy left-to-right
/// pivots.
ModEchelon modular_echelon(std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols,
                           const Zp& zp);

}  // namespace fatpoints::detail
