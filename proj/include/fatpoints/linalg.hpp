#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fatpoints/rational.hpp"

namespace fatpoints {

/// Dense row-major matrix over the rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix from_rows(const std::vector<std::vector<BigRational>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigRational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigRational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const BigRational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<BigRational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }

  void append_row(std::span<const BigRational> values);
  /// Stacks the rows of `other` below this matrix. An empty 0x0 matrix
  /// adopts the column count of `other`.
  void append(const RatMatrix& other);

  RatMatrix transpose() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigRational> entries_;
};

/// Integer matrix with the same row space as a RatMatrix: each row is
/// scaled to a primitive integer vector.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntMatrix clear_denominators(const RatMatrix& m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const BigInt> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

inline constexpr std::uint32_t kDefaultPrime = 2147483647u;  // 2^31 - 1

/// Exact rank by fraction-free (Bareiss) elimination with largest-magnitude
/// column pivoting.
std::size_t rank(const RatMatrix& m);

/// Kernel basis in reduced-echelon normal form: one vector per non-pivot
/// column j (entry j set, other non-pivot entries zero), scaled to a
/// primitive integer vector with positive leading entry. Every vector is
/// checked against `m` before return.
std::vector<IntVector> kernel_basis(const RatMatrix& m);

/// Rank of `m` reduced modulo the prime `p` (3 <= p < 2^31). Never exceeds
/// rank(m). Throws Error(BadPrime) when some denominator vanishes mod p.
std::size_t modular_rank(const RatMatrix& m, std::uint32_t p);

bool is_prime(std::uint64_t n);

/// True when m * v == 0 exactly.
bool annihilates(const RatMatrix& m, std::span<const BigInt> v);
bool annihilates(const IntMatrix& m, std::span<const BigInt> v);

enum class KernelScope { Full, FirstVector };

struct KernelCertificate {
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  /// Same vectors as kernel_basis(m); with KernelScope::FirstVector only the
  /// first one is guaranteed to be present.
  std::vector<IntVector> basis;
  bool used_bareiss = false;
};

/// Exact rank and kernel through modular elimination and p-adic lifting.
///
/// The modular rank is a lower bound on the true rank; every lifted kernel
/// vector is checked against the full matrix, which bounds the rank from
/// above. When the two bounds do not meet, the Bareiss route is used.
KernelCertificate certified_kernel(const RatMatrix& m, std::uint32_t prime = kDefaultPrime,
                                   KernelScope scope = KernelScope::Full);

}  // namespace fatpoints
