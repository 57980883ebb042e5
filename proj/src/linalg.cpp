#include "fatpoints/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "fatpoints/error.hpp"
#include "modular.hpp"

namespace fatpoints {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<BigRational>>& rows) {
  RatMatrix m;
  for (const auto& r : rows) {
    if (m.rows_ == 0) m.cols_ = r.size();
    m.append_row(r);
  }
  return m;
}

void RatMatrix::append_row(std::span<const BigRational> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw Error(Errc::InvalidArgument, "row length mismatch");
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

void RatMatrix::append(const RatMatrix& other) {
  if (rows_ == 0 && cols_ == 0) cols_ = other.cols_;
  if (other.rows_ == 0) return;
  if (other.cols_ != cols_) throw Error(Errc::InvalidArgument, "column count mismatch");
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  rows_ += other.rows_;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::clear_denominators(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    IntVector row = primitive_integer_vector(m.row(r));
    std::move(row.begin(), row.end(), out.entries_.begin() + static_cast<std::ptrdiff_t>(r * m.cols()));
  }
  return out;
}

namespace {

struct BareissResult {
  IntMatrix echelon;  // first `rank` rows hold the fraction-free echelon form
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

BareissResult bareiss(const RatMatrix& m) {
  BareissResult res{IntMatrix::clear_denominators(m), 0, {}};
  IntMatrix& a = res.echelon;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  BigInt prev = 1;
  BigInt t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      if (piv == rows || cmpabs(a(i, c), a(piv, c)) > 0) piv = i;
    }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
    const BigInt& p = a(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const BigInt f = a(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_mul(t.get_mpz_t(), p.get_mpz_t(), a(i, j).get_mpz_t());
        mpz_submul(t.get_mpz_t(), f.get_mpz_t(), a(r, j).get_mpz_t());
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = p;
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

}  // namespace

std::size_t rank(const RatMatrix& m) { return bareiss(m).rank; }

std::vector<IntVector> kernel_basis(const RatMatrix& m) {
  const std::size_t cols = m.cols();
  BareissResult e = bareiss(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<IntVector> basis;
  for (std::size_t j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<BigRational> v(cols);
    v[j] = 1;
    for (std::size_t t = e.rank; t-- > 0;) {
      const std::size_t pc = e.pivot_cols[t];
      BigRational sum = 0;
      for (std::size_t c = pc + 1; c < cols; ++c) {
        if (v[c] == 0 || e.echelon(t, c) == 0) continue;
        sum += BigRational(e.echelon(t, c)) * v[c];
      }
      v[pc] = -sum / BigRational(e.echelon(t, pc));
    }
    IntVector w = primitive_integer_vector(std::span<const BigRational>(v));
    if (!annihilates(m, w)) throw Error(Errc::DegenerateSystem, "kernel vector failed verification");
    basis.push_back(std::move(w));
  }
  return basis;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::size_t modular_rank(const RatMatrix& m, std::uint32_t p) {
  if (p < 3 || p >= (1u << 31) || !is_prime(p))
    throw Error(Errc::InvalidArgument, "modulus must be a prime in [3, 2^31)");
  detail::Zp zp(p);
  std::vector<std::uint32_t> a(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const BigRational& x = m(r, c);
      std::uint32_t den = zp.from(x.get_den());
      if (den == 0) throw Error(Errc::BadPrime, "denominator divisible by " + std::to_string(p));
      a[r * m.cols() + c] = zp.mul(zp.from(x.get_num()), zp.inv(den));
    }
  }
  return detail::modular_echelon(a, m.rows(), m.cols(), zp).rank;
}

bool annihilates(const RatMatrix& m, std::span<const BigInt> v) {
  if (v.size() != m.cols()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigRational sum = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (v[c] == 0 || m(r, c) == 0) continue;
      sum += m(r, c) * BigRational(v[c]);
    }
    if (sum != 0) return false;
  }
  return true;
}

bool annihilates(const IntMatrix& m, std::span<const BigInt> v) {
  if (v.size() != m.cols()) return false;
  BigInt sum;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    sum = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (v[c] == 0) continue;
      mpz_addmul(sum.get_mpz_t(), m(r, c).get_mpz_t(), v[c].get_mpz_t());
    }
    if (sum != 0) return false;
  }
  return true;
}

}  // namespace fatpoints
