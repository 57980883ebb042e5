// Modular elimination and p-adic (Dixon) lifting of kernel vectors.

#include <algorithm>
#include <optional>

#include "fatpoints/error.hpp"
#include "fatpoints/linalg.hpp"
#include "modular.hpp"

namespace fatpoints {
namespace detail {

Zp::Zp(std::uint32_t p) : p_(p), barrett_(~std::uint64_t{0} / p) {}

std::uint32_t Zp::inv(std::uint32_t a) const {
  if (a == 0) throw Error(Errc::BadPrime, "inverse of zero");
  std::int64_t t0 = 0, t1 = 1;
  std::int64_t r0 = p_, r1 = a;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  if (t0 < 0) t0 += p_;
  return static_cast<std::uint32_t>(t0);
}

std::uint32_t Zp::from(const BigInt& v) const {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), p_));
}

ModEchelon modular_echelon(std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols,
                           const Zp& zp) {
  ModEchelon out;
  std::vector<std::size_t> order(rows);
  for (std::size_t i = 0; i < rows; ++i) order[i] = i;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i * cols + c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    if (piv != r) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(piv * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((piv + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(r * cols));
      std::swap(order[piv], order[r]);
    }
    std::uint32_t* prow = a.data() + r * cols;
    const std::uint32_t pinv = zp.inv(prow[c]);
    for (std::size_t j = c; j < cols; ++j) prow[j] = zp.mul(prow[j], pinv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      std::uint32_t* row = a.data() + i * cols;
      const std::uint32_t f = row[c];
      if (f == 0) continue;
      const std::uint32_t nf = zp.prime() - f;
      for (std::size_t j = c; j < cols; ++j) {
        if (prow[j] == 0) continue;
        row[j] = zp.reduce(static_cast<std::uint64_t>(nf) * prow[j] + row[j]);
      }
    }
    out.pivot_cols.push_back(c);
    out.pivot_rows.push_back(order[r]);
    ++r;
  }
  out.rank = r;
  return out;
}

}  // namespace detail

namespace {

using detail::Zp;

/// Wang's rational reconstruction: a/b == u mod m with |a| <= bound, 0 < b <= bound.
bool rational_reconstruct(const BigInt& u, const BigInt& m, const BigInt& bound, BigInt& a, BigInt& b) {
  BigInt r0 = m, r1 = u, t0 = 0, t1 = 1, q, tmp;
  if (r1 < 0) r1 += m;
  while (cmpabs(r1, bound) > 0) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || cmpabs(t1, bound) > 0) return false;
  a = r1;
  b = t1;
  if (b < 0) {
    a = -a;
    b = -b;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g == 1;
}

std::size_t bit_length(const BigInt& v) { return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2); }

class DixonSolver {
 public:
  DixonSolver(const IntMatrix& a, const detail::ModEchelon& ech, const Zp& zp)
      : a_(a), zp_(zp), n_(ech.rank), prows_(ech.pivot_rows), pcols_(ech.pivot_cols) {
    square_.resize(n_ * n_);
    std::vector<std::uint32_t> aug(n_ * 2 * n_, 0);
    for (std::size_t e = 0; e < n_; ++e) {
      for (std::size_t t = 0; t < n_; ++t) {
        square_[e * n_ + t] = a(prows_[e], pcols_[t]);
        aug[e * 2 * n_ + t] = zp.from(square_[e * n_ + t]);
      }
      aug[e * 2 * n_ + n_ + e] = 1;
    }
    invert(aug);
    std::size_t hadamard = 1;
    for (std::size_t e = 0; e < n_; ++e) {
      BigInt norm2 = 0;
      for (std::size_t t = 0; t < n_; ++t) norm2 += square_[e * n_ + t] * square_[e * n_ + t];
      hadamard += (bit_length(norm2) + 1) / 2;
    }
    row_bound_bits_ = hadamard;
  }

  /// Kernel vector with entry `free_col` set and the other non-pivot entries zero.
  std::optional<IntVector> solve(std::size_t free_col) const {
    const std::uint32_t p = zp_.prime();
    std::vector<BigInt> b(n_), x_acc(n_);
    BigInt rhs_norm2 = 0;
    for (std::size_t e = 0; e < n_; ++e) {
      b[e] = -a_(prows_[e], free_col);
      rhs_norm2 += b[e] * b[e];
    }
    // Cramer numerators and the determinant are bounded by Hadamard's
    // inequality; the modulus must exceed twice their product.
    const std::size_t h_bits = row_bound_bits_ + (bit_length(rhs_norm2) + 1) / 2 + 1;
    const std::size_t max_steps = (2 * h_bits + 2) / 30 + 1;

    std::vector<std::uint32_t> res(n_), x(n_);
    BigInt pk = 1;
    std::size_t next_check = 2;
    for (std::size_t step = 1; step <= max_steps; ++step) {
      for (std::size_t e = 0; e < n_; ++e) res[e] = zp_.from(b[e]);
      for (std::size_t e = 0; e < n_; ++e) {
        std::uint64_t acc = 0;
        const std::uint32_t* row = inverse_.data() + e * n_;
        for (std::size_t t = 0; t < n_; ++t) acc += zp_.mul(row[t], res[t]);
        x[e] = static_cast<std::uint32_t>(acc % p);
      }
      for (std::size_t e = 0; e < n_; ++e) {
        if (x[e] != 0) mpz_addmul_ui(x_acc[e].get_mpz_t(), pk.get_mpz_t(), x[e]);
      }
      for (std::size_t e = 0; e < n_; ++e) {
        mpz_ptr be = b[e].get_mpz_t();
        for (std::size_t t = 0; t < n_; ++t) {
          if (x[t] != 0) mpz_submul_ui(be, square_[e * n_ + t].get_mpz_t(), x[t]);
        }
        mpz_divexact_ui(be, be, p);
      }
      pk *= p;
      if (step == next_check || step == max_steps) {
        next_check *= 2;
        if (auto v = reconstruct(x_acc, pk, free_col)) return v;
      }
    }
    return std::nullopt;
  }

 private:
  void invert(std::vector<std::uint32_t>& aug) {
    const std::size_t w = 2 * n_;
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t piv = c;
      while (piv < n_ && aug[piv * w + c] == 0) ++piv;
      if (piv == n_) throw Error(Errc::BadPrime, "pivot block singular modulo prime");
      if (piv != c)
        std::swap_ranges(aug.begin() + static_cast<std::ptrdiff_t>(piv * w),
                         aug.begin() + static_cast<std::ptrdiff_t>((piv + 1) * w),
                         aug.begin() + static_cast<std::ptrdiff_t>(c * w));
      const std::uint32_t inv = zp_.inv(aug[c * w + c]);
      for (std::size_t j = 0; j < w; ++j) aug[c * w + j] = zp_.mul(aug[c * w + j], inv);
      for (std::size_t i = 0; i < n_; ++i) {
        if (i == c || aug[i * w + c] == 0) continue;
        const std::uint32_t nf = zp_.prime() - aug[i * w + c];
        for (std::size_t j = 0; j < w; ++j)
          aug[i * w + j] = zp_.reduce(static_cast<std::uint64_t>(nf) * aug[c * w + j] + aug[i * w + j]);
      }
    }
    inverse_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) inverse_[i * n_ + j] = aug[i * w + n_ + j];
  }

  std::optional<IntVector> reconstruct(const std::vector<BigInt>& x, const BigInt& modulus,
                                       std::size_t free_col) const {
    BigInt bound;
    BigInt half = modulus / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    BigInt den = 1, y, num, d;
    std::vector<BigInt> nums(n_);
    for (std::size_t e = 0; e < n_; ++e) {
      mpz_mul(y.get_mpz_t(), den.get_mpz_t(), x[e].get_mpz_t());
      mpz_fdiv_r(y.get_mpz_t(), y.get_mpz_t(), modulus.get_mpz_t());
      if (y > half) y -= modulus;
      if (cmpabs(y, bound) <= 0) {
        nums[e] = y;
        continue;
      }
      if (!rational_reconstruct(y, modulus, bound, num, d)) return std::nullopt;
      den *= d;
      for (std::size_t f = 0; f < e; ++f) nums[f] *= d;
      nums[e] = num;
    }
    IntVector v(a_.cols());
    v[free_col] = den;
    for (std::size_t e = 0; e < n_; ++e) v[pcols_[e]] = nums[e];
    v = primitive_integer_vector(std::span<const BigInt>(v));
    if (!annihilates(a_, v)) return std::nullopt;
    return v;
  }

  const IntMatrix& a_;
  const Zp& zp_;
  std::size_t n_;
  std::vector<std::size_t> prows_;
  std::vector<std::size_t> pcols_;
  std::vector<BigInt> square_;
  std::vector<std::uint32_t> inverse_;
  std::size_t row_bound_bits_ = 0;
};

KernelCertificate from_bareiss(const RatMatrix& m) {
  KernelCertificate out;
  out.basis = kernel_basis(m);
  out.kernel_dim = out.basis.size();
  out.rank = m.cols() - out.kernel_dim;
  out.used_bareiss = true;
  return out;
}

}  // namespace

KernelCertificate certified_kernel(const RatMatrix& m, std::uint32_t prime, KernelScope scope) {
  if (prime < 3 || prime >= (1u << 31) || !is_prime(prime))
    throw Error(Errc::InvalidArgument, "modulus must be a prime in [3, 2^31)");
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  KernelCertificate out;
  if (rows == 0 || cols == 0) {
    for (std::size_t j = 0; j < cols; ++j) {
      IntVector e(cols);
      e[j] = 1;
      out.basis.push_back(std::move(e));
    }
    out.kernel_dim = cols;
    return out;
  }

  const IntMatrix a = IntMatrix::clear_denominators(m);
  const Zp zp(prime);
  std::vector<std::uint32_t> red(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) red[r * cols + c] = zp.from(a(r, c));
  const detail::ModEchelon ech = detail::modular_echelon(red, rows, cols, zp);

  // rank(m) >= modular rank, so a full modular column rank settles it.
  if (ech.rank == cols) {
    out.rank = cols;
    return out;
  }
  std::vector<std::size_t> free_cols;
  {
    std::size_t t = 0;
    for (std::size_t c = 0; c < cols; ++c) {
      if (t < ech.pivot_cols.size() && ech.pivot_cols[t] == c) {
        ++t;
        continue;
      }
      free_cols.push_back(c);
    }
  }
  if (ech.rank == 0) return from_bareiss(m);

  // Full modular row rank pins the exact rank without any kernel vector.
  const bool rank_settled = ech.rank == rows;
  const std::size_t wanted = (rank_settled && scope == KernelScope::FirstVector) ? 1 : free_cols.size();

  DixonSolver solver(a, ech, zp);
  for (std::size_t i = 0; i < wanted; ++i) {
    auto v = solver.solve(free_cols[i]);
    if (!v) return from_bareiss(m);
    out.basis.push_back(std::move(*v));
  }
  out.rank = ech.rank;
  out.kernel_dim = cols - ech.rank;
  return out;
}

}  // namespace fatpoints
