#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fatpoints {

using BigInt = mpz_class;
/// mpq_class keeps values canonical (reduced, positive denominator) under
/// arithmetic; values built from raw parts go through make_rational.
using BigRational = mpq_class;
using IntVector = std::vector<BigInt>;

BigRational make_rational(const BigInt& num, const BigInt& den);

/// Parses an optionally signed decimal integer; throws Error(InvalidArgument).
BigInt parse_integer(std::string_view text);

BigInt binomial(unsigned long n, unsigned long k);

inline int cmpabs(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const BigRational& v) { return v.get_str(); }

/// Scales a rational vector to coprime integers whose first nonzero entry is
/// positive. The zero vector maps to zeros.
IntVector primitive_integer_vector(std::span<const BigRational> v);
IntVector primitive_integer_vector(std::span<const BigInt> v);

}  // namespace fatpoints
