#include "fatpoints/rational.hpp"

#include <cctype>

#include "fatpoints/error.hpp"

namespace fatpoints {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigInt parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw Error(Errc::InvalidArgument, "not an integer: '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw Error(Errc::InvalidArgument, "not an integer: '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

IntVector primitive_integer_vector(std::span<const BigRational> v) {
  BigInt lcm = 1;
  for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    BigInt scaled = x.get_num() * (lcm / x.get_den());
    out.push_back(std::move(scaled));
  }
  return primitive_integer_vector(std::span<const BigInt>(out));
}

IntVector primitive_integer_vector(std::span<const BigInt> v) {
  BigInt g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  IntVector out(v.begin(), v.end());
  if (g == 0) return out;
  int sign = 0;
  for (const auto& x : v) {
    if (x != 0) {
      sign = sgn(x);
      break;
    }
  }
  if (sign < 0) g = -g;
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

}  // namespace fatpoints
