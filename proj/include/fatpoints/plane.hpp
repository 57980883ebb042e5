#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fatpoints/rational.hpp"

namespace fatpoints {

/// Exponents (a, b, c) of x^a y^b z^c.
struct Exponent {
  unsigned x = 0;
  unsigned y = 0;
  unsigned z = 0;

  unsigned degree() const noexcept { return x + y + z; }
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

std::size_t monomial_count(unsigned degree) noexcept;

/// All exponents of total degree `degree` in graded-lex order:
/// x^d, x^{d-1}y, x^{d-1}z, x^{d-2}y^2, ...
std::vector<Exponent> monomial_basis(unsigned degree);

/// Position of `e` in monomial_basis(e.degree()).
std::size_t monomial_index(const Exponent& e) noexcept;

/// Point of P^2 stored as a primitive integer triple whose first nonzero
/// coordinate is positive.
class PlanePoint {
 public:
  PlanePoint(const BigRational& x, const BigRational& y, const BigRational& z);
  PlanePoint(long x, long y, long z) : PlanePoint(BigRational(x), BigRational(y), BigRational(z)) {}

  const BigInt& operator[](std::size_t i) const { return coords_[i]; }
  std::array<BigRational, 3> rational() const;
  std::string str() const;

  friend bool operator==(const PlanePoint& a, const PlanePoint& b) {
    return a.coords_[0] == b.coords_[0] && a.coords_[1] == b.coords_[1] && a.coords_[2] == b.coords_[2];
  }

 private:
  std::array<BigInt, 3> coords_;
};

/// Homogeneous ternary form with coefficients indexed by monomial_basis(degree).
class HomogeneousForm {
 public:
  HomogeneousForm() : HomogeneousForm(0u) {}
  explicit HomogeneousForm(unsigned degree);
  HomogeneousForm(unsigned degree, std::vector<BigRational> coefficients);

  static HomogeneousForm from_integers(unsigned degree, std::span<const BigInt> coefficients);
  static HomogeneousForm linear(const BigRational& a, const BigRational& b, const BigRational& c);
  static HomogeneousForm monomial(const Exponent& e, const BigRational& coefficient = 1);

  unsigned degree() const noexcept { return degree_; }
  std::span<const BigRational> coefficients() const noexcept { return coeffs_; }
  const BigRational& operator[](const Exponent& e) const { return coeffs_[monomial_index(e)]; }
  BigRational& operator[](const Exponent& e) { return coeffs_[monomial_index(e)]; }

  bool is_zero() const;
  /// Coprime integer coefficients, first nonzero coefficient positive.
  HomogeneousForm primitive() const;
  IntVector integer_coefficients() const;

  HomogeneousForm derivative(unsigned var) const;
  HomogeneousForm pow(unsigned e) const;

  HomogeneousForm& operator+=(const HomogeneousForm& other);
  HomogeneousForm& operator*=(const BigRational& s);
  friend HomogeneousForm operator+(HomogeneousForm a, const HomogeneousForm& b) { return a += b; }
  friend HomogeneousForm operator*(HomogeneousForm a, const BigRational& s) { return a *= s; }
  friend HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b);
  friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

  std::string str() const;

 private:
  unsigned degree_;
  std::vector<BigRational> coeffs_;
};

using Matrix3 = std::array<std::array<BigRational, 3>, 3>;

Matrix3 identity_matrix3();
Matrix3 multiply(const Matrix3& a, const Matrix3& b);
BigRational determinant(const Matrix3& m);
/// Throws Error(InvalidArgument) for singular input.
Matrix3 inverse(const Matrix3& m);

/// G(X) = F(M X).
HomogeneousForm compose(const HomogeneousForm& f, const Matrix3& m);
PlanePoint transform(const Matrix3& m, const PlanePoint& p);

BigRational evaluate(const HomogeneousForm& f, std::span<const BigRational, 3> coords);
/// Value at the stored integer representative; meaningful only as a zero test.
BigRational evaluate(const HomogeneousForm& f, const PlanePoint& p);

/// Affine chart centred at a point: swap z with the first nonzero coordinate
/// when z vanishes, then translate the point to the origin of z = 1.
class ProjectiveFrame {
 public:
  explicit ProjectiveFrame(const PlanePoint& center);

  const PlanePoint& center() const noexcept { return center_; }
  /// Sends center() to (0:0:1).
  const Matrix3& matrix() const noexcept { return matrix_; }
  const Matrix3& inverse() const noexcept { return inverse_; }
  /// Local variable j is global variable swap()[j] before translation.
  const std::array<unsigned, 3>& swap() const noexcept { return swap_; }
  const BigRational& shift_u() const noexcept { return shift_u_; }
  const BigRational& shift_v() const noexcept { return shift_v_; }

 private:
  PlanePoint center_;
  std::array<unsigned, 3> swap_{0, 1, 2};
  BigRational shift_u_;
  BigRational shift_v_;
  Matrix3 matrix_;
  Matrix3 inverse_;
};

/// Dense polynomial in two affine variables, coefficient (i, j) of s^i t^j.
class LocalPolynomial {
 public:
  LocalPolynomial() = default;
  LocalPolynomial(std::size_t max_i, std::size_t max_j);

  std::size_t max_i() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  std::size_t max_j() const noexcept { return coeffs_.empty() ? 0 : coeffs_[0].size() - 1; }
  const BigRational& operator()(std::size_t i, std::size_t j) const { return coeffs_[i][j]; }
  BigRational& operator()(std::size_t i, std::size_t j) { return coeffs_[i][j]; }

  bool is_zero() const;
  /// Least total degree of a nonzero term; empty for the zero polynomial.
  std::optional<unsigned> order() const;
  /// P(s, t0 + t).
  LocalPolynomial shift_second(const BigRational& t0) const;
  /// Divides by s^e; throws Error(InvalidArgument) unless s^e divides.
  LocalPolynomial divide_first(unsigned e) const;

 private:
  std::vector<std::vector<BigRational>> coeffs_;
};

/// F(frame^{-1}(u, v, 1)) as a polynomial in (u, v).
LocalPolynomial dehomogenize_at(const HomogeneousForm& f, const ProjectiveFrame& frame);

/// Order of vanishing of F at P (0 when P is off the curve).
unsigned multiplicity_at(const HomogeneousForm& f, const PlanePoint& p);

/// True when F is a nonzero product of lines through P.
bool is_cone_at(const HomogeneousForm& f, const PlanePoint& p);

bool collinear(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c);
HomogeneousForm line_through(const PlanePoint& a, const PlanePoint& b);
PlanePoint intersect_lines(const HomogeneousForm& l1, const HomogeneousForm& l2);
/// The point a + t*b on the line through a and b (integer representatives).
PlanePoint point_on_line(const PlanePoint& a, const PlanePoint& b, const BigRational& t);

HomogeneousForm conic_through_five(std::span<const PlanePoint> pts);
/// Residual intersection of the line through `a` and `b` with a conic through
/// `a`; equals `a` when the line is tangent there.
PlanePoint second_intersection(const HomogeneousForm& conic, const PlanePoint& a, const PlanePoint& b);

HomogeneousForm tangent_line_at(const HomogeneousForm& c, const PlanePoint& p);

/// N = y^2 z - x^3 - x^2 z, node at (0:0:1) with branches y = x and y = -x.
HomogeneousForm standard_nodal_cubic();
PlanePoint standard_node();
/// (t^2 - 1 : t(t^2 - 1) : 1) on the standard nodal cubic.
PlanePoint nodal_cubic_point(const BigRational& t);

}  // namespace fatpoints
