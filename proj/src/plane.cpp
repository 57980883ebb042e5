#include "fatpoints/plane.hpp"

#include <sstream>

#include "fatpoints/error.hpp"
#include "fatpoints/linalg.hpp"

namespace fatpoints {

std::size_t monomial_count(unsigned degree) noexcept {
  return static_cast<std::size_t>(degree + 1) * (degree + 2) / 2;
}

std::vector<Exponent> monomial_basis(unsigned degree) {
  std::vector<Exponent> out;
  out.reserve(monomial_count(degree));
  for (unsigned a = degree + 1; a-- > 0;)
    for (unsigned b = degree - a + 1; b-- > 0;) out.push_back({a, b, degree - a - b});
  return out;
}

std::size_t monomial_index(const Exponent& e) noexcept {
  const std::size_t gap = e.degree() - e.x;
  return gap * (gap + 1) / 2 + (gap - e.y);
}

// ---------------------------------------------------------------- points

PlanePoint::PlanePoint(const BigRational& x, const BigRational& y, const BigRational& z) {
  const std::array<BigRational, 3> raw{x, y, z};
  IntVector v = primitive_integer_vector(std::span<const BigRational>(raw));
  if (v[0] == 0 && v[1] == 0 && v[2] == 0) throw Error(Errc::InvalidArgument, "point (0:0:0)");
  for (int i = 0; i < 3; ++i) coords_[i] = std::move(v[i]);
}

std::array<BigRational, 3> PlanePoint::rational() const {
  return {BigRational(coords_[0]), BigRational(coords_[1]), BigRational(coords_[2])};
}

std::string PlanePoint::str() const {
  return "(" + coords_[0].get_str() + ":" + coords_[1].get_str() + ":" + coords_[2].get_str() + ")";
}

// ---------------------------------------------------------------- forms

HomogeneousForm::HomogeneousForm(unsigned degree) : degree_(degree), coeffs_(monomial_count(degree)) {}

HomogeneousForm::HomogeneousForm(unsigned degree, std::vector<BigRational> coefficients)
    : degree_(degree), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != monomial_count(degree))
    throw Error(Errc::InvalidArgument, "coefficient vector length does not match degree");
}

HomogeneousForm HomogeneousForm::from_integers(unsigned degree, std::span<const BigInt> coefficients) {
  std::vector<BigRational> c(coefficients.begin(), coefficients.end());
  return HomogeneousForm(degree, std::move(c));
}

HomogeneousForm HomogeneousForm::linear(const BigRational& a, const BigRational& b, const BigRational& c) {
  return HomogeneousForm(1, {a, b, c});
}

HomogeneousForm HomogeneousForm::monomial(const Exponent& e, const BigRational& coefficient) {
  HomogeneousForm f(e.degree());
  f[e] = coefficient;
  return f;
}

bool HomogeneousForm::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

IntVector HomogeneousForm::integer_coefficients() const {
  return primitive_integer_vector(std::span<const BigRational>(coeffs_));
}

HomogeneousForm HomogeneousForm::primitive() const {
  IntVector v = integer_coefficients();
  return from_integers(degree_, v);
}

HomogeneousForm HomogeneousForm::derivative(unsigned var) const {
  if (degree_ == 0) return HomogeneousForm(0u);
  HomogeneousForm out(degree_ - 1);
  const auto basis = monomial_basis(degree_);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Exponent e = basis[i];
    unsigned* slot = var == 0 ? &e.x : var == 1 ? &e.y : &e.z;
    if (*slot == 0) continue;
    const unsigned power = *slot;
    --*slot;
    out[e] += coeffs_[i] * power;
  }
  return out;
}

HomogeneousForm HomogeneousForm::pow(unsigned e) const {
  HomogeneousForm out = HomogeneousForm::monomial({0, 0, 0}, 1);
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

HomogeneousForm& HomogeneousForm::operator+=(const HomogeneousForm& other) {
  if (other.degree_ != degree_) throw Error(Errc::InvalidArgument, "adding forms of different degree");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

HomogeneousForm& HomogeneousForm::operator*=(const BigRational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b) {
  HomogeneousForm out(a.degree_ + b.degree_);
  const auto ba = monomial_basis(a.degree_);
  const auto bb = monomial_basis(b.degree_);
  for (std::size_t i = 0; i < ba.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < bb.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      const Exponent e{ba[i].x + bb[j].x, ba[i].y + bb[j].y, ba[i].z + bb[j].z};
      out.coeffs_[monomial_index(e)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

std::string HomogeneousForm::str() const {
  std::ostringstream os;
  const auto basis = monomial_basis(degree_);
  bool first = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << (coeffs_[i] > 0 ? " + " : " - ");
    else if (coeffs_[i] < 0) os << "-";
    first = false;
    const BigRational mag = abs(coeffs_[i]);
    const Exponent& e = basis[i];
    const bool constant = e.degree() == 0;
    if (mag != 1 || constant) os << mag.get_str() << (constant ? "" : "*");
    bool need_sep = false;
    auto put = [&](char v, unsigned p) {
      if (p == 0) return;
      if (need_sep) os << "*";
      os << v;
      if (p > 1) os << "^" << p;
      need_sep = true;
    };
    put('x', e.x);
    put('y', e.y);
    put('z', e.z);
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------- 3x3 algebra

Matrix3 identity_matrix3() {
  Matrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = i == j ? 1 : 0;
  return m;
}

Matrix3 multiply(const Matrix3& a, const Matrix3& b) {
  Matrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      BigRational s = 0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      m[i][j] = s;
    }
  return m;
}

BigRational determinant(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Matrix3 inverse(const Matrix3& m) {
  const BigRational det = determinant(m);
  if (det == 0) throw Error(Errc::InvalidArgument, "singular 3x3 matrix");
  Matrix3 inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / det;
    }
  return inv;
}

HomogeneousForm compose(const HomogeneousForm& f, const Matrix3& m) {
  const unsigned d = f.degree();
  std::array<HomogeneousForm, 3> lin;
  for (int i = 0; i < 3; ++i) lin[i] = HomogeneousForm::linear(m[i][0], m[i][1], m[i][2]);
  std::vector<HomogeneousForm> zpow{HomogeneousForm::monomial({0, 0, 0})};
  for (unsigned i = 1; i <= d; ++i) zpow.push_back(zpow.back() * lin[2]);

  // Nested Horner: F = sum_a l0^a H_a, H_a = sum_b c_{a,b} l1^b l2^{d-a-b}.
  HomogeneousForm acc;
  for (unsigned a = d + 1; a-- > 0;) {
    const unsigned n = d - a;
    HomogeneousForm h = HomogeneousForm::monomial({0, 0, 0}, f[Exponent{a, n, 0}]);
    for (unsigned b = n; b-- > 0;) {
      h = h * lin[1];
      const BigRational& c = f[Exponent{a, b, n - b}];
      if (c != 0) h += zpow[n - b] * c;
    }
    acc = (a == d) ? h : acc * lin[0] + h;
  }
  return acc;
}

PlanePoint transform(const Matrix3& m, const PlanePoint& p) {
  const auto c = p.rational();
  std::array<BigRational, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = m[i][0] * c[0] + m[i][1] * c[1] + m[i][2] * c[2];
  return PlanePoint(out[0], out[1], out[2]);
}

BigRational evaluate(const HomogeneousForm& f, std::span<const BigRational, 3> c) {
  const unsigned d = f.degree();
  std::array<std::vector<BigRational>, 3> pw;
  for (int i = 0; i < 3; ++i) {
    pw[i].push_back(1);
    for (unsigned k = 1; k <= d; ++k) pw[i].push_back(pw[i].back() * c[i]);
  }
  const auto basis = monomial_basis(d);
  BigRational sum = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const BigRational& coef = f.coefficients()[i];
    if (coef == 0) continue;
    sum += coef * pw[0][basis[i].x] * pw[1][basis[i].y] * pw[2][basis[i].z];
  }
  return sum;
}

BigRational evaluate(const HomogeneousForm& f, const PlanePoint& p) {
  const auto c = p.rational();
  return evaluate(f, std::span<const BigRational, 3>(c));
}

// ---------------------------------------------------------------- frames

ProjectiveFrame::ProjectiveFrame(const PlanePoint& center) : center_(center) {
  if (center[2] == 0) {
    const unsigned first = center[0] != 0 ? 0u : 1u;
    swap_[first] = 2;
    swap_[2] = first;
  }
  const BigRational pz(center[swap_[2]]);
  shift_u_ = BigRational(center[swap_[0]]) / pz;
  shift_v_ = BigRational(center[swap_[1]]) / pz;

  Matrix3 s;  // (S x)_j = x_{swap[j]}
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) s[j][i] = (static_cast<unsigned>(i) == swap_[j]) ? 1 : 0;
  Matrix3 t = identity_matrix3();
  t[0][2] = -shift_u_;
  t[1][2] = -shift_v_;
  Matrix3 t_inv = identity_matrix3();
  t_inv[0][2] = shift_u_;
  t_inv[1][2] = shift_v_;
  matrix_ = multiply(t, s);
  inverse_ = multiply(s, t_inv);  // the swap is an involution
}

// ---------------------------------------------------------------- local polynomials

LocalPolynomial::LocalPolynomial(std::size_t max_i, std::size_t max_j)
    : coeffs_(max_i + 1, std::vector<BigRational>(max_j + 1)) {}

bool LocalPolynomial::is_zero() const { return !order().has_value(); }

std::optional<unsigned> LocalPolynomial::order() const {
  std::optional<unsigned> best;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < coeffs_[i].size(); ++j) {
      if (coeffs_[i][j] == 0) continue;
      const auto o = static_cast<unsigned>(i + j);
      if (!best || o < *best) best = o;
    }
  return best;
}

LocalPolynomial LocalPolynomial::shift_second(const BigRational& t0) const {
  LocalPolynomial out(max_i(), max_j());
  if (coeffs_.empty()) return out;
  const std::size_t nj = max_j();
  std::vector<BigRational> pw{1};
  for (std::size_t k = 1; k <= nj; ++k) pw.push_back(pw.back() * t0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j <= nj; ++j) {
      if (coeffs_[i][j] == 0) continue;
      // (t0 + t)^j = sum_q C(j, q) t0^{j-q} t^q
      for (std::size_t q = 0; q <= j; ++q)
        out.coeffs_[i][q] += coeffs_[i][j] * BigRational(binomial(j, q)) * pw[j - q];
    }
  return out;
}

LocalPolynomial LocalPolynomial::divide_first(unsigned e) const {
  for (std::size_t i = 0; i < e && i < coeffs_.size(); ++i)
    for (const auto& c : coeffs_[i])
      if (c != 0) throw Error(Errc::InvalidArgument, "polynomial not divisible by requested power");
  if (e > max_i()) return LocalPolynomial(0, max_j());
  LocalPolynomial out(max_i() - e, max_j());
  for (std::size_t i = e; i < coeffs_.size(); ++i) out.coeffs_[i - e] = coeffs_[i];
  return out;
}

LocalPolynomial dehomogenize_at(const HomogeneousForm& f, const ProjectiveFrame& frame) {
  const HomogeneousForm g = compose(f, frame.inverse());
  const unsigned d = f.degree();
  LocalPolynomial out(d, d);
  const auto basis = monomial_basis(d);
  for (std::size_t i = 0; i < basis.size(); ++i) out(basis[i].x, basis[i].y) = g.coefficients()[i];
  return out;
}

unsigned multiplicity_at(const HomogeneousForm& f, const PlanePoint& p) {
  if (f.is_zero()) throw Error(Errc::ZeroForm, "multiplicity of the zero form");
  return *dehomogenize_at(f, ProjectiveFrame(p)).order();
}

bool is_cone_at(const HomogeneousForm& f, const PlanePoint& p) {
  return !f.is_zero() && multiplicity_at(f, p) == f.degree();
}

// ---------------------------------------------------------------- incidence

namespace {

std::array<BigInt, 3> cross(const std::array<BigInt, 3>& a, const std::array<BigInt, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::array<BigInt, 3> coords_of(const PlanePoint& p) { return {p[0], p[1], p[2]}; }

std::array<BigInt, 3> coords_of_line(const HomogeneousForm& l) {
  if (l.degree() != 1) throw Error(Errc::InvalidArgument, "expected a linear form");
  IntVector v = l.integer_coefficients();
  return {v[0], v[1], v[2]};
}

}  // namespace

bool collinear(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c) {
  const auto n = cross(coords_of(a), coords_of(b));
  return n[0] * c[0] + n[1] * c[1] + n[2] * c[2] == 0;
}

HomogeneousForm line_through(const PlanePoint& a, const PlanePoint& b) {
  if (a == b) throw Error(Errc::CoincidentPoints, "line through " + a.str() + " twice");
  const auto n = cross(coords_of(a), coords_of(b));
  return HomogeneousForm::linear(BigRational(n[0]), BigRational(n[1]), BigRational(n[2])).primitive();
}

PlanePoint intersect_lines(const HomogeneousForm& l1, const HomogeneousForm& l2) {
  const auto n = cross(coords_of_line(l1), coords_of_line(l2));
  if (n[0] == 0 && n[1] == 0 && n[2] == 0) throw Error(Errc::CoincidentPoints, "intersecting a line with itself");
  return PlanePoint(BigRational(n[0]), BigRational(n[1]), BigRational(n[2]));
}

PlanePoint point_on_line(const PlanePoint& a, const PlanePoint& b, const BigRational& t) {
  const auto ca = a.rational();
  const auto cb = b.rational();
  return PlanePoint(ca[0] + t * cb[0], ca[1] + t * cb[1], ca[2] + t * cb[2]);
}

HomogeneousForm conic_through_five(std::span<const PlanePoint> pts) {
  if (pts.size() != 5) throw Error(Errc::InvalidArgument, "conic_through_five needs five points");
  const auto basis = monomial_basis(2);
  RatMatrix m(5, basis.size());
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const auto& e = basis[j];
      BigInt v = 1;
      for (unsigned k = 0; k < e.x; ++k) v *= pts[i][0];
      for (unsigned k = 0; k < e.y; ++k) v *= pts[i][1];
      for (unsigned k = 0; k < e.z; ++k) v *= pts[i][2];
      m(i, j) = v;
    }
  auto kernel = kernel_basis(m);
  if (kernel.size() != 1) throw Error(Errc::DegenerateSystem, "five points do not determine a unique conic");
  return HomogeneousForm::from_integers(2, kernel[0]);
}

PlanePoint second_intersection(const HomogeneousForm& conic, const PlanePoint& a, const PlanePoint& b) {
  if (conic.degree() != 2) throw Error(Errc::InvalidArgument, "expected a conic");
  if (evaluate(conic, a) != 0) throw Error(Errc::NotOnCurve, a.str() + " is not on the conic");
  // g(t) = C(a + t b) = g1 t + g2 t^2.
  auto at = [&](long t) {
    const auto ca = a.rational();
    const auto cb = b.rational();
    const std::array<BigRational, 3> q{ca[0] + t * cb[0], ca[1] + t * cb[1], ca[2] + t * cb[2]};
    return evaluate(conic, std::span<const BigRational, 3>(q));
  };
  const BigRational gp = at(1), gm = at(-1);
  const BigRational g2 = (gp + gm) / 2;
  const BigRational g1 = (gp - gm) / 2;
  if (g2 == 0) {
    if (g1 == 0) throw Error(Errc::DegenerateSystem, "line is a component of the conic");
    return b;
  }
  return point_on_line(a, b, -g1 / g2);
}

HomogeneousForm tangent_line_at(const HomogeneousForm& c, const PlanePoint& p) {
  if (c.degree() == 0) throw Error(Errc::InvalidArgument, "constant form has no tangent");
  if (evaluate(c, p) != 0) throw Error(Errc::NotOnCurve, p.str() + " is not on the curve");
  std::array<BigRational, 3> g;
  for (unsigned i = 0; i < 3; ++i) g[i] = evaluate(c.derivative(i), p);
  if (g[0] == 0 && g[1] == 0 && g[2] == 0) throw Error(Errc::SingularPoint, p.str() + " is singular");
  return HomogeneousForm::linear(g[0], g[1], g[2]).primitive();
}

HomogeneousForm standard_nodal_cubic() {
  HomogeneousForm n(3);
  n[Exponent{0, 2, 1}] = 1;
  n[Exponent{3, 0, 0}] = -1;
  n[Exponent{2, 0, 1}] = -1;
  return n;
}

PlanePoint standard_node() { return PlanePoint(0, 0, 1); }

PlanePoint nodal_cubic_point(const BigRational& t) {
  if (t == 1 || t == -1) throw Error(Errc::NodeParameter, "parameter " + t.get_str() + " maps to the node");
  const BigRational s = t * t - 1;
  return PlanePoint(s, t * s, BigRational(1));
}

}  // namespace fatpoints
