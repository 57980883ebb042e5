#include "fatpoints/blowup.hpp"

#include <bit>

#include "fatpoints/error.hpp"

namespace fatpoints {

std::string LineBundle::str() const {
  std::string s = "(" + std::to_string(d) + ";";
  for (std::size_t i = 0; i < mults.size(); ++i) s += (i ? "," : "") + std::to_string(mults[i]);
  return s + ")";
}

namespace {

/// Coefficients of the local monomials u^i v^j of F in the frame of a point,
/// as linear forms in the global coefficients of a degree-D form.
class LocalExpansion {
 public:
  LocalExpansion(const ProjectiveFrame& frame, unsigned degree) : degree_(degree) {
    const auto basis = monomial_basis(degree);
    const auto& sw = frame.swap();
    for (const auto& e : basis) {
      const std::array<unsigned, 3> ex{e.x, e.y, e.z};
      eu_.push_back(ex[sw[0]]);
      ev_.push_back(ex[sw[1]]);
    }
    pu_.push_back(1);
    pv_.push_back(1);
    for (unsigned k = 1; k <= degree; ++k) {
      pu_.push_back(pu_.back() * frame.shift_u());
      pv_.push_back(pv_.back() * frame.shift_v());
    }
    pascal_.resize(degree + 1);
    for (unsigned n = 0; n <= degree; ++n)
      for (unsigned k = 0; k <= n; ++k) pascal_[n].push_back(binomial(n, k));
  }

  std::size_t cols() const noexcept { return eu_.size(); }
  unsigned degree() const noexcept { return degree_; }

  /// Row giving the coefficient of u^i v^j.
  std::vector<BigRational> row(unsigned i, unsigned j) const {
    std::vector<BigRational> out(cols());
    if (i + j > degree_) return out;
    for (std::size_t c = 0; c < cols(); ++c) {
      const unsigned a = eu_[c], b = ev_[c];
      if (a < i || b < j) continue;
      out[c] = pu_[a - i] * pv_[b - j] * BigRational(pascal_[a][i] * pascal_[b][j]);
    }
    return out;
  }

  /// All partials of order < m vanish at the frame centre.
  void append_vanishing(RatMatrix& m, unsigned mult) const {
    for (unsigned t = 0; t < mult; ++t)
      for (unsigned i = t + 1; i-- > 0;) m.append_row(row(i, t - i));
  }

 private:
  unsigned degree_;
  std::vector<unsigned> eu_, ev_;
  std::vector<BigRational> pu_, pv_;
  std::vector<std::vector<BigInt>> pascal_;
};

RatMatrix empty_rows(std::size_t cols) { return RatMatrix(0, cols); }

std::vector<BigRational> evaluation_row(const PlanePoint& p, unsigned degree) {
  const auto basis = monomial_basis(degree);
  std::vector<BigRational> row;
  row.reserve(basis.size());
  for (const auto& e : basis) {
    BigInt v = 1;
    for (unsigned k = 0; k < e.x; ++k) v *= p[0];
    for (unsigned k = 0; k < e.y; ++k) v *= p[1];
    for (unsigned k = 0; k < e.z; ++k) v *= p[2];
    row.emplace_back(v);
  }
  return row;
}

void check_bundle(const DelPezzoConfig& config, const LineBundle& bundle) {
  if (bundle.mults.size() != config.r())
    throw Error(Errc::InvalidArgument, "bundle " + bundle.str() + " does not match r = " + std::to_string(config.r()));
  if (bundle.d == 0) throw Error(Errc::InvalidArgument, "bundle degree must be positive");
}

}  // namespace

// ---------------------------------------------------------------- generality

GeneralityReport check_generality(std::span<const PlanePoint> points, unsigned r) {
  if (points.size() != r) throw Error(Errc::InvalidArgument, "expected " + std::to_string(r) + " points");
  GeneralityReport rep;
  auto fail = [&](std::string what, std::vector<std::size_t> idx) {
    rep.passed = false;
    rep.violation = std::move(what);
    rep.indices = std::move(idx);
    return rep;
  };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (points[i] == points[j]) return fail("distinct", {i, j});
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      for (std::size_t k = j + 1; k < r; ++k)
        if (collinear(points[i], points[j], points[k])) return fail("collinear triple", {i, j, k});
  if (r >= 6) {
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      if (std::popcount(mask) != 6) continue;
      RatMatrix m;
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < r; ++i)
        if (mask & (1u << i)) {
          m.append_row(evaluation_row(points[i], 2));
          idx.push_back(i);
        }
      if (rank(m) < 6) return fail("six on a conic", idx);
    }
  }
  if (r == 8) {
    for (std::size_t i = 0; i < r; ++i) {
      RatMatrix m;
      for (std::size_t j = 0; j < r; ++j)
        if (j != i) m.append_row(evaluation_row(points[j], 3));
      LocalExpansion(ProjectiveFrame(points[i]), 3).append_vanishing(m, 2);
      if (rank(m) < 10) return fail("singular cubic", {i});
    }
  }
  return rep;
}

// ---------------------------------------------------------------- configurations

DelPezzoConfig::DelPezzoConfig(std::vector<PlanePoint> points) : points_(std::move(points)) {
  if (points_.empty() || points_.size() > 8)
    throw Error(Errc::InvalidArgument, "r must lie in 1..8, got " + std::to_string(points_.size()));
  report_ = check_generality(points_, r());
  if (!report_.passed) {
    std::string idx;
    for (auto i : report_.indices) idx += (idx.empty() ? "" : ",") + std::to_string(i + 1);
    throw Error(Errc::InvalidArgument, "base points not general: " + report_.violation + " {" + idx + "}");
  }
  for (const auto& p : points_) frames_.emplace_back(p);
}

DelPezzoConfig DelPezzoConfig::prefix(unsigned s) const {
  if (s == 0 || s > r()) throw Error(Errc::InvalidArgument, "prefix size out of range");
  return DelPezzoConfig(std::vector<PlanePoint>(points_.begin(), points_.begin() + s));
}

// ---------------------------------------------------------------- surface points

SurfacePoint SurfacePoint::exterior(const PlanePoint& p) {
  SurfacePoint q;
  q.point_ = p;
  return q;
}

SurfacePoint SurfacePoint::on_exceptional(unsigned base_index, const BigRational& dx, const BigRational& dy) {
  if (base_index == 0) throw Error(Errc::InvalidArgument, "exceptional divisors are numbered from 1");
  const std::array<BigRational, 2> raw{dx, dy};
  IntVector v = primitive_integer_vector(std::span<const BigRational>(raw));
  if (v[0] == 0 && v[1] == 0) throw Error(Errc::InvalidArgument, "zero tangent direction");
  SurfacePoint q;
  q.base_index_ = base_index;
  q.direction_ = {v[0], v[1]};
  return q;
}

std::string SurfacePoint::str() const {
  if (is_exterior()) return point_->str();
  return "E" + std::to_string(base_index_) + "(" + direction_[0].get_str() + ":" + direction_[1].get_str() + ")";
}

void validate_fat_points(const DelPezzoConfig& config, std::span<const FatPoint> z) {
  for (std::size_t a = 0; a < z.size(); ++a) {
    const auto& q = z[a].point;
    if (z[a].multiplicity == 0) throw Error(Errc::InvalidArgument, "multiplicity of " + q.str() + " must be positive");
    if (q.is_exterior()) {
      for (unsigned i = 1; i <= config.r(); ++i)
        if (q.plane_point() == config.point(i))
          throw Error(Errc::InvalidPoint, q.str() + " is the base point P" + std::to_string(i));
    } else if (q.base_index() > config.r()) {
      throw Error(Errc::InvalidArgument, "no exceptional divisor E" + std::to_string(q.base_index()));
    }
    for (std::size_t b = 0; b < a; ++b)
      if (z[b].point == q) throw Error(Errc::InvalidArgument, "repeated point " + q.str());
  }
}

std::vector<FatPoint> uniform(std::span<const SurfacePoint> points, unsigned m) {
  std::vector<FatPoint> out;
  for (const auto& p : points) out.push_back({p, m});
  return out;
}

// ---------------------------------------------------------------- condition rows

RatMatrix base_condition_rows(const DelPezzoConfig& config, const LineBundle& bundle, unsigned k) {
  check_bundle(config, bundle);
  const unsigned degree = k * bundle.d;
  RatMatrix m = empty_rows(monomial_count(degree));
  for (unsigned i = 1; i <= config.r(); ++i) {
    const unsigned mult = k * bundle.mults[i - 1];
    if (mult == 0) continue;
    LocalExpansion(config.frame(i), degree).append_vanishing(m, mult);
  }
  return m;
}

RatMatrix point_condition_rows(const DelPezzoConfig& config, const LineBundle& bundle, unsigned k,
                               const SurfacePoint& q, unsigned m, Chart chart) {
  check_bundle(config, bundle);
  const unsigned degree = k * bundle.d;
  RatMatrix out = empty_rows(monomial_count(degree));
  if (q.is_exterior()) {
    for (unsigned i = 1; i <= config.r(); ++i)
      if (q.plane_point() == config.point(i))
        throw Error(Errc::InvalidPoint, q.str() + " is a base point; give it as a direction on E" + std::to_string(i));
    LocalExpansion(ProjectiveFrame(q.plane_point()), degree).append_vanishing(out, m);
    return out;
  }
  const unsigned i = q.base_index();
  if (i > config.r()) throw Error(Errc::InvalidArgument, "no exceptional divisor E" + std::to_string(i));
  const auto& dir = q.direction();
  if (chart == Chart::Auto) chart = dir[0] != 0 ? Chart::Slope : Chart::Mirror;
  if (chart == Chart::Slope && dir[0] == 0) throw Error(Errc::InvalidArgument, "slope chart misses direction (0:1)");
  if (chart == Chart::Mirror && dir[1] == 0) throw Error(Errc::InvalidArgument, "mirror chart misses direction (1:0)");
  const bool slope = chart == Chart::Slope;
  // Slope chart: x^a y^b -> u^{a+b-K} (s + w)^b. Mirror: u^{a+b-K} (w0 + w)^a.
  const BigRational t0 = slope ? make_rational(dir[1], dir[0]) : make_rational(dir[0], dir[1]);
  const unsigned base = k * bundle.mults[i - 1];
  const LocalExpansion local(config.frame(i), degree);
  std::vector<BigRational> t0pow{1};
  for (unsigned e = 1; e <= degree; ++e) t0pow.push_back(t0pow.back() * t0);

  for (unsigned t = 0; t < m; ++t)
    for (unsigned p = t + 1; p-- > 0;) {
      const unsigned q_exp = t - p;
      std::vector<BigRational> row(local.cols());
      const unsigned total = p + base;
      if (total <= degree) {
        for (unsigned b = 0; b <= total; ++b) {
          const unsigned a = total - b;
          const unsigned shifted = slope ? b : a;
          if (shifted < q_exp) continue;
          const BigRational w = BigRational(binomial(shifted, q_exp)) * t0pow[shifted - q_exp];
          if (w == 0) continue;
          const auto lr = local.row(a, b);
          for (std::size_t c = 0; c < row.size(); ++c)
            if (lr[c] != 0) row[c] += w * lr[c];
        }
      }
      out.append_row(row);
    }
  return out;
}

RatMatrix stacked_system(const DelPezzoConfig& config, const LineBundle& bundle, unsigned k,
                         std::span<const FatPoint> z) {
  RatMatrix m = base_condition_rows(config, bundle, k);
  for (const auto& fp : z) m.append(point_condition_rows(config, bundle, k, fp.point, fp.multiplicity));
  return m;
}

// ---------------------------------------------------------------- oracle

AdaptedTransformData mult_on_blowup(const DelPezzoConfig& config, const LineBundle& bundle, unsigned k,
                                    const HomogeneousForm& f, const SurfacePoint& q) {
  check_bundle(config, bundle);
  if (f.degree() != k * bundle.d)
    throw Error(Errc::InvalidArgument, "form of degree " + std::to_string(f.degree()) + " is not in |" +
                                           std::to_string(k) + "L|");
  AdaptedTransformData out;
  for (unsigned i = 1; i <= config.r(); ++i) {
    const unsigned mu = multiplicity_at(f, config.point(i));
    const unsigned need = k * bundle.mults[i - 1];
    if (mu < need)
      throw Error(Errc::NotInSystem, "multiplicity " + std::to_string(mu) + " at P" + std::to_string(i) +
                                         " is below " + std::to_string(need));
    out.base_mults.push_back(mu);
    out.excess.push_back(mu - need);
  }
  if (q.is_exterior()) {
    for (unsigned i = 1; i <= config.r(); ++i)
      if (q.plane_point() == config.point(i)) throw Error(Errc::InvalidPoint, q.str() + " is a base point");
    out.proper_mult = out.total_mult = multiplicity_at(f, q.plane_point());
    return out;
  }
  const unsigned i = q.base_index();
  if (i > config.r()) throw Error(Errc::InvalidArgument, "no exceptional divisor E" + std::to_string(i));
  const LocalPolynomial g = dehomogenize_at(f, config.frame(i));
  const unsigned d = f.degree();
  const auto& dir = q.direction();
  const bool slope = dir[0] != 0;
  // Pull back through the chart, strip the exceptional divisor entirely, and
  // measure the strict transform at the chosen direction.
  LocalPolynomial chart(d, d);
  for (unsigned a = 0; a <= d; ++a)
    for (unsigned b = 0; a + b <= d; ++b) chart(a + b, slope ? b : a) = g(a, b);
  const unsigned mu = out.base_mults[i - 1];
  const BigRational t0 = slope ? make_rational(dir[1], dir[0]) : make_rational(dir[0], dir[1]);
  const LocalPolynomial strict = chart.divide_first(mu).shift_second(t0);
  out.proper_mult = *strict.order();
  out.total_mult = out.excess[i - 1] + out.proper_mult;
  return out;
}

// ---------------------------------------------------------------- directions

SurfacePoint direction_of_line(const DelPezzoConfig& config, unsigned i, const HomogeneousForm& line) {
  if (line.degree() != 1) throw Error(Errc::InvalidArgument, "expected a line");
  const HomogeneousForm g = compose(line, config.frame(i).inverse());
  if (g[Exponent{0, 0, 1}] != 0) throw Error(Errc::InvalidArgument, "line does not pass through P" + std::to_string(i));
  const BigRational& a = g[Exponent{1, 0, 0}];
  const BigRational& b = g[Exponent{0, 1, 0}];
  return SurfacePoint::on_exceptional(i, b, -a);
}

HomogeneousForm line_of_direction(const DelPezzoConfig& config, const SurfacePoint& q) {
  if (q.is_exterior()) throw Error(Errc::InvalidArgument, "expected a point on an exceptional divisor");
  const auto& dir = q.direction();
  const HomogeneousForm local =
      HomogeneousForm::linear(BigRational(dir[1]), BigRational(-dir[0]), BigRational(0));
  return compose(local, config.frame(q.base_index()).matrix()).primitive();
}

SurfacePoint toward(const DelPezzoConfig& config, unsigned i, const PlanePoint& target) {
  return direction_of_line(config, i, line_through(config.point(i), target));
}

// ---------------------------------------------------------------- sampling

long Sampler::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng_() % span);
}

PlanePoint Sampler::plane_point() {
  const long x = uniform(-20, 20);
  const long y = uniform(-20, 20);
  return PlanePoint(x, y, 1);
}

std::array<BigRational, 2> Sampler::direction() {
  for (;;) {
    const long a = uniform(-20, 20);
    const long b = uniform(-20, 20);
    if (a != 0 || b != 0) return {BigRational(a), BigRational(b)};
  }
}

DelPezzoConfig sample_config(unsigned r, Sampler& sampler) {
  if (r == 0 || r > 8) throw Error(Errc::InvalidArgument, "r must lie in 1..8");
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::vector<PlanePoint> pts;
    for (unsigned i = 0; i < r; ++i) pts.push_back(sampler.plane_point());
    if (check_generality(pts, r).passed) return DelPezzoConfig(std::move(pts));
  }
  throw Error(Errc::ConstructionFailed, "no general configuration after " + std::to_string(kMaxRetries) + " samples");
}

PlanePoint sample_exterior(const DelPezzoConfig& config, Sampler& sampler) {
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    const PlanePoint p = sampler.plane_point();
    bool ok = true;
    for (unsigned i = 1; i <= config.r() && ok; ++i) {
      if (p == config.point(i)) ok = false;
      for (unsigned j = i + 1; j <= config.r() && ok; ++j)
        if (collinear(config.point(i), config.point(j), p)) ok = false;
    }
    if (ok) return p;
  }
  throw Error(Errc::ConstructionFailed, "no exterior point after " + std::to_string(kMaxRetries) + " samples");
}

}  // namespace fatpoints
