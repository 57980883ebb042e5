#include <doctest.h>

#include "fatpoints/blowup.hpp"
#include "fatpoints/error.hpp"

using namespace fatpoints;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvalidArgument;
}

std::size_t kernel_dim(const RatMatrix& m) { return m.cols() - rank(m); }

}  // namespace

TEST_CASE("generality predicates") {
  const std::vector<PlanePoint> frame{PlanePoint(1, 0, 0), PlanePoint(0, 1, 0), PlanePoint(0, 0, 1)};
  CHECK(check_generality(frame, 3).passed);

  const std::vector<PlanePoint> coll{PlanePoint(0, 0, 1), PlanePoint(1, 1, 1), PlanePoint(5, 2, 1),
                                     PlanePoint(2, 2, 1)};
  const auto rep = check_generality(coll, 4);
  CHECK_FALSE(rep.passed);
  CHECK(rep.violation == "collinear triple");
  CHECK(rep.indices == std::vector<std::size_t>{0, 1, 3});

  const std::vector<PlanePoint> dup{PlanePoint(1, 2, 1), PlanePoint(2, 4, 2)};
  CHECK(check_generality(dup, 2).violation == "distinct");

  const std::vector<PlanePoint> six_on_circle{PlanePoint(1, 0, 1),  PlanePoint(0, 1, 1), PlanePoint(3, 4, 5),
                                              PlanePoint(4, 3, 5),  PlanePoint(5, 12, 13),
                                              PlanePoint(12, 5, 13)};
  CHECK(check_generality(six_on_circle, 6).violation == "six on a conic");
}

TEST_CASE("generality of eight points on the nodal cubic") {
  // Parameters 2, 3, 4, 5, -2, -3, -4, -5. Exact determinants computed
  // separately: the points for t = 2, -3, -5 (indices 0, 5, 7) are collinear.
  std::vector<PlanePoint> pts;
  for (long t : {2, 3, 4, 5, -2, -3, -4, -5}) pts.push_back(nodal_cubic_point(t));
  const auto rep = check_generality(pts, 8);
  CHECK_FALSE(rep.passed);
  CHECK(rep.violation == "collinear triple");
  CHECK(rep.indices == std::vector<std::size_t>{0, 5, 7});
}

TEST_CASE("configurations reject special points") {
  CHECK(code_of([] {
          DelPezzoConfig({PlanePoint(0, 0, 1), PlanePoint(1, 0, 1), PlanePoint(2, 0, 1)});
        }) == Errc::InvalidArgument);
  CHECK(code_of([] { DelPezzoConfig(std::vector<PlanePoint>{}); }) == Errc::InvalidArgument);
  Sampler s(1);
  const DelPezzoConfig c = sample_config(8, s);
  CHECK(c.r() == 8);
  CHECK(c.report().passed);
  CHECK(c.prefix(3).r() == 3);
}

TEST_CASE("surface points") {
  const SurfacePoint q = SurfacePoint::on_exceptional(2, make_rational(-2, 3), 4);
  CHECK(q.base_index() == 2);
  CHECK(q.direction()[0] == 1);
  CHECK(q.direction()[1] == -6);
  CHECK(q == SurfacePoint::on_exceptional(2, 1, -6));
  CHECK_FALSE(q == SurfacePoint::on_exceptional(1, 1, -6));
  CHECK(code_of([] { SurfacePoint::on_exceptional(1, 0, 0); }) == Errc::InvalidArgument);
  CHECK(code_of([] { SurfacePoint::on_exceptional(0, 1, 0); }) == Errc::InvalidArgument);
  CHECK(SurfacePoint::exterior(PlanePoint(1, 2, 3)).is_exterior());
}

TEST_CASE("base condition row counts") {
  Sampler s(2);
  const DelPezzoConfig c3 = sample_config(3, s);
  CHECK(base_condition_rows(c3, LineBundle::anticanonical(3), 2).rows() == 9);
  const DelPezzoConfig c1 = sample_config(1, s);
  const RatMatrix conic_rows = base_condition_rows(c1, LineBundle{2, {1}}, 1);
  CHECK(conic_rows.rows() == 1);
  CHECK(conic_rows.cols() == 6);
  const DelPezzoConfig c8 = sample_config(8, s);
  const RatMatrix cubic_rows = base_condition_rows(c8, LineBundle::anticanonical(8), 1);
  CHECK(cubic_rows.rows() == 8);
  CHECK(kernel_dim(cubic_rows) == 2);
  CHECK(code_of([&] { base_condition_rows(c8, LineBundle::anticanonical(7), 1); }) == Errc::InvalidArgument);
}

TEST_CASE("point condition row counts") {
  Sampler s(3);
  const DelPezzoConfig c = sample_config(2, s);
  const LineBundle l = LineBundle::anticanonical(2);
  const SurfacePoint ext = SurfacePoint::exterior(sample_exterior(c, s));
  CHECK(point_condition_rows(c, l, 1, ext, 2).rows() == 3);
  for (unsigned k = 1; k <= 3; ++k)
    CHECK(point_condition_rows(c, l, k, SurfacePoint::on_exceptional(1, 2, 5), 1).rows() == 1);
  CHECK(point_condition_rows(c, l, 2, SurfacePoint::on_exceptional(2, 0, 1), 4).rows() == 10);
  CHECK(code_of([&] { point_condition_rows(c, l, 1, SurfacePoint::exterior(c.point(1)), 1); }) ==
        Errc::InvalidPoint);
  CHECK(code_of([&] { point_condition_rows(c, l, 1, SurfacePoint::on_exceptional(3, 1, 0), 1); }) ==
        Errc::InvalidArgument);
}

TEST_CASE("triple line through a single exceptional point") {
  Sampler s(4);
  const DelPezzoConfig c = sample_config(1, s);
  const LineBundle l = LineBundle::anticanonical(1);
  const SurfacePoint q = SurfacePoint::on_exceptional(1, 3, -7);
  RatMatrix m = base_condition_rows(c, l, 1);
  m.append(point_condition_rows(c, l, 1, q, 5));
  const auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  const HomogeneousForm line = line_of_direction(c, q);
  CHECK(HomogeneousForm::from_integers(3, k[0]) == line.pow(3).primitive());
  const auto data = mult_on_blowup(c, l, 1, line.pow(3), q);
  CHECK(data.total_mult == 5);
  CHECK(data.excess == std::vector<unsigned>{2});
  CHECK(data.proper_mult == 3);
}

TEST_CASE("oracle on smooth and nodal cubics") {
  const DelPezzoConfig c({standard_node()});
  const LineBundle l = LineBundle::anticanonical(1);
  const HomogeneousForm n = standard_nodal_cubic();
  const auto branch = mult_on_blowup(c, l, 1, n, SurfacePoint::on_exceptional(1, 1, 1));
  CHECK(branch.excess == std::vector<unsigned>{1});
  CHECK(branch.proper_mult == 1);
  CHECK(branch.total_mult == 2);
  CHECK(mult_on_blowup(c, l, 1, n, SurfacePoint::on_exceptional(1, 1, 2)).total_mult == 1);

  // y z^2 + x^3 + y^3 is smooth at the origin with tangent y = 0.
  HomogeneousForm smooth(3);
  smooth[Exponent{0, 1, 2}] = 1;
  smooth[Exponent{3, 0, 0}] = 1;
  smooth[Exponent{0, 3, 0}] = 1;
  const auto tangent = mult_on_blowup(c, l, 1, smooth, SurfacePoint::on_exceptional(1, 1, 0));
  CHECK(tangent.excess == std::vector<unsigned>{0});
  CHECK(tangent.proper_mult == 1);
  CHECK(tangent.total_mult == 1);
  CHECK(mult_on_blowup(c, l, 1, smooth, SurfacePoint::on_exceptional(1, 0, 1)).total_mult == 0);

  HomogeneousForm off(3);
  off[Exponent{3, 0, 0}] = 1;
  off[Exponent{0, 0, 3}] = 1;
  CHECK(code_of([&] { mult_on_blowup(c, l, 1, off, SurfacePoint::on_exceptional(1, 1, 0)); }) == Errc::NotInSystem);
}

TEST_CASE("slope and mirror charts cut the same conditions") {
  Sampler s(5);
  for (unsigned r : {1u, 3u, 5u}) {
    const DelPezzoConfig c = sample_config(r, s);
    const LineBundle l = LineBundle::anticanonical(r);
    for (const auto& q : {SurfacePoint::on_exceptional(1, 1, 1), SurfacePoint::on_exceptional(1, 2, -3)})
      for (unsigned k = 1; k <= 2; ++k)
        for (unsigned m = 1; m <= 4; ++m) {
          const RatMatrix base = base_condition_rows(c, l, k);
          RatMatrix a = base, b = base;
          a.append(point_condition_rows(c, l, k, q, m, Chart::Slope));
          b.append(point_condition_rows(c, l, k, q, m, Chart::Mirror));
          RatMatrix both = a;
          both.append(b);
          CHECK(rank(a) == rank(b));
          CHECK(rank(both) == rank(a));
        }
  }
}

TEST_CASE("directions and lines") {
  Sampler s(6);
  const DelPezzoConfig c = sample_config(4, s);
  for (unsigned i = 1; i <= 4; ++i)
    for (unsigned j = 1; j <= 4; ++j) {
      if (i == j) continue;
      const SurfacePoint q = toward(c, i, c.point(j));
      CHECK(q.base_index() == i);
      CHECK(line_of_direction(c, q) == line_through(c.point(i), c.point(j)));
    }
  const HomogeneousForm away = line_through(c.point(2), c.point(3));
  CHECK(code_of([&] { direction_of_line(c, 1, away); }) == Errc::InvalidArgument);
}

TEST_CASE("sampler is deterministic") {
  Sampler a(99), b(99);
  for (int i = 0; i < 20; ++i) CHECK(a.uniform(-20, 20) == b.uniform(-20, 20));
  Sampler c(7);
  for (int i = 0; i < 200; ++i) {
    const long v = c.uniform(-3, 4);
    CHECK(v >= -3);
    CHECK(v <= 4);
  }
  Sampler x(42), y(42);
  CHECK(sample_config(6, x).points() == sample_config(6, y).points());
}

TEST_CASE("fat point validation") {
  Sampler s(8);
  const DelPezzoConfig c = sample_config(2, s);
  const SurfacePoint q = SurfacePoint::on_exceptional(1, 1, 0);
  const std::vector<FatPoint> twice{{q, 1}, {q, 2}};
  CHECK(code_of([&] { validate_fat_points(c, twice); }) == Errc::InvalidArgument);
  const std::vector<FatPoint> zero{{q, 0}};
  CHECK(code_of([&] { validate_fat_points(c, zero); }) == Errc::InvalidArgument);
  const std::vector<FatPoint> base{{SurfacePoint::exterior(c.point(2)), 1}};
  CHECK(code_of([&] { validate_fat_points(c, base); }) == Errc::InvalidPoint);
}
