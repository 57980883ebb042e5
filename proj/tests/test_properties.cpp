#include <doctest.h>

#include <numeric>

#include "fatpoints/alpha.hpp"
#include "fatpoints/error.hpp"
#include "fatpoints/scenarios.hpp"

using namespace fatpoints;

namespace {

SurfacePoint random_point(const DelPezzoConfig& c, Sampler& s) {
  if (s.uniform(0, 2) == 0) return SurfacePoint::exterior(sample_exterior(c, s));
  const auto d = s.direction();
  return SurfacePoint::on_exceptional(static_cast<unsigned>(s.uniform(1, c.r())), d[0], d[1]);
}

std::vector<FatPoint> random_scheme(const DelPezzoConfig& c, Sampler& s, std::size_t n, unsigned max_mult) {
  std::vector<FatPoint> z;
  while (z.size() < n) {
    const SurfacePoint q = random_point(c, s);
    if (std::none_of(z.begin(), z.end(), [&](const FatPoint& f) { return f.point == q; }))
      z.push_back({q, static_cast<unsigned>(s.uniform(1, max_mult))});
  }
  return z;
}

}  // namespace

TEST_CASE("alpha is monotone, subadditive and respects inclusion") {
  Sampler s(2024);
  for (int trial = 0; trial < 50; ++trial) {
    CAPTURE(trial);
    const unsigned r = static_cast<unsigned>(s.uniform(1, 8));
    const DelPezzoConfig c = sample_config(r, s);
    const LineBundle l = LineBundle::anticanonical(r);
    const auto z = random_scheme(c, s, static_cast<std::size_t>(s.uniform(1, 3)), 2);
    const std::vector<SurfacePoint> pts = [&] {
      std::vector<SurfacePoint> v;
      for (const auto& f : z) v.push_back(f.point);
      return v;
    }();
    const auto seq = initial_sequence(c, l, pts, 4);
    for (std::size_t m = 1; m < seq.values.size(); ++m) CHECK(seq.values[m - 1] <= seq.values[m]);
    for (unsigned a = 1; a <= 4; ++a)
      for (unsigned b = 1; a + b <= 4; ++b) CHECK(seq.values[a + b - 1] <= seq.values[a - 1] + seq.values[b - 1]);
    const unsigned full = alpha(c, l, z).value;
    std::vector<FatPoint> sub(z.begin(), z.end() - 1);
    if (!sub.empty()) CHECK(alpha(c, l, sub).value <= full);
    std::vector<FatPoint> thinner = z;
    if (thinner[0].multiplicity > 1) {
      --thinner[0].multiplicity;
      CHECK(alpha(c, l, thinner).value <= full);
    }
  }
}

TEST_CASE("multiplicity bounds on the blow-up") {
  Sampler s(7);
  for (int trial = 0; trial < 30; ++trial) {
    CAPTURE(trial);
    const unsigned r = static_cast<unsigned>(s.uniform(1, 6));
    const DelPezzoConfig c = sample_config(r, s);
    const LineBundle l = LineBundle::anticanonical(r);
    const std::vector<FatPoint> z{{random_point(c, s), static_cast<unsigned>(s.uniform(1, 4))}};
    const AlphaResult a = alpha(c, l, z);
    const unsigned k = a.value;
    const auto d = mult_on_blowup(c, l, k, a.witness, z[0].point);
    CHECK(d.total_mult >= z[0].multiplicity);
    CHECK(d.total_mult == std::accumulate(d.excess.begin(), d.excess.end(), 0u) + d.proper_mult);
    if (z[0].point.is_exterior()) {
      CHECK(d.total_mult <= 3 * k);
    } else {
      const unsigned i = z[0].point.base_index();
      const unsigned plane_mult = multiplicity_at(a.witness, c.point(i));
      CHECK(d.total_mult <= 2 * plane_mult - k * l.mults[i - 1]);
    }
  }
  // A product of three lines through an exterior point attains 3k at k = 1.
  const DelPezzoConfig c = sample_config(3, s);
  const PlanePoint q = sample_exterior(c, s);
  HomogeneousForm f = line_through(c.point(1), q) * line_through(c.point(2), q) * line_through(c.point(3), q);
  CHECK(mult_on_blowup(c, LineBundle::anticanonical(3), 1, f, SurfacePoint::exterior(q)).total_mult == 3);
}

TEST_CASE("long runs only occur for exceptional support") {
  Sampler s(99);
  for (int trial = 0; trial < 12; ++trial) {
    CAPTURE(trial);
    const unsigned r = static_cast<unsigned>(s.uniform(1, 3));
    const DelPezzoConfig c = sample_config(r, s);
    const auto z = random_scheme(c, s, 1 + static_cast<std::size_t>(trial % 2), 1);
    std::vector<SurfacePoint> pts;
    for (const auto& f : z) pts.push_back(f.point);
    const auto seq = initial_sequence(c, LineBundle::anticanonical(r), pts, 8);
    if (max_equal_run(seq.values).length >= 4)
      for (const auto& q : pts) CHECK_FALSE(q.is_exterior());
  }
}

TEST_CASE("alpha does not drop when more points are blown up") {
  Sampler s(4242);
  for (int trial = 0; trial < 20; ++trial) {
    CAPTURE(trial);
    const unsigned t = static_cast<unsigned>(s.uniform(2, 4));
    const unsigned sr = static_cast<unsigned>(s.uniform(1, t - 1));
    const DelPezzoConfig big = sample_config(t, s);
    const DelPezzoConfig small = big.prefix(sr);
    std::vector<FatPoint> z;
    if (s.uniform(0, 1) == 0) {
      z.push_back({SurfacePoint::exterior(sample_exterior(big, s)), static_cast<unsigned>(s.uniform(1, 3))});
    } else {
      const auto d = s.direction();
      z.push_back({SurfacePoint::on_exceptional(static_cast<unsigned>(s.uniform(1, sr)), d[0], d[1]),
                   static_cast<unsigned>(s.uniform(1, 4))});
    }
    CHECK(alpha(big, LineBundle::anticanonical(t), z).value >= alpha(small, LineBundle::anticanonical(sr), z).value);
  }
}

TEST_CASE("alpha strictly increases after five steps on S1 and S2") {
  for (const char* id : {"S1.single", "S1.pair", "S2.onL", "S2.offL", "S2.mixed"}) {
    CAPTURE(id);
    Sampler s(5);
    const ScenarioWitness w = build_scenario(scenario_surface(id), id, s);
    const auto seq = initial_sequence(w.config, LineBundle::anticanonical(w.config.r()), w.z, 12);
    for (unsigned m = 1; m <= 7; ++m) CHECK(seq.values[m - 1] < seq.values[m + 4]);
  }
}

TEST_CASE("every reported witness passes the independent oracle") {
  Sampler s(31337);
  for (int trial = 0; trial < 25; ++trial) {
    CAPTURE(trial);
    const unsigned r = static_cast<unsigned>(s.uniform(1, 8));
    const DelPezzoConfig c = sample_config(r, s);
    const LineBundle l = LineBundle::anticanonical(r);
    const auto z = random_scheme(c, s, static_cast<std::size_t>(s.uniform(1, 3)), 3);
    const AlphaResult a = alpha(c, l, z);
    CHECK(a.witness.degree() == 3 * a.value);
    CHECK(witness_satisfies(c, l, a.value, a.witness, z));
    for (const auto& f : z) CHECK(mult_on_blowup(c, l, a.value, a.witness, f.point).total_mult >= f.multiplicity);
    if (a.value > 1) {
      AlphaOptions lower;
      lower.k_max = a.value - 1;
      CHECK_THROWS_AS(alpha(c, l, z, lower), Error);
    }
  }
}
