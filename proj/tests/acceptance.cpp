// One PASS/FAIL line per acceptance criterion, with wall time and limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "fatpoints/alpha.hpp"
#include "fatpoints/error.hpp"
#include "fatpoints/scenarios.hpp"

using namespace fatpoints;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::vector<SurfacePoint> exterior_points(const DelPezzoConfig& c, Sampler& s, std::size_t n) {
  std::vector<SurfacePoint> z;
  while (z.size() < n) {
    const SurfacePoint q = SurfacePoint::exterior(sample_exterior(c, s));
    if (std::find(z.begin(), z.end(), q) == z.end()) z.push_back(q);
  }
  return z;
}

std::string join(const std::vector<unsigned>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

Outcome s1_sequence() {
  Outcome o;
  Sampler s(1);
  const DelPezzoConfig c = sample_config(1, s);
  const std::vector<SurfacePoint> z{SurfacePoint::on_exceptional(1, 3, 7)};
  const auto seq = initial_sequence(c, LineBundle::anticanonical(1), z, 15);
  for (unsigned m = 1; m <= 15; ++m)
    if (seq.values[m - 1] != (m + 4) / 5) o.fail("values " + join(seq.values));
  return o;
}

Outcome scenarios(double limit) {
  Outcome o;
  for (const auto& id : scenario_ids()) {
    const auto t0 = std::chrono::steady_clock::now();
    Sampler s(2);
    const ScenarioReport rep = verify_scenario(build_scenario(scenario_surface(id), id, s));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!rep.passed) o.fail(id + " values " + join(rep.values));
    if (secs > limit) o.fail(id + " took " + std::to_string(secs) + "s");
  }
  return o;
}

Outcome h0_table() {
  Outcome o;
  Sampler s(3);
  for (unsigned r = 1; r <= 8; ++r)
    for (int trial = 0; trial < 3; ++trial) {
      const DelPezzoConfig c = sample_config(r, s);
      for (unsigned m = 1; m <= 4; ++m) {
        const auto got = h0_computed(c, LineBundle::anticanonical(r), m);
        if (got != h0_closed_form(r, m))
          o.fail("r=" + std::to_string(r) + " m=" + std::to_string(m) + " got " + std::to_string(got));
      }
    }
  return o;
}

Outcome chudnovsky() {
  Outcome o;
  Sampler s(4);
  for (unsigned r = 1; r <= 6; ++r)
    for (int trial = 0; trial < 10; ++trial) {
      const DelPezzoConfig c = sample_config(r, s);
      const auto z = exterior_points(c, s, h0_closed_form(r, 1));
      const ChudnovskyReport rep = chudnovsky_check(c, z, 4);
      if (rep.alpha_z < 2) o.fail("r=" + std::to_string(r) + " alpha(Z)=" + std::to_string(rep.alpha_z));
      if (!rep.passed) o.fail("r=" + std::to_string(r) + " bound " + rep.bound.get_str() + " violated");
    }
  // alpha(Z) = 1: one point, exterior or on an exceptional curve.
  for (int trial = 0; trial < 10; ++trial) {
    const unsigned r = static_cast<unsigned>(s.uniform(1, 6));
    const DelPezzoConfig c = sample_config(r, s);
    std::vector<SurfacePoint> z;
    if (trial % 2 == 0) {
      z = exterior_points(c, s, 1);
    } else {
      const auto d = s.direction();
      z.push_back(SurfacePoint::on_exceptional(1, d[0], d[1]));
    }
    const ChudnovskyReport rep = chudnovsky_check(c, z, 10);
    if (rep.alpha_z != 1 || !rep.passed) o.fail("alpha(Z)=1 trial " + std::to_string(trial));
  }
  return o;
}

Outcome minimal_subsets() {
  Outcome o;
  Sampler s(5);
  const DelPezzoConfig c = sample_config(1, s);
  const LineBundle l = LineBundle::anticanonical(1);
  for (std::size_t n : {9u, 10u}) {
    const auto z = exterior_points(c, s, n);
    const auto w = minimal_subset_preserving_alpha(c, l, z);
    if (w.size() != minimal_subset_bound(1, 2)) o.fail(std::to_string(n) + " points gave |W|=" + std::to_string(w.size()));
  }
  return o;
}

Outcome bundle_comparison() {
  Outcome o;
  Sampler s(6);
  const DelPezzoConfig c = sample_config(1, s);
  const std::vector<SurfacePoint> z{SurfacePoint::on_exceptional(1, -5, 2)};
  const auto cubic = initial_sequence(c, LineBundle::anticanonical(1), z, 12);
  const auto conic = initial_sequence(c, LineBundle{2, {1}}, z, 12);
  if (max_equal_run(cubic.values).length != 5) o.fail("(3;1) values " + join(cubic.values));
  if (max_equal_run(conic.values).length != 3) o.fail("(2;1) values " + join(conic.values));
  return o;
}

Outcome properties() {
  Outcome o;
  Sampler s(7);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned r = static_cast<unsigned>(s.uniform(1, 8));
    const DelPezzoConfig c = sample_config(r, s);
    const LineBundle l = LineBundle::anticanonical(r);
    std::vector<SurfacePoint> z;
    if (trial % 2 == 0) {
      z = exterior_points(c, s, 1 + trial % 3);
    } else {
      const auto d = s.direction();
      z.push_back(SurfacePoint::on_exceptional(static_cast<unsigned>(s.uniform(1, r)), d[0], d[1]));
    }
    const auto seq = initial_sequence(c, l, z, 4);
    for (unsigned m = 1; m <= 4; ++m) {
      if (m > 1 && seq.values[m - 2] > seq.values[m - 1]) o.fail("not monotone: " + join(seq.values));
      for (unsigned a = 1; a < m; ++a)
        if (seq.values[m - 1] > seq.values[a - 1] + seq.values[m - a - 1]) o.fail("not subadditive: " + join(seq.values));
      const auto demand = uniform(z, m);
      if (!witness_satisfies(c, l, seq.values[m - 1], seq.results[m - 1].witness, demand))
        o.fail("witness rejected by the oracle");
    }
    if (z.size() > 1) {
      const std::vector<SurfacePoint> sub(z.begin(), z.end() - 1);
      if (alpha(c, l, uniform(sub, 2)).value > seq.values[1]) o.fail("inclusion violated");
    }
  }
  return o;
}

Outcome falsify() {
  Outcome o;
  for (const auto& family : falsify_families()) {
    // Family ids start with the surface, e.g. S6.nonconcurrent.
    const unsigned r = static_cast<unsigned>(family[1] - '0');
    const FalsifyReport rep = falsify_random(r, family, 20, 8);
    if (!rep.passed) o.fail(family);
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"1 S1 sequence to m=15 is ceil(m/5)", 10, s1_sequence},
      {"2 all named cases verify (each < 15s)", 21 * 15, [] { return scenarios(15); }},
      {"3 h0 matches closed form, r 1..8, m 1..4", 30, h0_table},
      {"4 Chudnovsky-type bound", 60, chudnovsky},
      {"5 minimal subsets have 9 points", 10, minimal_subsets},
      {"6 bundle comparison runs 5 and 3", 10, bundle_comparison},
      {"7 monotone, subadditive, inclusion, oracle", 60, properties},
      {"8 falsification, 20 trials per family", 60, falsify},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit) o.fail("time limit " + std::to_string(c.limit) + "s exceeded");
    std::printf("%s  %-48s %8.2fs / %.0fs%s%s\n", o.ok ? "PASS" : "FAIL", c.name, secs, c.limit,
                o.ok ? "" : "  ", o.detail.c_str());
    if (!o.ok) ++failures;
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
