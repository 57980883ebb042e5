#include "fatpoints/scenarios.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "fatpoints/error.hpp"

namespace fatpoints {

namespace {

const std::map<std::string, unsigned>& surfaces() {
  static const std::map<std::string, unsigned> table{
      {"S1.single", 1}, {"S1.pair", 1},  {"S2.onL", 2},  {"S2.offL", 2},  {"S2.mixed", 2},
      {"S3", 3},        {"S4.a", 4},     {"S4.b", 4},    {"S4.b/Q", 4},   {"S4.b/Q1", 4},
      {"S4.b/Q2", 4},   {"S4.c", 4},     {"S4.d", 4},    {"S5.a", 5},     {"S5.b", 5},
      {"S6.a", 6},      {"S6.b", 6},     {"S7.a", 7},    {"S7.b", 7},     {"S7.c", 7},
      {"S8", 8}};
  return table;
}

std::optional<DelPezzoConfig> general(std::vector<PlanePoint> pts) {
  if (!check_generality(pts, static_cast<unsigned>(pts.size())).passed) return std::nullopt;
  return DelPezzoConfig(std::move(pts));
}

std::vector<PlanePoint> random_points(Sampler& s, unsigned n) {
  std::vector<PlanePoint> pts;
  for (unsigned i = 0; i < n; ++i) pts.push_back(s.plane_point());
  return pts;
}

SurfacePoint random_direction(unsigned i, Sampler& s) {
  const auto d = s.direction();
  return SurfacePoint::on_exceptional(i, d[0], d[1]);
}

long nonzero(Sampler& s) {
  for (;;)
    if (const long t = s.uniform(-20, 20); t != 0) return t;
}

bool is_base(const DelPezzoConfig& c, const PlanePoint& p) {
  return std::find(c.points().begin(), c.points().end(), p) != c.points().end();
}

/// Number of lines P_a P_b through p.
unsigned lines_through(const DelPezzoConfig& c, const PlanePoint& p) {
  unsigned n = 0;
  for (unsigned a = 1; a <= c.r(); ++a)
    for (unsigned b = a + 1; b <= c.r(); ++b)
      if (collinear(c.point(a), c.point(b), p)) ++n;
  return n;
}

HomogeneousForm line(const DelPezzoConfig& c, unsigned i, unsigned j) { return line_through(c.point(i), c.point(j)); }

std::vector<unsigned> ones(unsigned n) { return std::vector<unsigned>(n, 1); }

using Builder = std::function<std::optional<ScenarioWitness>(Sampler&)>;

ScenarioWitness make(std::string id, DelPezzoConfig config, std::vector<SurfacePoint> z, std::vector<unsigned> prefix,
                     unsigned next, HomogeneousForm curve, unsigned curve_m, std::string description) {
  return ScenarioWitness{std::move(id), std::move(config), std::move(z), std::move(prefix), next,
                         std::move(curve), curve_m, std::move(description)};
}

// Conic through P_1..P_4 and an extra point, or P_1..P_5; Q is its tangent
// direction at P_1 and the witness is conic times tangent.
std::optional<ScenarioWitness> tangent_case(const std::string& id, unsigned r, Sampler& s) {
  auto config = general(random_points(s, r));
  if (!config) return std::nullopt;
  std::vector<PlanePoint> five = config->points();
  if (r == 4) {
    five.push_back(s.plane_point());
    if (!check_generality(five, 5).passed) return std::nullopt;
  }
  const HomogeneousForm conic = conic_through_five(five);
  const HomogeneousForm tangent = tangent_line_at(conic, config->point(1));
  const SurfacePoint q = direction_of_line(*config, 1, tangent);
  return make(id, *config, {q}, ones(3), 2, conic * tangent, 3,
              "direction at P1 tangent to a conic through the base points");
}

std::optional<ScenarioWitness> build_s4b(const std::string& id, Sampler& s) {
  auto c = general(random_points(s, 4));
  if (!c) return std::nullopt;
  const HomogeneousForm l12 = line(*c, 1, 2);
  const HomogeneousForm l34 = line(*c, 3, 4);
  const PlanePoint q = intersect_lines(l12, l34);
  if (is_base(*c, q) || lines_through(*c, q) != 2) return std::nullopt;
  const SurfacePoint sq = SurfacePoint::exterior(q);
  const SurfacePoint q1 = toward(*c, 1, c->point(2));
  const SurfacePoint q2 = toward(*c, 2, c->point(1));
  std::vector<SurfacePoint> z;
  if (id == "S4.b") z = {sq, q1, q2};
  if (id == "S4.b/Q") z = {sq};
  if (id == "S4.b/Q1") z = {q1};
  if (id == "S4.b/Q2") z = {q2};
  return make(id, *c, z, ones(3), 2, l12 * l12 * l34, 3, "points of the strict transform of L12 over L12 and L34");
}

const std::map<std::string, Builder>& builders() {
  static const std::map<std::string, Builder> table{
      {"S1.single",
       [](Sampler& s) -> std::optional<ScenarioWitness> {
         auto c = general(random_points(s, 1));
         const SurfacePoint q = random_direction(1, s);
         const HomogeneousForm l = line_of_direction(*c, q);
         return make("S1.single", *c, {q}, ones(5), 2, l.pow(3), 5, "one point of E1");
       }},
      {"S1.pair",
       [](Sampler& s) -> std::optional<ScenarioWitness> {
         auto c = general(random_points(s, 1));
         const SurfacePoint q1 = random_direction(1, s), q2 = random_direction(1, s);
         if (q1 == q2) return std::nullopt;
         const HomogeneousForm l1 = line_of_direction(*c, q1), l2 = line_of_direction(*c, q2);
         return make("S1.pair", *c, {q1, q2}, {1, 1, 1, 2, 2, 2, 2}, 3, l1 * l1 * l2, 3, "two points of E1");
       }},
      {"S2.onL",
       [](Sampler& s) -> std::optional<ScenarioWitness> {
         auto c = general(random_points(s, 2));
         const HomogeneousForm l = line(*c, 1, 2);
         return make("S2.onL", *c, {toward(*c, 1, c->point(2)), toward(*c, 2, c->point(1))}, ones(5), 2, l.pow(3), 5,
                     "both exceptional points of the strict transform of L12");
       }},
      {"S2.offL",
       [](Sampler& s) -> std::optional<ScenarioWitness> {
         auto c = general(random_points(s, 2));
         const SurfacePoint q = random_direction(1, s);
         if (q == toward(*c, 1, c->point(2))) return std::nullopt;
         const HomogeneousForm l = line_of_direction(*c, q);
         return make("S2.offL", *c, {q}, ones(4), 2, l * l * line(*c, 1, 2), 4, "one point of E1 off L12");
       }},
      {"S2.mixed",
       [](Sampler& s) -> std::optional<ScenarioWitness> {
         auto c = general(random_points(s, 2));
         const SurfacePoint q = random_direction(1, s);
         const SurfacePoint q_on = toward(*c, 1, c->point(2));
         if (q == q_on) return std::nullopt;
         const HomogeneousForm l12 = line(*c, 1, 2);
         return make("S2.mixed", *c, {q, q_on}, {1, 1, 1, 2, 2, 2, 2}, 3, line_of_direction(*c, q) * l12 * l12, 3,
                     "a point of E1 and the point of E1 on L12");
       }},
      {"S3",
       [](Sampler& s) -> std::optional<ScenarioWitness> {
         auto c = general(random_points(s, 3));
         if (!c) return std::nullopt;
         const HomogeneousForm l12 = line(*c, 1, 2);
         return make("S3", *c, {toward(*c, 1, c->point(2))}, ones(4), 2, l12 * l12 * line(*c, 1, 3), 4,
                     "the point of E1 on L12");
       }},
      {"S4.a",
       [](Sampler& s) -> std::optional<ScenarioWitness> {
         auto c = general(random_points(s, 4));
         if (!c) return std::nullopt;
         const PlanePoint q = point_on_line(c->point(1), c->point(2), BigRational(nonzero(s)));
         if (is_base(*c, q) || lines_through(*c, q) != 1) return std::nullopt;
         const HomogeneousForm curve =
             line(*c, 1, 2) * line_through(q, c->point(3)) * line_through(q, c->point(4));
         return make("S4.a", *c, {SurfacePoint::exterior(q)}, ones(3), 2, curve, 3, "a point of L12");
       }},
      {"S4.b", [](Sampler& s) { return build_s4b("S4.b", s); }},
      {"S4.b/Q", [](Sampler& s) { return build_s4b("S4.b/Q", s); }},
      {"S4.b/Q1", [](Sampler& s) { return build_s4b("S4.b/Q1", s); }},
      {"S4.b/Q2", [](Sampler& s) { return build_s4b("S4.b/Q2", s); }},
      {"S4.c",
       [](Sampler& s) -> std::optional<ScenarioWitness> {
         auto c = general(random_points(s, 4));
         if (!c) return std::nullopt;
         std::vector<SurfacePoint> z;
         for (unsigned j = 2; j <= 4; ++j) z.push_back(toward(*c, 1, c->point(j)));
         return make("S4.c", *c, z, ones(3), 2, line(*c, 1, 2) * line(*c, 1, 3) * line(*c, 1, 4), 3,
                     "points of E1 on L12, L13, L14");
       }},
      {"S4.d", [](Sampler& s) { return tangent_case("S4.d", 4, s); }},
      {"S5.a", [](Sampler& s) { return tangent_case("S5.a", 5, s); }},
      {"S5.b",
       [](Sampler& s) -> std::optional<ScenarioWitness> {
         auto c = general(random_points(s, 5));
         if (!c) return std::nullopt;
         const HomogeneousForm l12 = line(*c, 1, 2), l34 = line(*c, 3, 4);
         const PlanePoint q = intersect_lines(l12, l34);
         if (is_base(*c, q) || lines_through(*c, q) != 2) return std::nullopt;
         return make("S5.b", *c, {SurfacePoint::exterior(q)}, ones(3), 2, l12 * l34 * line_through(q, c->point(5)), 3,
                     "the intersection of L12 and L34");
       }},
      {"S6.a",
       [](Sampler& s) -> std::optional<ScenarioWitness> {
         const PlanePoint apex = s.plane_point();
         std::vector<PlanePoint> pts;
         std::vector<HomogeneousForm> lines;
         for (int l = 0; l < 3; ++l) {
           const PlanePoint through = s.plane_point();
           if (through == apex) return std::nullopt;
           lines.push_back(line_through(apex, through));
           pts.push_back(point_on_line(apex, through, BigRational(nonzero(s))));
           pts.push_back(point_on_line(apex, through, BigRational(nonzero(s))));
         }
         auto c = general(pts);
         if (!c || is_base(*c, apex)) return std::nullopt;
         return make("S6.a", *c, {SurfacePoint::exterior(apex)}, ones(3), 2, lines[0] * lines[1] * lines[2], 3,
                     "common point of L12, L34, L56");
       }},
      {"S6.b",
       [](Sampler& s) -> std::optional<ScenarioWitness> {
         std::vector<PlanePoint> five = random_points(s, 5);
         if (!check_generality(five, 5).passed) return std::nullopt;
         const HomogeneousForm conic = conic_through_five(five);
         const HomogeneousForm tangent = tangent_line_at(conic, five[0]);
         const HomogeneousForm cut = line_through(s.plane_point(), s.plane_point());
         if (tangent.integer_coefficients() == cut.integer_coefficients()) return std::nullopt;
         five.push_back(intersect_lines(tangent, cut));
         auto c = general(five);
         if (!c) return std::nullopt;
         return make("S6.b", *c, {direction_of_line(*c, 1, tangent)}, ones(3), 2, conic * tangent, 3,
                     "point of E1 on L16, with L16 tangent at P1 to the conic through P1..P5");
       }},
      {"S7.a",
       [](Sampler& s) -> std::optional<ScenarioWitness> {
         std::vector<PlanePoint> pts{standard_node()};
         for (int i = 0; i < 6; ++i) {
           const long t = s.uniform(-20, 20);
           if (t == 1 || t == -1) return std::nullopt;
           pts.push_back(nodal_cubic_point(BigRational(t)));
         }
         auto c = general(pts);
         if (!c) return std::nullopt;
         return make("S7.a", *c, {SurfacePoint::on_exceptional(1, 1, 1), SurfacePoint::on_exceptional(1, 1, -1)},
                     ones(2), 2, standard_nodal_cubic(), 2, "branch directions of a nodal cubic with node P1");
       }},
      {"S7.b",
       [](Sampler& s) -> std::optional<ScenarioWitness> {
         std::vector<PlanePoint> pts;
         for (int i = 0; i < 7; ++i) {
           const long t = s.uniform(-20, 20);
           if (t == 1 || t == -1) return std::nullopt;
           pts.push_back(nodal_cubic_point(BigRational(t)));
         }
         auto c = general(pts);
         if (!c) return std::nullopt;
         return make("S7.b", *c, {SurfacePoint::exterior(standard_node())}, ones(2), 2, standard_nodal_cubic(), 2,
                     "node of a nodal cubic through the base points");
       }},
      {"S7.c",
       [](Sampler& s) -> std::optional<ScenarioWitness> {
         std::vector<PlanePoint> on_conic = random_points(s, 5);
         if (!check_generality(on_conic, 5).passed) return std::nullopt;
         const HomogeneousForm conic = conic_through_five(on_conic);
         const PlanePoint q0 = second_intersection(conic, on_conic[0], s.plane_point());
         const PlanePoint through = s.plane_point();
         if (through == q0) return std::nullopt;
         const PlanePoint q1 = second_intersection(conic, q0, through);
         if (q1 == q0) return std::nullopt;
         std::vector<PlanePoint> pts{point_on_line(q0, through, BigRational(nonzero(s))),
                                     point_on_line(q0, through, BigRational(nonzero(s)))};
         pts.insert(pts.end(), on_conic.begin(), on_conic.end());
         auto c = general(pts);
         if (!c || is_base(*c, q0) || is_base(*c, q1)) return std::nullopt;
         return make("S7.c", *c, {SurfacePoint::exterior(q0), SurfacePoint::exterior(q1)}, ones(2), 2,
                     conic * line(*c, 1, 2), 2, "L12 meets the conic through P3..P7");
       }},
      {"S8",
       [](Sampler& s) -> std::optional<ScenarioWitness> {
         std::vector<PlanePoint> pts;
         for (int i = 0; i < 8; ++i) {
           const long t = s.uniform(-20, 20);
           if (t == 1 || t == -1) return std::nullopt;
           pts.push_back(nodal_cubic_point(BigRational(t)));
         }
         auto c = general(pts);
         if (!c) return std::nullopt;
         return make("S8", *c, {SurfacePoint::exterior(standard_node())}, ones(2), 2, standard_nodal_cubic(), 2,
                     "node of the nodal cubic of the pencil");
       }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& scenario_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, r] : surfaces()) v.push_back(id);
    return v;
  }();
  return ids;
}

unsigned scenario_surface(const std::string& id) {
  const auto it = surfaces().find(id);
  if (it == surfaces().end()) throw Error(Errc::InvalidArgument, "unknown case id '" + id + "'");
  return it->second;
}

ScenarioWitness build_scenario(unsigned r, const std::string& id, Sampler& sampler) {
  if (scenario_surface(id) != r)
    throw Error(Errc::InvalidArgument, "case " + id + " lives on S" + std::to_string(scenario_surface(id)));
  const Builder& build = builders().at(id);
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    try {
      if (auto w = build(sampler)) return std::move(*w);
    } catch (const Error& e) {
      // Degenerate random draws are rejected like any other failed sample.
      if (e.code() == Errc::InvalidArgument || e.code() == Errc::CoincidentPoints ||
          e.code() == Errc::DegenerateSystem || e.code() == Errc::NotOnCurve || e.code() == Errc::SingularPoint)
        continue;
      throw;
    }
  }
  throw Error(Errc::ConstructionFailed, "case " + id + " rejected " + std::to_string(kMaxRetries) + " samples");
}

ScenarioReport verify_scenario(const ScenarioWitness& w, const AlphaOptions& opts) {
  ScenarioReport rep;
  rep.id = w.id;
  rep.expected_prefix = w.expected_prefix;
  rep.expected_next = w.expected_next;
  const LineBundle bundle = LineBundle::anticanonical(w.config.r());
  const auto n = static_cast<unsigned>(w.expected_prefix.size());
  const InitialSequence seq = initial_sequence(w.config, bundle, w.z, n + 1, opts);
  rep.values = seq.values;
  rep.results = seq.results;
  rep.prefix_matches = std::equal(w.expected_prefix.begin(), w.expected_prefix.end(), seq.values.begin());
  rep.next_ok = seq.values[n] >= w.expected_next;
  if (w.curve)
    rep.checks.push_back({"curve realises m = " + std::to_string(w.curve_m),
                          witness_satisfies(w.config, bundle, 1, *w.curve, uniform(w.z, w.curve_m))});
  for (unsigned m = 1; m <= n + 1; ++m)
    rep.checks.push_back({"kernel witness m = " + std::to_string(m),
                          witness_satisfies(w.config, bundle, seq.values[m - 1], seq.results[m - 1].witness,
                                            uniform(w.z, m))});
  if (w.id == "S8") {
    const HomogeneousForm n3 = standard_nodal_cubic();
    rep.checks.push_back({"node has multiplicity 2", multiplicity_at(n3, standard_node()) == 2});
    bool in_pencil = false;
    try {
      in_pencil = cubic_pencil(w.config.points()).contains(n3);
    } catch (const Error& e) {
      if (e.code() != Errc::NotAPencil) throw;
    }
    rep.checks.push_back({"nodal cubic lies in the pencil", in_pencil});
  }
  rep.passed = rep.prefix_matches && rep.next_ok;
  for (const auto& c : rep.checks) rep.passed = rep.passed && c.passed;
  return rep;
}

bool CubicPencil::contains(const HomogeneousForm& cubic) const {
  if (cubic.degree() != 3 || cubic.is_zero()) return false;
  RatMatrix m;
  for (const auto& f : basis) m.append_row(f.coefficients());
  m.append_row(cubic.coefficients());
  return rank(m) == 2;
}

CubicPencil cubic_pencil(std::span<const PlanePoint> points) {
  if (points.size() != 8) throw Error(Errc::InvalidArgument, "a pencil of cubics needs 8 points");
  RatMatrix m;
  for (const auto& p : points) {
    std::vector<BigRational> row;
    for (const auto& e : monomial_basis(3)) {
      BigInt v = 1;
      for (unsigned k = 0; k < e.x; ++k) v *= p[0];
      for (unsigned k = 0; k < e.y; ++k) v *= p[1];
      for (unsigned k = 0; k < e.z; ++k) v *= p[2];
      row.emplace_back(v);
    }
    m.append_row(row);
  }
  const auto kernel = kernel_basis(m);
  if (kernel.size() != 2)
    throw Error(Errc::NotAPencil, "cubics through the points form a space of dimension " + std::to_string(kernel.size()));
  return CubicPencil{{HomogeneousForm::from_integers(3, kernel[0]), HomogeneousForm::from_integers(3, kernel[1])},
                     std::vector<PlanePoint>(points.begin(), points.end())};
}

const std::vector<std::string>& falsify_families() {
  static const std::vector<std::string> f{"S1.triple", "S6.nonconcurrent", "S8.generic"};
  return f;
}

FalsifyReport falsify_random(unsigned r, const std::string& family, unsigned trials, std::uint64_t seed,
                             const AlphaOptions& opts) {
  const std::map<std::string, unsigned> family_r{{"S1.triple", 1}, {"S6.nonconcurrent", 6}, {"S8.generic", 8}};
  const auto it = family_r.find(family);
  if (it == family_r.end()) throw Error(Errc::InvalidArgument, "unknown family '" + family + "'");
  if (it->second != r) throw Error(Errc::InvalidArgument, family + " lives on S" + std::to_string(it->second));
  if (trials == 0) throw Error(Errc::InvalidArgument, "trials must be positive");

  FalsifyReport rep{family, r, seed, {}, true};
  Sampler s(seed);
  for (unsigned t = 0; t < trials; ++t) {
    std::optional<DelPezzoConfig> c;
    const LineBundle bundle = LineBundle::anticanonical(r);
    FalsifyTrial trial;
    unsigned max_m = 0;
    if (family == "S1.triple") {
      c = sample_config(r, s);
      while (trial.z.size() < 3) {
        const SurfacePoint q = random_direction(1, s);
        if (std::find(trial.z.begin(), trial.z.end(), q) == trial.z.end()) trial.z.push_back(q);
      }
      max_m = 12;
    } else if (family == "S6.nonconcurrent") {
      for (int attempt = 0; attempt < kMaxRetries && trial.z.empty(); ++attempt) {
        c = sample_config(r, s);
        const PlanePoint q = intersect_lines(line(*c, 1, 2), line(*c, 3, 4));
        if (!is_base(*c, q) && !collinear(c->point(5), c->point(6), q)) trial.z = {SurfacePoint::exterior(q)};
      }
      if (trial.z.empty()) throw Error(Errc::ConstructionFailed, "L56 keeps passing through L12 and L34");
      max_m = 3;
    } else {
      c = sample_config(r, s);
      trial.z = {SurfacePoint::exterior(sample_exterior(*c, s))};
      max_m = 2;
    }
    trial.values = initial_sequence(*c, bundle, trial.z, max_m, opts).values;
    if (family == "S1.triple")
      trial.signature_failed = max_equal_run(trial.values).length < 4;
    else if (family == "S6.nonconcurrent")
      trial.signature_failed = trial.values[2] >= 2;
    else
      trial.signature_failed = trial.values[1] == 2;
    rep.passed = rep.passed && trial.signature_failed;
    rep.trials.push_back(std::move(trial));
  }
  return rep;
}

}  // namespace fatpoints
