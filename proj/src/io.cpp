#include "fatpoints/io.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fatpoints/error.hpp"
#include "fatpoints/scenarios.hpp"

namespace fatpoints {

namespace {

Json str_array(std::span<const BigInt> v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{"command", "r",     "base_points", "bundle", "Z",    "m",
                                          "M",       "k",     "m_max",       "cases",  "trials", "family",
                                          "seed",    "random_exterior"};
  return keys;
}

unsigned parse_small(const Json& spec, const std::string& key, unsigned lo, unsigned hi) {
  const BigInt v = parse_exact_integer(spec.at(key), key);
  if (v < lo || v > hi)
    throw InputError(key, "must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
  return static_cast<unsigned>(v.get_ui());
}

std::optional<unsigned> optional_small(const Json& spec, const std::string& key, unsigned lo, unsigned hi) {
  if (!spec.contains(key)) return std::nullopt;
  return parse_small(spec, key, lo, hi);
}

std::uint64_t parse_seed(const Json& v) {
  const BigInt s = parse_exact_integer(v, "seed");
  if (s < 0 || !mpz_fits_ulong_p(s.get_mpz_t())) throw InputError("seed", "must be an unsigned 64-bit integer");
  return s.get_ui();
}

/// Everything a command needs about the surface.
struct Context {
  std::optional<DelPezzoConfig> config;
  LineBundle bundle;
  std::optional<Sampler> sampler;
  AlphaOptions alpha;
};

std::optional<std::uint64_t> seed_of(const Json& spec, const RunOptions& opts) {
  if (opts.seed) return opts.seed;
  if (spec.contains("seed")) return parse_seed(spec.at("seed"));
  return std::nullopt;
}

Sampler& need_sampler(Context& ctx, const Json& spec, const RunOptions& opts, const std::string& why) {
  if (!ctx.sampler) {
    const auto seed = seed_of(spec, opts);
    if (!seed) throw InputError("seed", "required because " + why);
    ctx.sampler.emplace(*seed);
  }
  return *ctx.sampler;
}

AlphaOptions alpha_options(const RunOptions& opts) {
  AlphaOptions a;
  if (opts.k_max) {
    if (*opts.k_max == 0) throw InputError("kmax", "must be positive");
    a.k_max = *opts.k_max;
  }
  if (opts.prime) {
    if (*opts.prime < 3 || *opts.prime >= (1u << 31) || !is_prime(*opts.prime))
      throw InputError("prime", "must be a prime in [3, 2^31)");
    a.prime = *opts.prime;
  }
  a.use_modular = !opts.no_modular;
  return a;
}

Context load_context(const Json& spec, const RunOptions& opts) {
  Context ctx;
  ctx.alpha = alpha_options(opts);
  const auto r = optional_small(spec, "r", 1, 8);
  if (spec.contains("base_points")) {
    const Json& bp = spec.at("base_points");
    if (!bp.is_array() || bp.empty() || bp.size() > 8) throw InputError("base_points", "expected 1..8 points");
    std::vector<PlanePoint> pts;
    for (std::size_t i = 0; i < bp.size(); ++i)
      pts.push_back(parse_plane_point(bp[i], "base_points[" + std::to_string(i) + "]"));
    if (r && *r != pts.size()) throw InputError("r", "does not match the number of base_points");
    try {
      ctx.config.emplace(std::move(pts));
    } catch (const Error& e) {
      throw InputError("base_points", e.what());
    }
  } else {
    if (!r) throw InputError("r", "required when base_points are absent");
    ctx.config = sample_config(*r, need_sampler(ctx, spec, opts, "base_points are sampled"));
  }
  const unsigned rr = ctx.config->r();
  ctx.bundle = LineBundle::anticanonical(rr);
  if (spec.contains("bundle")) {
    const Json& b = spec.at("bundle");
    if (!b.is_object()) throw InputError("bundle", "expected {\"d\": n, \"mults\": [...]}");
    if (b.contains("d")) ctx.bundle.d = parse_small(b, "d", 1, 1000);
    if (b.contains("mults")) {
      const Json& m = b.at("mults");
      if (!m.is_array() || m.size() != rr) throw InputError("bundle.mults", "expected " + std::to_string(rr) + " entries");
      ctx.bundle.mults.clear();
      for (std::size_t i = 0; i < m.size(); ++i) {
        const BigInt v = parse_exact_integer(m[i], "bundle.mults");
        if (v < 0 || v > 1000) throw InputError("bundle.mults", "entries must lie in 0..1000");
        ctx.bundle.mults.push_back(static_cast<unsigned>(v.get_ui()));
      }
    }
  }
  return ctx;
}

std::vector<FatPoint> load_z(const Json& spec, Context& ctx, const RunOptions& opts) {
  std::vector<FatPoint> z;
  if (spec.contains("Z")) {
    const Json& zs = spec.at("Z");
    if (!zs.is_array() || zs.empty()) throw InputError("Z", "expected a nonempty array of surface points");
    for (std::size_t i = 0; i < zs.size(); ++i) z.push_back(parse_fat_point(zs[i], "Z[" + std::to_string(i) + "]"));
  } else if (spec.contains("random_exterior")) {
    const unsigned n = parse_small(spec, "random_exterior", 1, 200);
    Sampler& s = need_sampler(ctx, spec, opts, "Z is sampled");
    while (z.size() < n) {
      const SurfacePoint q = SurfacePoint::exterior(sample_exterior(*ctx.config, s));
      if (std::none_of(z.begin(), z.end(), [&](const FatPoint& f) { return f.point == q; })) z.push_back({q, 1});
    }
  } else {
    throw InputError("Z", "required");
  }
  try {
    validate_fat_points(*ctx.config, z);
  } catch (const Error& e) {
    throw InputError("Z", e.what());
  }
  return z;
}

std::vector<SurfacePoint> support(std::span<const FatPoint> z) {
  std::vector<SurfacePoint> out;
  for (const auto& f : z) out.push_back(f.point);
  return out;
}

Json config_json(const DelPezzoConfig& c) {
  Json a = Json::array();
  for (const auto& p : c.points()) a.push_back(to_json(p));
  return a;
}

Json z_json(std::span<const FatPoint> z) {
  Json a = Json::array();
  for (const auto& f : z) a.push_back(to_json(f.point, f.multiplicity));
  return a;
}

Json z_json(std::span<const SurfacePoint> z) {
  Json a = Json::array();
  for (const auto& q : z) a.push_back(to_json(q));
  return a;
}

Json header(const std::string& command, const Context& ctx) {
  Json j;
  j["command"] = command;
  j["r"] = ctx.config->r();
  j["base_points"] = config_json(*ctx.config);
  j["bundle"] = to_json(ctx.bundle);
  return j;
}

Json result_json(const AlphaResult& a) {
  Json j;
  j["alpha"] = a.value;
  j["rank"] = a.system_rank;
  j["kernel_dim"] = a.kernel_dim;
  j["columns"] = a.columns;
  j["rows"] = a.rows;
  j["witness"] = to_json(a.witness);
  return j;
}

Json runs_json(std::span<const Run> runs) {
  Json a = Json::array();
  for (const auto& r : runs) a.push_back({{"start", r.start}, {"length", r.length}});
  return a;
}

/// Oracle multiplicities of f at every fat point; `ok` reports whether all
/// demands are met.
Json oracle_json(const Context& ctx, unsigned k, const HomogeneousForm& f, std::span<const FatPoint> z, bool& ok) {
  Json a = Json::array();
  ok = true;
  for (const auto& fp : z) {
    Json e;
    e["point"] = to_json(fp.point);
    e["required"] = fp.multiplicity;
    try {
      const auto d = mult_on_blowup(*ctx.config, ctx.bundle, k, f, fp.point);
      e["total"] = d.total_mult;
      e["proper"] = d.proper_mult;
      e["excess"] = d.excess;
      if (d.total_mult < fp.multiplicity) ok = false;
    } catch (const Error& err) {
      if (err.code() != Errc::NotInSystem && err.code() != Errc::ZeroForm) throw;
      e["error"] = err.what();
      ok = false;
    }
    a.push_back(std::move(e));
  }
  return a;
}

CommandResult cmd_alpha(const Json& spec, const RunOptions& opts) {
  Context ctx = load_context(spec, opts);
  std::vector<FatPoint> z = load_z(spec, ctx, opts);
  if (const auto m = optional_small(spec, "m", 1, 1000))
    for (auto& f : z) f.multiplicity = *m;
  const AlphaResult a = alpha(*ctx.config, ctx.bundle, z, ctx.alpha);
  Json j = header("alpha", ctx);
  j["Z"] = z_json(z);
  j.update(result_json(a));
  bool ok = false;
  j["oracle"] = oracle_json(ctx, a.value, a.witness, z, ok);
  return {ok ? 0 : 1, std::move(j)};
}

CommandResult cmd_sequence(const Json& spec, const RunOptions& opts) {
  Context ctx = load_context(spec, opts);
  const std::vector<FatPoint> z = load_z(spec, ctx, opts);
  const unsigned max_m = spec.contains("M") ? parse_small(spec, "M", 1, 1000) : 10;
  const auto pts = support(z);
  const InitialSequence seq = initial_sequence(*ctx.config, ctx.bundle, pts, max_m, ctx.alpha);
  Json j = header("sequence", ctx);
  j["Z"] = z_json(pts);
  j["M"] = max_m;
  j["values"] = seq.values;
  j["runs"] = runs_json(seq.runs);
  const Run best = max_equal_run(seq.values);
  j["max_run"] = {{"start", best.start}, {"length", best.length}};
  Json entries = Json::array();
  for (unsigned m = 1; m <= max_m; ++m) {
    Json e{{"m", m}};
    e.update(result_json(seq.results[m - 1]));
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return {0, std::move(j)};
}

CommandResult cmd_h0(const Json& spec, const RunOptions& opts) {
  Context ctx = load_context(spec, opts);
  const unsigned k = spec.contains("k") ? parse_small(spec, "k", 1, 100) : 1;
  Json j = header("h0", ctx);
  j["k"] = k;
  const std::size_t computed = h0_computed(*ctx.config, ctx.bundle, k, ctx.alpha);
  j["computed"] = computed;
  int code = 0;
  if (ctx.bundle == LineBundle::anticanonical(ctx.config->r())) {
    const auto closed = h0_closed_form(ctx.config->r(), k);
    j["closed_form"] = closed;
    j["match"] = closed == computed;
    if (closed != computed) code = 1;
  } else {
    j["closed_form"] = nullptr;
    j["match"] = nullptr;
  }
  return {code, std::move(j)};
}

CommandResult cmd_chudnovsky(const Json& spec, const RunOptions& opts) {
  Context ctx = load_context(spec, opts);
  const auto pts = support(load_z(spec, ctx, opts));
  const unsigned m_max = spec.contains("m_max") ? parse_small(spec, "m_max", 1, 100) : 4;
  const ChudnovskyReport rep = chudnovsky_check(*ctx.config, pts, m_max, ctx.alpha);
  Json j = header("chudnovsky", ctx);
  j["bundle"] = to_json(LineBundle::anticanonical(ctx.config->r()));
  j["Z"] = z_json(pts);
  j["alpha_Z"] = rep.alpha_z;
  j["hypothesis"] = rep.hypothesis;
  j["bound"] = rep.bound.get_str();
  Json entries = Json::array();
  for (const auto& e : rep.entries)
    entries.push_back({{"m", e.m}, {"alpha", e.alpha}, {"ratio", e.ratio.get_str()}, {"holds", e.holds}});
  j["entries"] = std::move(entries);
  j["passed"] = rep.passed;
  return {rep.passed ? 0 : 1, std::move(j)};
}

CommandResult cmd_verify(const Json& spec, const RunOptions& opts) {
  std::vector<std::string> cases;
  if (opts.cases) {
    cases = *opts.cases;
  } else if (spec.contains("cases")) {
    const Json& c = spec.at("cases");
    if (!c.is_array()) throw InputError("cases", "expected an array of case ids");
    for (const auto& id : c) {
      if (!id.is_string()) throw InputError("cases", "case ids are strings");
      cases.push_back(id.get<std::string>());
    }
  } else {
    cases = scenario_ids();
  }
  const auto r_filter = optional_small(spec, "r", 1, 8);
  for (const auto& id : cases)
    if (std::find(scenario_ids().begin(), scenario_ids().end(), id) == scenario_ids().end())
      throw InputError("cases", "unknown case id '" + id + "'");
  std::sort(cases.begin(), cases.end());
  cases.erase(std::unique(cases.begin(), cases.end()), cases.end());
  const auto seed = seed_of(spec, opts);
  if (!seed) throw InputError("seed", "required because scenario configurations are sampled");
  const AlphaOptions aopts = alpha_options(opts);

  Json out;
  out["command"] = "verify-theorems";
  out["seed"] = *seed;
  Json list = Json::array();
  bool all = true;
  for (const auto& id : cases) {
    const unsigned r = scenario_surface(id);
    if (r_filter && *r_filter != r) continue;
    Sampler s(*seed);  // per case, so a case does not depend on the filter
    const ScenarioWitness w = build_scenario(r, id, s);
    const ScenarioReport rep = verify_scenario(w, aopts);
    Json c;
    c["id"] = id;
    c["r"] = r;
    c["description"] = w.description;
    c["base_points"] = config_json(w.config);
    c["Z"] = z_json(w.z);
    c["expected_prefix"] = rep.expected_prefix;
    c["expected_next_at_least"] = rep.expected_next;
    c["values"] = rep.values;
    Json checks = Json::array();
    for (const auto& ch : rep.checks) checks.push_back({{"name", ch.name}, {"passed", ch.passed}});
    c["checks"] = std::move(checks);
    if (w.curve) c["curve"] = to_json(*w.curve);
    Json entries = Json::array();
    for (std::size_t m = 0; m < rep.results.size(); ++m) {
      Json e{{"m", m + 1}};
      e.update(result_json(rep.results[m]));
      entries.push_back(std::move(e));
    }
    c["entries"] = std::move(entries);
    c["passed"] = rep.passed;
    all = all && rep.passed;
    list.push_back(std::move(c));
  }
  out["cases"] = std::move(list);
  out["passed"] = all;
  return {all ? 0 : 1, std::move(out)};
}

CommandResult cmd_falsify(const Json& spec, const RunOptions& opts) {
  std::vector<std::string> families = falsify_families();
  if (spec.contains("family")) {
    const Json& f = spec.at("family");
    if (!f.is_string()) throw InputError("family", "expected a string");
    const std::string name = f.get<std::string>();
    if (std::find(families.begin(), families.end(), name) == families.end())
      throw InputError("family", "unknown family '" + name + "'");
    families = {name};
  }
  unsigned trials = 20;
  if (opts.trials) trials = *opts.trials;
  else if (spec.contains("trials")) trials = parse_small(spec, "trials", 1, 100000);
  if (trials == 0) throw InputError("trials", "must be positive");
  const auto seed = seed_of(spec, opts);
  if (!seed) throw InputError("seed", "required because trials are sampled");
  const auto r = optional_small(spec, "r", 1, 8);
  const AlphaOptions aopts = alpha_options(opts);
  const std::map<std::string, unsigned> family_r{{"S1.triple", 1}, {"S6.nonconcurrent", 6}, {"S8.generic", 8}};

  Json out;
  out["command"] = "falsify";
  out["seed"] = *seed;
  out["trials"] = trials;
  Json list = Json::array();
  bool all = true;
  for (const auto& fam : families) {
    if (r && family_r.at(fam) != *r) {
      if (spec.contains("family")) throw InputError("r", fam + " lives on S" + std::to_string(family_r.at(fam)));
      continue;
    }
    const FalsifyReport rep = falsify_random(family_r.at(fam), fam, trials, *seed, aopts);
    Json f;
    f["family"] = fam;
    f["r"] = rep.r;
    Json ts = Json::array();
    for (const auto& t : rep.trials)
      ts.push_back({{"Z", z_json(t.z)}, {"values", t.values}, {"signature_failed", t.signature_failed}});
    f["results"] = std::move(ts);
    f["passed"] = rep.passed;
    all = all && rep.passed;
    list.push_back(std::move(f));
  }
  out["families"] = std::move(list);
  out["passed"] = all;
  return {all ? 0 : 1, std::move(out)};
}

CommandResult cmd_check_witness(const Json& spec, const RunOptions& opts) {
  const Json& rep = spec.contains("report") ? spec.at("report") : spec;
  if (!rep.is_object()) throw InputError("report", "expected an object");
  if (!rep.contains("base_points")) throw InputError("base_points", "the certificate must carry its base points");
  Json trimmed = Json::object();
  for (const char* key : {"r", "base_points", "bundle"})
    if (rep.contains(key)) trimmed[key] = rep.at(key);
  Context ctx = load_context(trimmed, opts);
  Json zspec{{"Z", rep.contains("Z") ? rep.at("Z") : Json()}};
  if (!rep.contains("Z")) throw InputError("Z", "the certificate must carry Z");
  const std::vector<FatPoint> z = load_z(zspec, ctx, opts);

  struct Item {
    unsigned m;  // 0 for an alpha certificate with per-point multiplicities
    unsigned k;
    HomogeneousForm f;
  };
  std::vector<Item> items;
  auto read_item = [&](const Json& e, unsigned m, const std::string& field) {
    if (!e.contains("alpha")) throw InputError(field + ".alpha", "missing");
    if (!e.contains("witness")) throw InputError(field + ".witness", "missing");
    const unsigned k = parse_small(e, "alpha", 1, 1000);
    HomogeneousForm f = parse_form(e.at("witness"), field + ".witness");
    if (f.degree() != k * ctx.bundle.d) throw InputError(field + ".witness", "degree is not alpha * d");
    if (f.is_zero()) throw InputError(field + ".witness", "zero form");
    items.push_back({m, k, std::move(f)});
  };
  if (rep.contains("entries") && rep.contains("values")) {
    const Json& es = rep.at("entries");
    if (!es.is_array()) throw InputError("entries", "expected an array");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string field = "entries[" + std::to_string(i) + "]";
      read_item(es[i], parse_small(es[i], "m", 1, 1000), field);
    }
  } else {
    read_item(rep, 0, "report");
  }

  Json out;
  out["command"] = "check-witness";
  Json checks = Json::array();
  bool all = true;
  for (const auto& it : items) {
    std::vector<FatPoint> demand = z;
    if (it.m != 0)
      for (auto& f : demand) f.multiplicity = it.m;
    bool ok = false;
    Json c;
    if (it.m != 0) c["m"] = it.m;
    c["alpha"] = it.k;
    c["points"] = oracle_json(ctx, it.k, it.f, demand, ok);
    c["valid"] = ok;
    all = all && ok;
    checks.push_back(std::move(c));
  }
  out["checks"] = std::move(checks);
  out["valid"] = all;
  return {all ? 0 : 1, std::move(out)};
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"alpha",      "sequence", "h0",           "chudnovsky",
                                              "verify-theorems", "falsify", "check-witness"};
  return names;
}

Json to_json(const PlanePoint& p) { return Json::array({p[0].get_str(), p[1].get_str(), p[2].get_str()}); }

Json to_json(const SurfacePoint& q, std::optional<unsigned> mult) {
  Json j;
  if (q.is_exterior()) {
    j["exterior"] = to_json(q.plane_point());
  } else {
    j["onE"] = q.base_index();
    j["dir"] = Json::array({q.direction()[0].get_str(), q.direction()[1].get_str()});
  }
  if (mult) j["mult"] = *mult;
  return j;
}

Json to_json(const HomogeneousForm& f) {
  Json j;
  j["degree"] = f.degree();
  j["coefficients"] = str_array(f.integer_coefficients());
  j["form"] = f.primitive().str();
  return j;
}

Json to_json(const LineBundle& b) { return {{"d", b.d}, {"mults", b.mults}}; }

BigInt parse_exact_integer(const Json& v, const std::string& field) {
  if (v.is_number_integer()) return v.is_number_unsigned() ? BigInt(std::to_string(v.get<std::uint64_t>()))
                                                           : BigInt(std::to_string(v.get<std::int64_t>()));
  if (v.is_number_float()) throw InputError(field, "floating-point values are not accepted");
  if (v.is_string()) {
    try {
      return parse_integer(v.get<std::string>());
    } catch (const Error&) {
      throw InputError(field, "'" + v.get<std::string>() + "' is not an integer");
    }
  }
  throw InputError(field, "expected an integer or an integer string");
}

PlanePoint parse_plane_point(const Json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 3) throw InputError(field, "expected [x, y, z]");
  const BigInt x = parse_exact_integer(v[0], field), y = parse_exact_integer(v[1], field),
               z = parse_exact_integer(v[2], field);
  if (x == 0 && y == 0 && z == 0) throw InputError(field, "(0:0:0) is not a point");
  return PlanePoint(BigRational(x), BigRational(y), BigRational(z));
}

FatPoint parse_fat_point(const Json& v, const std::string& field) {
  if (!v.is_object()) throw InputError(field, "expected {\"exterior\": [...]} or {\"onE\": i, \"dir\": [a, b]}");
  unsigned mult = 1;
  if (v.contains("mult")) {
    const BigInt m = parse_exact_integer(v.at("mult"), field + ".mult");
    if (m < 1 || m > 1000) throw InputError(field + ".mult", "must lie in 1..1000");
    mult = static_cast<unsigned>(m.get_ui());
  }
  if (v.contains("exterior") == v.contains("onE"))
    throw InputError(field, "give exactly one of \"exterior\" and \"onE\"");
  if (v.contains("exterior")) return {SurfacePoint::exterior(parse_plane_point(v.at("exterior"), field + ".exterior")), mult};
  const BigInt i = parse_exact_integer(v.at("onE"), field + ".onE");
  if (i < 1 || i > 8) throw InputError(field + ".onE", "must lie in 1..8");
  if (!v.contains("dir")) throw InputError(field + ".dir", "required with onE");
  const Json& d = v.at("dir");
  if (!d.is_array() || d.size() != 2) throw InputError(field + ".dir", "expected [dx, dy]");
  const BigInt dx = parse_exact_integer(d[0], field + ".dir"), dy = parse_exact_integer(d[1], field + ".dir");
  if (dx == 0 && dy == 0) throw InputError(field + ".dir", "zero direction");
  return {SurfacePoint::on_exceptional(static_cast<unsigned>(i.get_ui()), BigRational(dx), BigRational(dy)), mult};
}

HomogeneousForm parse_form(const Json& v, const std::string& field) {
  if (!v.is_object() || !v.contains("degree") || !v.contains("coefficients"))
    throw InputError(field, "expected {\"degree\": n, \"coefficients\": [...]}");
  const BigInt deg = parse_exact_integer(v.at("degree"), field + ".degree");
  if (deg < 0 || deg > 1000) throw InputError(field + ".degree", "out of range");
  const auto d = static_cast<unsigned>(deg.get_ui());
  const Json& c = v.at("coefficients");
  if (!c.is_array() || c.size() != monomial_count(d))
    throw InputError(field + ".coefficients", "expected " + std::to_string(monomial_count(d)) + " entries");
  std::vector<BigRational> coeffs;
  for (const auto& x : c) coeffs.emplace_back(parse_exact_integer(x, field + ".coefficients"));
  return HomogeneousForm(d, std::move(coeffs));
}

CommandResult run_command(const std::string& command, const Json& jobspec, const RunOptions& opts) {
  auto input_error = [](const std::string& field, const std::string& msg) {
    return CommandResult{2, Json{{"error", msg}, {"field", field}}};
  };
  try {
    if (!jobspec.is_object()) throw InputError("jobspec", "expected a JSON object");
    if (command != "check-witness")
      for (const auto& [key, val] : jobspec.items())
        if (!known_keys().count(key)) throw InputError(key, "unknown field");
    if (command == "alpha") return cmd_alpha(jobspec, opts);
    if (command == "sequence") return cmd_sequence(jobspec, opts);
    if (command == "h0") return cmd_h0(jobspec, opts);
    if (command == "chudnovsky") return cmd_chudnovsky(jobspec, opts);
    if (command == "verify-theorems") return cmd_verify(jobspec, opts);
    if (command == "falsify") return cmd_falsify(jobspec, opts);
    if (command == "check-witness") return cmd_check_witness(jobspec, opts);
    throw InputError("command", "unknown command '" + command + "'");
  } catch (const InputError& e) {
    return input_error(e.field(), e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::CapExceeded || e.code() == Errc::ConstructionFailed || e.code() == Errc::DegenerateSystem)
      return {1, Json{{"error", e.what()}, {"code", std::string(errc_name(e.code()))}}};
    return {2, Json{{"error", e.what()}, {"code", std::string(errc_name(e.code()))}}};
  } catch (const Json::exception& e) {
    return input_error("jobspec", e.what());
  }
}

}  // namespace fatpoints
