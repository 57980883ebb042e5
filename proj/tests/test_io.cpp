#include <doctest.h>

#include "fatpoints/io.hpp"

using namespace fatpoints;

namespace {

const Json kS1Base = Json::array({Json::array({"0", "0", "1"})});

Json alpha_spec() {
  return Json{{"base_points", kS1Base}, {"Z", Json::array({Json{{"onE", 1}, {"dir", {"2", "-3"}}, {"mult", 5}}})}};
}

RunOptions seeded(std::uint64_t s) {
  RunOptions o;
  o.seed = s;
  return o;
}

}  // namespace

TEST_CASE("alpha command on an explicit jobspec") {
  const CommandResult res = run_command("alpha", alpha_spec());
  CHECK(res.exit_code == 0);
  CHECK(res.report["alpha"] == 1);
  CHECK(res.report["kernel_dim"] == 1);
  CHECK(res.report["witness"]["degree"] == 3);
  CHECK(res.report["oracle"][0]["total"] == 5);
  CHECK(res.report["oracle"][0]["required"] == 5);
}

TEST_CASE("input errors name their field") {
  Json bad = alpha_spec();
  bad["base_points"][0][0] = 0.5;
  CommandResult res = run_command("alpha", bad);
  CHECK(res.exit_code == 2);
  CHECK(res.report["field"] == "base_points[0]");

  Json extra = alpha_spec();
  extra["colour"] = "blue";
  res = run_command("alpha", extra);
  CHECK(res.exit_code == 2);
  CHECK(res.report["field"] == "colour");

  res = run_command("alpha", Json{{"r", 3}, {"random_exterior", 2}});
  CHECK(res.exit_code == 2);
  CHECK(res.report["field"] == "seed");

  res = run_command("h0", Json{{"r", 9}}, seeded(1));
  CHECK(res.exit_code == 2);
  CHECK(res.report["field"] == "r");

  res = run_command("alpha", Json{{"base_points", Json::array({{"0", "0", "1"}, {"1", "0", "1"}, {"2", "0", "1"}})},
                                  {"Z", Json::array({Json{{"onE", 1}, {"dir", {"1", "0"}}}})}});
  CHECK(res.exit_code == 2);
  CHECK(res.report["field"] == "base_points");

  Json on_base = alpha_spec();
  on_base["Z"] = Json::array({Json{{"exterior", {"0", "0", "7"}}}});
  res = run_command("alpha", on_base);
  CHECK(res.exit_code == 2);
  CHECK(res.report["field"] == "Z");

  res = run_command("launch", Json::object());
  CHECK(res.exit_code == 2);
  CHECK(res.report["field"] == "command");
  CHECK(run_command("alpha", Json::array()).exit_code == 2);
}

TEST_CASE("cap exceeded is a verification failure") {
  RunOptions o;
  o.k_max = 1;
  Json spec = alpha_spec();
  spec["Z"][0]["mult"] = 6;
  const CommandResult res = run_command("alpha", spec, o);
  CHECK(res.exit_code == 1);
  CHECK(res.report["code"] == "CapExceeded");
}

TEST_CASE("h0 command") {
  const CommandResult res = run_command("h0", Json{{"r", 6}, {"k", 1}}, seeded(1));
  CHECK(res.exit_code == 0);
  CHECK(res.report["computed"] == 4);
  CHECK(res.report["closed_form"] == 4);
  CHECK(res.report["match"] == true);
  const CommandResult other =
      run_command("h0", Json{{"r", 1}, {"bundle", {{"d", 2}, {"mults", {1}}}}}, seeded(1));
  CHECK(other.exit_code == 0);
  CHECK(other.report["computed"] == 5);
  CHECK(other.report["closed_form"].is_null());
}

TEST_CASE("reports are deterministic and round-trip") {
  const Json spec{{"r", 4}, {"random_exterior", 3}, {"m", 2}};
  const CommandResult a = run_command("alpha", spec, seeded(77));
  const CommandResult b = run_command("alpha", spec, seeded(77));
  REQUIRE(a.exit_code == 0);
  CHECK(a.report.dump(2) == b.report.dump(2));
  CHECK(Json::parse(a.report.dump()) == a.report);
  const CommandResult c = run_command("alpha", spec, seeded(78));
  CHECK(c.report["base_points"] != a.report["base_points"]);
  // The jobspec seed is used when no override is given.
  Json with_seed = spec;
  with_seed["seed"] = 77;
  CHECK(run_command("alpha", with_seed).report.dump() == a.report.dump());
}

TEST_CASE("check-witness") {
  const CommandResult a = run_command("alpha", alpha_spec());
  REQUIRE(a.exit_code == 0);
  CommandResult res = run_command("check-witness", a.report);
  CHECK(res.exit_code == 0);
  CHECK(res.report["valid"] == true);
  CHECK(run_command("check-witness", Json{{"report", a.report}}).exit_code == 0);

  Json tampered = a.report;
  auto& coeffs = tampered["witness"]["coefficients"];
  for (auto& c : coeffs)
    if (c == "0") {
      c = "1";
      break;
    }
  res = run_command("check-witness", tampered);
  CHECK(res.exit_code == 1);
  CHECK(res.report["valid"] == false);

  const Json seq_spec{{"base_points", kS1Base}, {"Z", Json::array({Json{{"onE", 1}, {"dir", {"1", "0"}}}})}, {"M", 6}};
  const CommandResult seq = run_command("sequence", seq_spec);
  REQUIRE(seq.exit_code == 0);
  CHECK(seq.report["values"] == Json::array({1, 1, 1, 1, 1, 2}));
  CHECK(seq.report["max_run"]["length"] == 5);
  res = run_command("check-witness", seq.report);
  CHECK(res.exit_code == 0);
  CHECK(res.report["checks"].size() == 6);

  Json bad_degree = a.report;
  bad_degree["alpha"] = 2;
  CHECK(run_command("check-witness", bad_degree).exit_code == 2);
}

TEST_CASE("chudnovsky, verify and falsify commands") {
  const CommandResult ch = run_command("chudnovsky", Json{{"r", 2}, {"random_exterior", 8}, {"m_max", 3}}, seeded(3));
  CHECK(ch.exit_code == 0);
  CHECK(ch.report["alpha_Z"] == 2);
  CHECK(ch.report["bound"] == "1/2");

  RunOptions o = seeded(5);
  o.cases = std::vector<std::string>{"S2.onL", "S8"};
  const CommandResult v = run_command("verify-theorems", Json::object(), o);
  CHECK(v.exit_code == 0);
  CHECK(v.report["cases"].size() == 2);
  CHECK(run_command("verify-theorems", Json{{"cases", {"S0"}}}, seeded(5)).exit_code == 2);

  const CommandResult f = run_command("falsify", Json{{"family", "S8.generic"}, {"trials", 2}}, seeded(9));
  CHECK(f.exit_code == 0);
  CHECK(f.report["families"][0]["results"].size() == 2);
  CHECK(run_command("falsify", Json{{"family", "S8.generic"}}).report["field"] == "seed");
}

TEST_CASE("parsers") {
  CHECK(parse_exact_integer(Json("123456789012345678901234567890"), "x") == BigInt("123456789012345678901234567890"));
  CHECK(parse_exact_integer(Json(-4), "x") == -4);
  CHECK_THROWS_AS(parse_exact_integer(Json(1.0), "x"), InputError);
  CHECK_THROWS_AS(parse_exact_integer(Json(true), "x"), InputError);
  CHECK_THROWS_AS(parse_plane_point(Json::array({0, 0, 0}), "p"), InputError);
  const FatPoint fp = parse_fat_point(Json{{"onE", 2}, {"dir", {"4", "-6"}}, {"mult", 3}}, "z");
  CHECK(fp.point == SurfacePoint::on_exceptional(2, 2, -3));
  CHECK(fp.multiplicity == 3);
  const HomogeneousForm f = line_through(PlanePoint(1, 1, 1), PlanePoint(2, 3, 1));
  CHECK(parse_form(to_json(f), "w") == f.primitive());
  CHECK(parse_fat_point(to_json(fp.point, 3), "z").point == fp.point);
}
