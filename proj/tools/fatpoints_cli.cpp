#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>

#include "fatpoints/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Initial degrees of fat points on del Pezzo surfaces"};
  app.set_version_flag("--version", "fatpoints 1.0");

  std::string command;
  std::string input = "-";
  fatpoints::RunOptions opts;
  std::uint64_t seed = 0;
  unsigned kmax = 0, trials = 0;
  std::uint32_t prime = 0;
  std::vector<std::string> cases;

  app.add_option("command", command, "alpha | sequence | h0 | chudnovsky | verify-theorems | falsify | check-witness")
      ->required();
  app.add_option("jobspec", input, "JSON jobspec file, '-' for standard input");
  auto* seed_opt = app.add_option("--seed", seed, "seed for every sampled configuration");
  auto* kmax_opt = app.add_option("--kmax", kmax, "largest multiple of the bundle to search (default 12)");
  auto* cases_opt = app.add_option("--cases", cases, "comma-separated case ids for verify-theorems")->delimiter(',');
  auto* trials_opt = app.add_option("--trials", trials, "trials per falsification family");
  auto* prime_opt = app.add_option("--prime", prime, "prime for the modular elimination");
  app.add_flag("--no-modular", opts.no_modular, "use fraction-free elimination only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (*seed_opt) opts.seed = seed;
  if (*kmax_opt) opts.k_max = kmax;
  if (*cases_opt) opts.cases = cases;
  if (*trials_opt) opts.trials = trials;
  if (*prime_opt) opts.prime = prime;

  std::string text;
  if (input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(input);
    if (!in) {
      std::cout << fatpoints::Json{{"error", "cannot open " + input}, {"field", "jobspec"}}.dump(2) << "\n";
      return 2;
    }
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) text = "{}";

  fatpoints::Json spec;
  try {
    spec = fatpoints::Json::parse(text);
  } catch (const fatpoints::Json::parse_error& e) {
    std::cout << fatpoints::Json{{"error", e.what()}, {"field", "jobspec"}}.dump(2) << "\n";
    return 2;
  }
  const auto result = fatpoints::run_command(command, spec, opts);
  std::cout << result.report.dump(2) << "\n";
  return result.exit_code;
}
