#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fatpoints/alpha.hpp"

namespace fatpoints {

using Json = nlohmann::ordered_json;

/// Jobspec problem; `field` names the offending key.
class InputError : public std::runtime_error {
 public:
  InputError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Command-line overrides; each one takes precedence over the jobspec.
struct RunOptions {
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> k_max;
  std::optional<std::vector<std::string>> cases;
  std::optional<unsigned> trials;
  std::optional<std::uint32_t> prime;
  bool no_modular = false;
};

struct CommandResult {
  int exit_code = 0;  // 0 pass, 1 verification failure, 2 input error
  Json report;
};

const std::vector<std::string>& command_names();

/// Runs one of alpha, sequence, h0, chudnovsky, verify-theorems, falsify,
/// check-witness. Never throws for bad input: the report then carries
/// {"error", "field"} and the exit code is 2.
CommandResult run_command(const std::string& command, const Json& jobspec, const RunOptions& opts = {});

// Serialization pieces shared with the tests.
Json to_json(const PlanePoint& p);
Json to_json(const SurfacePoint& q, std::optional<unsigned> mult = std::nullopt);
Json to_json(const HomogeneousForm& f);
Json to_json(const LineBundle& b);

/// Integers may be JSON integers or decimal strings; anything else throws
/// InputError naming `field`.
BigInt parse_exact_integer(const Json& v, const std::string& field);
PlanePoint parse_plane_point(const Json& v, const std::string& field);
FatPoint parse_fat_point(const Json& v, const std::string& field);
HomogeneousForm parse_form(const Json& v, const std::string& field);

}  // namespace fatpoints
