#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fatpoints/alpha.hpp"

namespace fatpoints {

/// An exact configuration whose initial sequence has a known signature.
struct ScenarioWitness {
  std::string id;
  DelPezzoConfig config;
  std::vector<SurfacePoint> z;
  std::vector<unsigned> expected_prefix;
  /// Lower bound for the value right after the prefix.
  unsigned expected_next = 2;
  /// Explicit curve realising the last value of the prefix, when one is known.
  std::optional<HomogeneousForm> curve;
  /// Multiplicity the curve is checked against (degree 3, k = 1).
  unsigned curve_m = 0;
  std::string description;
};

/// Every case id, sorted, e.g. "S1.single", "S4.b/Q1", "S8".
const std::vector<std::string>& scenario_ids();
/// The surface index r a case lives on; throws Error(InvalidArgument) for
/// unknown ids.
unsigned scenario_surface(const std::string& id);

/// Throws Error(InvalidArgument) for an unknown id or an id not on S_r, and
/// Error(ConstructionFailed) when kMaxRetries samples are all rejected.
ScenarioWitness build_scenario(unsigned r, const std::string& id, Sampler& sampler);

struct NamedCheck {
  std::string name;
  bool passed = false;
};

struct ScenarioReport {
  std::string id;
  std::vector<unsigned> values;
  std::vector<unsigned> expected_prefix;
  unsigned expected_next = 0;
  bool prefix_matches = false;
  bool next_ok = false;
  std::vector<AlphaResult> results;
  std::vector<NamedCheck> checks;
  bool passed = false;
};

/// Initial sequence (anticanonical) through one value past the prefix, plus
/// the curve and pencil checks attached to the case.
ScenarioReport verify_scenario(const ScenarioWitness& w, const AlphaOptions& opts = {});

struct CubicPencil {
  std::array<HomogeneousForm, 2> basis;
  std::vector<PlanePoint> base_points;

  bool contains(const HomogeneousForm& cubic) const;
};

/// Throws Error(NotAPencil) unless the cubics through the 8 points form a
/// 2-dimensional space.
CubicPencil cubic_pencil(std::span<const PlanePoint> points);

/// Families of sets that must NOT show the equality signature of a theorem.
const std::vector<std::string>& falsify_families();

struct FalsifyTrial {
  std::vector<SurfacePoint> z;
  std::vector<unsigned> values;
  /// True when the signature is absent, as the theorem predicts.
  bool signature_failed = false;
};

struct FalsifyReport {
  std::string family;
  unsigned r = 0;
  std::uint64_t seed = 0;
  std::vector<FalsifyTrial> trials;
  bool passed = false;
};

/// "S1.triple": three points of E_1, no run of length 4 for m <= 12.
/// "S6.nonconcurrent": L_12 and L_34 meet off L_56, alpha(3Z) >= 2.
/// "S8.generic": a generic exterior point, alpha(2Z) = 2.
FalsifyReport falsify_random(unsigned r, const std::string& family, unsigned trials, std::uint64_t seed,
                             const AlphaOptions& opts = {});

}  // namespace fatpoints
