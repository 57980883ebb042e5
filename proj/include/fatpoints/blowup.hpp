#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "fatpoints/linalg.hpp"
#include "fatpoints/plane.hpp"

namespace fatpoints {

/// dH - sum m_i E_i on S_r.
struct LineBundle {
  unsigned d = 3;
  std::vector<unsigned> mults;

  static LineBundle anticanonical(unsigned r) { return {3, std::vector<unsigned>(r, 1)}; }
  std::string str() const;
  friend bool operator==(const LineBundle&, const LineBundle&) = default;
};

struct GeneralityReport {
  bool passed = true;
  /// Empty on success, otherwise one of "distinct", "collinear triple",
  /// "six on a conic", "singular cubic".
  std::string violation;
  /// 0-based indices of the offending points.
  std::vector<std::size_t> indices;
};

/// Pairwise distinct, no three collinear, no six on a conic, and for r = 8
/// no cubic through all eight points singular at one of them.
GeneralityReport check_generality(std::span<const PlanePoint> points, unsigned r);

/// r general base points P_1..P_r of the plane, with their local frames.
class DelPezzoConfig {
 public:
  /// Throws Error(InvalidArgument) when r is outside 1..8 or the points are
  /// not general.
  explicit DelPezzoConfig(std::vector<PlanePoint> points);

  unsigned r() const noexcept { return static_cast<unsigned>(points_.size()); }
  const std::vector<PlanePoint>& points() const noexcept { return points_; }
  /// 1-based, matching E_1..E_r.
  const PlanePoint& point(unsigned i) const { return points_.at(i - 1); }
  const ProjectiveFrame& frame(unsigned i) const { return frames_.at(i - 1); }
  const GeneralityReport& report() const noexcept { return report_; }

  /// Same plane data on the first s base points (S_s sits below S_r).
  DelPezzoConfig prefix(unsigned s) const;

 private:
  std::vector<PlanePoint> points_;
  std::vector<ProjectiveFrame> frames_;
  GeneralityReport report_;
};

/// A point of S_r: a plane point away from the base points, or a tangent
/// direction (dx : dy) at P_i measured in the local frame coordinates (u, v)
/// of P_i.
class SurfacePoint {
 public:
  static SurfacePoint exterior(const PlanePoint& p);
  /// Throws Error(InvalidArgument) for index 0 or the zero direction.
  static SurfacePoint on_exceptional(unsigned base_index, const BigRational& dx, const BigRational& dy);

  bool is_exterior() const noexcept { return base_index_ == 0; }
  /// Only for exterior points.
  const PlanePoint& plane_point() const { return *point_; }
  /// 1-based; 0 for exterior points.
  unsigned base_index() const noexcept { return base_index_; }
  /// Primitive, first nonzero entry positive.
  const std::array<BigInt, 2>& direction() const noexcept { return direction_; }

  std::string str() const;
  friend bool operator==(const SurfacePoint& a, const SurfacePoint& b) {
    return a.base_index_ == b.base_index_ && a.point_ == b.point_ && a.direction_ == b.direction_;
  }

 private:
  SurfacePoint() = default;
  unsigned base_index_ = 0;
  std::optional<PlanePoint> point_;
  std::array<BigInt, 2> direction_{0, 0};
};

struct FatPoint {
  SurfacePoint point;
  unsigned multiplicity = 1;
};

/// Throws Error(InvalidArgument) for repeated points, zero multiplicities or
/// exceptional indices beyond r, and Error(InvalidPoint) for an exterior
/// point equal to a base point.
void validate_fat_points(const DelPezzoConfig& config, std::span<const FatPoint> z);

/// Z with every multiplicity set to m.
std::vector<FatPoint> uniform(std::span<const SurfacePoint> points, unsigned m);

/// Rows over monomial_basis(k d) forcing multiplicity >= k m_i at each P_i.
RatMatrix base_condition_rows(const DelPezzoConfig& config, const LineBundle& bundle, unsigned k);

enum class Chart { Auto, Slope, Mirror };

/// Rows forcing multiplicity >= m at q for members of the system cut out by
/// base_condition_rows. For q on E_i the slope chart (x = u, y = u v) is used
/// when dx != 0 and the mirror chart (x = u w, y = u) otherwise; forcing a
/// chart that does not contain q throws Error(InvalidArgument).
RatMatrix point_condition_rows(const DelPezzoConfig& config, const LineBundle& bundle, unsigned k,
                               const SurfacePoint& q, unsigned m, Chart chart = Chart::Auto);

/// Base rows followed by the rows of every fat point.
RatMatrix stacked_system(const DelPezzoConfig& config, const LineBundle& bundle, unsigned k,
                         std::span<const FatPoint> z);

struct AdaptedTransformData {
  std::vector<unsigned> base_mults;
  std::vector<unsigned> excess;
  unsigned proper_mult = 0;
  unsigned total_mult = 0;
};

/// Multiplicity at q of the adapted transform of F, read off the actual chart
/// expansion of F. Throws Error(NotInSystem) when mult_{P_i}(F) < k m_i.
AdaptedTransformData mult_on_blowup(const DelPezzoConfig& config, const LineBundle& bundle, unsigned k,
                                    const HomogeneousForm& f, const SurfacePoint& q);

/// Direction at P_i of a line through P_i. Throws Error(InvalidArgument) when
/// the line misses P_i.
SurfacePoint direction_of_line(const DelPezzoConfig& config, unsigned i, const HomogeneousForm& line);
/// The line through P_i with the direction of q (q on E_i).
HomogeneousForm line_of_direction(const DelPezzoConfig& config, const SurfacePoint& q);
/// The point of E_i on the strict transform of the line P_i P_j.
SurfacePoint toward(const DelPezzoConfig& config, unsigned i, const PlanePoint& target);

/// Seeded integer sampler. Draws use `lo + x % (hi - lo + 1)` on raw
/// mt19937_64 output so sequences agree across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi);
  /// (x : y : 1) with x, y in [-20, 20].
  PlanePoint plane_point();
  /// Primitive direction with entries in [-20, 20].
  std::array<BigRational, 2> direction();
  std::uint64_t next() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

inline constexpr int kMaxRetries = 100;

/// r random general points; throws Error(ConstructionFailed) after
/// kMaxRetries rejected samples.
DelPezzoConfig sample_config(unsigned r, Sampler& sampler);

/// A plane point off every base point and off every line P_i P_j.
PlanePoint sample_exterior(const DelPezzoConfig& config, Sampler& sampler);

}  // namespace fatpoints
