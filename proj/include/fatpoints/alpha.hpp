#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fatpoints/blowup.hpp"

namespace fatpoints {

struct AlphaOptions {
  unsigned k_max = 12;
  /// Modular elimination with p-adic lifting; every answer is still checked
  /// exactly. When false, plain fraction-free elimination is used.
  bool use_modular = true;
  std::uint32_t prime = kDefaultPrime;
};

struct AlphaResult {
  unsigned value = 0;
  /// Primitive integer form of degree value * d.
  HomogeneousForm witness;
  std::size_t system_rank = 0;
  std::size_t kernel_dim = 0;
  std::size_t columns = 0;
  std::size_t rows = 0;
};

/// ((9 - r) m^2 + (9 - r) m + 2) / 2.
unsigned long h0_closed_form(unsigned r, unsigned m);

/// dim of degree k d forms meeting the base conditions of k * bundle.
std::size_t h0_computed(const DelPezzoConfig& config, const LineBundle& bundle, unsigned k,
                        const AlphaOptions& opts = {});

/// Least k with a nonzero member of |kL| vanishing to the demanded order at
/// every fat point. The witness is checked by mult_on_blowup at each point.
/// Throws Error(CapExceeded) past opts.k_max.
AlphaResult alpha(const DelPezzoConfig& config, const LineBundle& bundle, std::span<const FatPoint> z,
                  const AlphaOptions& opts = {});

struct Run {
  unsigned start = 1;  // 1-based m
  unsigned length = 0;
  friend bool operator==(const Run&, const Run&) = default;
};

/// Maximal constant runs, left to right.
std::vector<Run> runs_of(std::span<const unsigned> values);
/// Longest run; ties go to the leftmost.
Run max_equal_run(std::span<const unsigned> values);

struct InitialSequence {
  std::vector<unsigned> values;  // values[m - 1] = alpha(mZ)
  std::vector<Run> runs;
  std::vector<AlphaResult> results;
};

InitialSequence initial_sequence(const DelPezzoConfig& config, const LineBundle& bundle,
                                 std::span<const SurfacePoint> z, unsigned max_m, const AlphaOptions& opts = {});

struct ChudnovskyEntry {
  unsigned m = 0;
  unsigned alpha = 0;
  BigRational ratio;
  bool holds = false;
};

struct ChudnovskyReport {
  unsigned alpha_z = 0;
  /// alpha(Z) >= 2 on S_r with r <= 6.
  bool hypothesis = false;
  /// (alpha(Z) - 1) / 2 under the hypothesis, otherwise 1/5.
  BigRational bound;
  std::vector<ChudnovskyEntry> entries;
  bool passed = false;
};

/// Anticanonical bundle; compares alpha(mZ)/m with the bound for m = 1..m_max.
ChudnovskyReport chudnovsky_check(const DelPezzoConfig& config, std::span<const SurfacePoint> z, unsigned m_max,
                                  const AlphaOptions& opts = {});

/// Greedy single-point removal in input order, keeping alpha of the reduced
/// scheme. The result is inclusion-minimal because alpha is monotone.
std::vector<SurfacePoint> minimal_subset_preserving_alpha(const DelPezzoConfig& config, const LineBundle& bundle,
                                                          std::span<const SurfacePoint> z,
                                                          const AlphaOptions& opts = {});

/// ((9 - r) a^2 - (9 - r) a + 2) / 2, the size of a minimal subset with alpha = a.
unsigned long minimal_subset_bound(unsigned r, unsigned a);

/// True when every fat point demands at least its multiplicity of f.
bool witness_satisfies(const DelPezzoConfig& config, const LineBundle& bundle, unsigned k,
                       const HomogeneousForm& f, std::span<const FatPoint> z);

}  // namespace fatpoints
