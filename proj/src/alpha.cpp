#include "fatpoints/alpha.hpp"

#include "fatpoints/error.hpp"

namespace fatpoints {

unsigned long h0_closed_form(unsigned r, unsigned m) {
  const unsigned long c = 9 - r;
  return (c * m * m + c * m + 2) / 2;
}

unsigned long minimal_subset_bound(unsigned r, unsigned a) {
  const unsigned long c = 9 - r;
  return (c * a * a - c * a + 2) / 2;
}

std::size_t h0_computed(const DelPezzoConfig& config, const LineBundle& bundle, unsigned k,
                        const AlphaOptions& opts) {
  const RatMatrix rows = base_condition_rows(config, bundle, k);
  const std::size_t cols = monomial_count(k * bundle.d);
  // Independent rows mod p are independent over Q.
  if (opts.use_modular && rows.rows() > 0 && modular_rank(rows, opts.prime) == rows.rows())
    return cols - rows.rows();
  return cols - rank(rows);
}

bool witness_satisfies(const DelPezzoConfig& config, const LineBundle& bundle, unsigned k,
                       const HomogeneousForm& f, std::span<const FatPoint> z) {
  try {
    for (const auto& fp : z)
      if (mult_on_blowup(config, bundle, k, f, fp.point).total_mult < fp.multiplicity) return false;
  } catch (const Error& e) {
    if (e.code() == Errc::NotInSystem || e.code() == Errc::ZeroForm) return false;
    throw;
  }
  return true;
}

AlphaResult alpha(const DelPezzoConfig& config, const LineBundle& bundle, std::span<const FatPoint> z,
                  const AlphaOptions& opts) {
  if (z.empty()) throw Error(Errc::InvalidArgument, "Z must be nonempty");
  validate_fat_points(config, z);
  for (unsigned k = 1; k <= opts.k_max; ++k) {
    const RatMatrix m = stacked_system(config, bundle, k, z);
    AlphaResult res;
    res.columns = m.cols();
    res.rows = m.rows();
    if (opts.use_modular) {
      KernelCertificate cert = certified_kernel(m, opts.prime, KernelScope::FirstVector);
      if (cert.kernel_dim == 0) continue;
      res.system_rank = cert.rank;
      res.kernel_dim = cert.kernel_dim;
      res.witness = HomogeneousForm::from_integers(k * bundle.d, cert.basis.front());
    } else {
      const auto basis = kernel_basis(m);
      if (basis.empty()) continue;
      res.system_rank = m.cols() - basis.size();
      res.kernel_dim = basis.size();
      res.witness = HomogeneousForm::from_integers(k * bundle.d, basis.front());
    }
    res.value = k;
    if (!witness_satisfies(config, bundle, k, res.witness, z))
      throw Error(Errc::DegenerateSystem, "kernel vector at k = " + std::to_string(k) + " failed the blow-up oracle");
    return res;
  }
  throw Error(Errc::CapExceeded, "no section up to k = " + std::to_string(opts.k_max));
}

std::vector<Run> runs_of(std::span<const unsigned> values) {
  std::vector<Run> runs;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0 && values[i] == values[i - 1])
      ++runs.back().length;
    else
      runs.push_back({static_cast<unsigned>(i + 1), 1});
  }
  return runs;
}

Run max_equal_run(std::span<const unsigned> values) {
  Run best{1, 0};
  for (const auto& r : runs_of(values))
    if (r.length > best.length) best = r;
  return best;
}

InitialSequence initial_sequence(const DelPezzoConfig& config, const LineBundle& bundle,
                                 std::span<const SurfacePoint> z, unsigned max_m, const AlphaOptions& opts) {
  if (max_m == 0) throw Error(Errc::InvalidArgument, "sequence length must be positive");
  InitialSequence seq;
  for (unsigned m = 1; m <= max_m; ++m) {
    const auto fat = uniform(z, m);
    seq.results.push_back(alpha(config, bundle, fat, opts));
    seq.values.push_back(seq.results.back().value);
  }
  seq.runs = runs_of(seq.values);
  return seq;
}

ChudnovskyReport chudnovsky_check(const DelPezzoConfig& config, std::span<const SurfacePoint> z, unsigned m_max,
                                  const AlphaOptions& opts) {
  const LineBundle bundle = LineBundle::anticanonical(config.r());
  const InitialSequence seq = initial_sequence(config, bundle, z, m_max, opts);
  ChudnovskyReport rep;
  rep.alpha_z = seq.values.front();
  rep.hypothesis = rep.alpha_z >= 2 && config.r() <= 6;
  rep.bound = rep.hypothesis ? BigRational(rep.alpha_z - 1, 2) : BigRational(1, 5);
  rep.bound.canonicalize();
  rep.passed = true;
  for (unsigned m = 1; m <= m_max; ++m) {
    ChudnovskyEntry e;
    e.m = m;
    e.alpha = seq.values[m - 1];
    e.ratio = make_rational(e.alpha, m);
    e.holds = e.ratio >= rep.bound;
    rep.passed = rep.passed && e.holds;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

std::vector<SurfacePoint> minimal_subset_preserving_alpha(const DelPezzoConfig& config, const LineBundle& bundle,
                                                          std::span<const SurfacePoint> z,
                                                          const AlphaOptions& opts) {
  std::vector<SurfacePoint> w(z.begin(), z.end());
  if (w.size() <= 1) return w;
  const unsigned target = alpha(config, bundle, uniform(w, 1), opts).value;
  for (std::size_t i = 0; i < w.size() && w.size() > 1;) {
    std::vector<SurfacePoint> trial = w;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (alpha(config, bundle, uniform(trial, 1), opts).value == target)
      w = std::move(trial);
    else
      ++i;
  }
  return w;
}

}  // namespace fatpoints
