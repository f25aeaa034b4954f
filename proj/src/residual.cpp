#include "linpot/residual.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "linpot/errors.hpp"

namespace linpot {
namespace {

using Cplx = std::complex<double>;

bool finite(const Cplx& v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

struct ResidualTerms {
  Cplx r;
  double scale;  // |i dPsi/dt| + |(1/2M) dxx Psi| + |g1 x Psi| + |Psi|
};

ResidualTerms residual_terms(const SpaceTimeFn& psi, const MassProfile& M,
                             const TimeProfile& g1, double x, double t,
                             double h) {
  if (!(h > 0.0)) throw ConfigError("residual: h must be > 0");
  if (!M.contains(t - 2.0 * h) || !M.contains(t + 2.0 * h))
    throw DomainError("residual: t +- 2h outside the mass domain");
  if (t - 2.0 * h < g1.domain_lo() || t + 2.0 * h > g1.domain_hi())
    throw DomainError("residual: t +- 2h outside the force domain");

  const Cplx pc = psi(x, t);
  const Cplx pt1 = psi(x, t + h), pt2 = psi(x, t + 2.0 * h);
  const Cplx pt3 = psi(x, t - h), pt4 = psi(x, t - 2.0 * h);
  const Cplx px1 = psi(x + h, t), px2 = psi(x + 2.0 * h, t);
  const Cplx px3 = psi(x - h, t), px4 = psi(x - 2.0 * h, t);
  for (const Cplx& v : {pc, pt1, pt2, pt3, pt4, px1, px2, px3, px4}) {
    if (!finite(v)) throw EvaluationError("residual: non-finite psi sample");
  }

  const Cplx dpsi_dt =
      (-pt2 + 8.0 * pt1 - 8.0 * pt3 + pt4) / (12.0 * h);
  const Cplx d2psi_dx2 =
      (-px2 + 16.0 * px1 - 30.0 * pc + 16.0 * px3 - px4) / (12.0 * h * h);

  const Cplx term_t = Cplx(0.0, 1.0) * dpsi_dt;
  const Cplx term_x = d2psi_dx2 / (2.0 * M.eval(t));
  const Cplx term_v = g1.eval(t) * x * pc;
  ResidualTerms out;
  out.r = term_t + term_x - term_v;
  out.scale = std::abs(term_t) + std::abs(term_x) + std::abs(term_v) +
              std::abs(pc);
  return out;
}

// deterministic uniform double in [0, 1)
double unit_uniform(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Cplx residual(const SpaceTimeFn& psi, const MassProfile& M,
              const TimeProfile& g1, double x, double t, double h) {
  return residual_terms(psi, M, g1, x, t, h).r;
}

ResidualStats residual_scan(const SpaceTimeFn& psi, const MassProfile& M,
                            const TimeProfile& g1, Range x_range,
                            Range t_range, long n_samples, double h,
                            std::uint64_t seed) {
  if (n_samples < 1) throw ConfigError("residual_scan: n_samples must be >= 1");
  if (!(x_range.hi >= x_range.lo) || !(t_range.hi >= t_range.lo))
    throw ConfigError("residual_scan: invalid sample ranges");

  std::mt19937_64 rng(seed);
  const auto n = static_cast<size_t>(n_samples);
  std::vector<double> xs(n), ts(n), mags(n);
  double max_mag = 0.0;
  for (long i = 0; i < n_samples; ++i) {
    xs[size_t(i)] = x_range.lo + (x_range.hi - x_range.lo) * unit_uniform(rng);
    ts[size_t(i)] = t_range.lo + (t_range.hi - t_range.lo) * unit_uniform(rng);
    const Cplx v = psi(xs[size_t(i)], ts[size_t(i)]);
    if (!finite(v)) throw EvaluationError("residual_scan: non-finite psi");
    mags[size_t(i)] = std::abs(v);
    max_mag = std::max(max_mag, mags[size_t(i)]);
  }

  if (max_mag == 0.0)
    throw EvaluationError("residual_scan: all samples excluded (zero field)");
  const double cutoff = 1e-8 * max_mag;
  ResidualStats stats;
  double rel_sum = 0.0;
  for (long i = 0; i < n_samples; ++i) {
    const ResidualTerms rt =
        residual_terms(psi, M, g1, xs[size_t(i)], ts[size_t(i)], h);
    const double mag_r = std::abs(rt.r);
    stats.max_abs = std::max(stats.max_abs, mag_r);
    if (mags[size_t(i)] < cutoff) continue;  // Airy zeros etc.
    const double rel = mag_r / rt.scale;
    stats.max_rel = std::max(stats.max_rel, rel);
    rel_sum += rel;
    ++stats.n_samples;
  }
  if (stats.n_samples == 0)
    throw EvaluationError("residual_scan: all samples excluded");
  stats.mean_rel = rel_sum / double(stats.n_samples);
  return stats;
}

}  // namespace linpot
