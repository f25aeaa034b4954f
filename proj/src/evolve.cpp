#include "linpot/evolve.hpp"

#include <algorithm>
#include <cmath>

#include "linpot/errors.hpp"

namespace linpot {
namespace {

using Cplx = std::complex<double>;

// Thomas elimination for the complex tridiagonal system with constant
// off-diagonal `off` and diagonal `diag[i]`.  Overwrites rhs with the
// solution.
void solve_tridiagonal(const std::vector<Cplx>& diag, Cplx off,
                       std::vector<Cplx>& rhs) {
  const size_t n = diag.size();
  static thread_local std::vector<Cplx> scratch;
  scratch.assign(n, Cplx{});
  Cplx d = diag[0];
  if (std::abs(d) == 0.0) throw EvaluationError("cn_step: singular system");
  rhs[0] /= d;
  for (size_t i = 1; i < n; ++i) {
    scratch[i] = off / d;
    d = diag[i] - off * scratch[i];
    if (std::abs(d) == 0.0) throw EvaluationError("cn_step: singular system");
    rhs[i] = (rhs[i] - off * rhs[i - 1]) / d;
  }
  for (size_t i = n - 1; i-- > 0;) {
    rhs[i] -= scratch[i + 1] * rhs[i + 1];
  }
}

}  // namespace

void EvolveConfig::validate() const {
  if (!(dt > 0.0)) throw ConfigError("evolve: dt must be > 0");
  if (!(t1 > t0)) throw ConfigError("evolve: t1 must exceed t0");
  if (!(dt <= t1 - t0)) throw ConfigError("evolve: dt must not exceed t1-t0");
  if (!(taper_fraction > 0.0 && taper_fraction < 0.5))
    throw ConfigError("evolve: taper_fraction must be in (0, 0.5)");
  if (n_snapshots < 1) throw ConfigError("evolve: n_snapshots must be >= 1");
}

std::vector<double> EvolveConfig::snapshot_times() const {
  if (n_snapshots == 1) return {t1};
  std::vector<double> out(static_cast<size_t>(n_snapshots));
  for (int k = 0; k < n_snapshots; ++k)
    out[size_t(k)] = t0 + (t1 - t0) * double(k) / double(n_snapshots - 1);
  out.back() = t1;
  return out;
}

WaveField cn_step(const WaveField& field, const MassProfile& M,
                  const TimeProfile& g1, double dt) {
  if (!(dt > 0.0)) throw ConfigError("cn_step: dt must be > 0");
  const int nx = field.grid.nx;
  if (int(field.values.size()) != nx)
    throw ConfigError("cn_step: field size does not match grid");
  const double t_mid = field.t + 0.5 * dt;
  const double m = M.eval(t_mid);
  const double g = g1.eval(t_mid);
  const double dx = field.grid.dx();
  const double kin = 1.0 / (2.0 * m * dx * dx);

  // interior i = 1..nx-2 with psi(0) = psi(nx-1) = 0
  const size_t n = size_t(nx - 2);
  const Cplx half_idt(0.0, 0.5 * dt);
  const Cplx off = half_idt * (-kin);
  std::vector<Cplx> diag(n), rhs(n);
  for (size_t k = 0; k < n; ++k) {
    const int i = int(k) + 1;
    const Cplx v = field.values[size_t(i)];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw EvaluationError("cn_step: non-finite field value");
    const double h_diag = 2.0 * kin + g * field.grid.x(i);
    diag[k] = 1.0 + half_idt * h_diag;
    const Cplx left = (i > 1) ? field.values[size_t(i - 1)] : Cplx{};
    const Cplx right = (i < nx - 2) ? field.values[size_t(i + 1)] : Cplx{};
    rhs[k] = v - half_idt * (h_diag * v - kin * (left + right));
  }
  solve_tridiagonal(diag, off, rhs);

  WaveField out{field.grid, field.t + dt, {}};
  out.values.assign(size_t(nx), Cplx{});
  for (size_t k = 0; k < n; ++k) out.values[k + 1] = rhs[k];
  return out;
}

std::vector<WaveField> evolve(const WaveField& initial, const MassProfile& M,
                              const TimeProfile& g1, const EvolveConfig& cfg,
                              const WarnFn& warn) {
  cfg.validate();
  initial.grid.validate();
  if (initial.t != cfg.t0)
    throw ConfigError("evolve: initial field time does not match t0");

  double peak = 0.0;
  for (const auto& v : initial.values) peak = std::max(peak, std::abs(v));
  const double edge = std::max(std::abs(initial.values.front()),
                               std::abs(initial.values.back()));
  if (edge > 1e-10 * peak)
    throw ConfigError("evolve: initial state is not windowed");

  const double dx = initial.grid.dx();
  if (cfg.dt > 10.0 * M.eval(cfg.t0) * dx * dx && warn)
    warn("evolve: dt exceeds 10*M*dx^2; accuracy may suffer");

  const double norm0 = l2_norm(initial);
  const std::vector<double> snap_times = cfg.snapshot_times();
  std::vector<WaveField> snapshots;
  snapshots.reserve(snap_times.size());

  WaveField state = initial;
  for (double target : snap_times) {
    // march to the target, shortening the final step to land exactly
    while (state.t < target) {
      const double step = std::min(cfg.dt, target - state.t);
      if (step < 1e-15 * std::max(1.0, std::abs(target))) {
        state.t = target;
        break;
      }
      state = cn_step(state, M, g1, step);
    }
    state.t = target;
    snapshots.push_back(state);
  }

  const double norm1 = l2_norm(snapshots.back());
  if (std::abs(norm1 - norm0) > 1e-6 * norm0)
    throw StabilityError("evolve: norm drift exceeds 1e-6");
  return snapshots;
}

std::vector<std::pair<double, double>> peak_track(
    std::span<const WaveField> fields, double taper_fraction) {
  if (!(taper_fraction > 0.0 && taper_fraction < 0.5))
    throw ConfigError("peak_track: taper_fraction must be in (0, 0.5)");
  std::vector<std::pair<double, double>> out;
  out.reserve(fields.size());
  for (const WaveField& f : fields) {
    const int nx = f.grid.nx;
    int best = 0;
    double best_d = -1.0;
    for (int i = 0; i < nx; ++i) {
      const double d = std::norm(f.values[size_t(i)]);
      if (d > best_d) {
        best_d = d;
        best = i;
      }
    }
    const double band = taper_fraction * double(nx - 1);
    if (double(best) < band || double(nx - 1 - best) < band)
      throw StabilityError("peak_track: density maximum inside taper region");
    // 3-point quadratic refinement
    const double dm = std::norm(f.values[size_t(best - 1)]);
    const double dp = std::norm(f.values[size_t(best + 1)]);
    const double denom = dm - 2.0 * best_d + dp;
    double offset = 0.0;
    if (denom != 0.0) offset = 0.5 * (dm - dp) / denom;
    out.emplace_back(f.t, f.grid.x(best) + offset * f.grid.dx());
  }
  return out;
}

}  // namespace linpot
