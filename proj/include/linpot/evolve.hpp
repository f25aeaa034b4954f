#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linpot/grid.hpp"
#include "linpot/time_profile.hpp"

namespace linpot {

// Fixed-step Crank-Nicolson propagation setup.  Dirichlet-zero boundaries;
// the initial state must be windowed (cosine taper over the outer
// taper_fraction of the grid) so boundary amplitudes are negligible.
struct EvolveConfig {
  double dt;
  double t0;
  double t1;
  double taper_fraction = 0.25;
  int n_snapshots = 2;

  void validate() const;
  // Snapshot times: t0..t1 inclusive for n_snapshots >= 2, {t1} for 1.
  std::vector<double> snapshot_times() const;
};

using WarnFn = std::function<void(const std::string&)>;

// One Crank-Nicolson step of size dt from field.t, with H evaluated at the
// midpoint t + dt/2:
//   (I + i dt/2 H) psi_next = (I - i dt/2 H) psi
// solved by complex tridiagonal elimination.  Unitary on the interior.
WaveField cn_step(const WaveField& field, const MassProfile& M,
                  const TimeProfile& g1, double dt);

// Propagate from t0 to t1 (final time hit exactly; the last step of each
// leg is shortened as needed), returning the requested snapshots.  Throws
// StabilityError if the L2 norm drifts by more than 1e-6 over the run.
// An accuracy warning (dt > 10 M dx^2) is reported through `warn`.
std::vector<WaveField> evolve(const WaveField& initial, const MassProfile& M,
                              const TimeProfile& g1, const EvolveConfig& cfg,
                              const WarnFn& warn = {});

// Per snapshot, the location of the global density maximum refined by
// 3-point quadratic interpolation.  Throws StabilityError if a maximum
// falls inside the taper region (boundary contamination).
std::vector<std::pair<double, double>> peak_track(
    std::span<const WaveField> fields, double taper_fraction);

}  // namespace linpot
