#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "linpot/errors.hpp"

namespace linpot {

// Uniform spatial grid with nx points, spacing dx = (xmax-xmin)/(nx-1).
struct GridSpec {
  double xmin;
  double xmax;
  int nx;

  void validate() const {
    if (!(xmax > xmin)) throw ConfigError("grid: xmax must exceed xmin");
    if (nx < 16) throw ConfigError("grid: nx must be >= 16");
  }
  double dx() const { return (xmax - xmin) / double(nx - 1); }
  double x(int i) const { return xmin + dx() * double(i); }
};

// Sampled complex field over a grid at a fixed time.
struct WaveField {
  GridSpec grid;
  double t = 0.0;
  std::vector<std::complex<double>> values;
};

using SpaceTimeFn = std::function<std::complex<double>(double x, double t)>;

// Sample psi(x, t) on the grid.
inline WaveField sample_field(const GridSpec& grid, double t,
                              const SpaceTimeFn& psi) {
  grid.validate();
  WaveField f{grid, t, {}};
  f.values.resize(size_t(grid.nx));
  for (int i = 0; i < grid.nx; ++i) {
    f.values[size_t(i)] = psi(grid.x(i), t);
    if (!std::isfinite(f.values[size_t(i)].real()) ||
        !std::isfinite(f.values[size_t(i)].imag()))
      throw EvaluationError("sample_field: non-finite psi value");
  }
  return f;
}

// Smooth cosine taper over the outer taper_fraction of the grid on each
// side; boundary values become exactly zero.
inline void apply_window(WaveField& f, double taper_fraction) {
  if (!(taper_fraction > 0.0 && taper_fraction < 0.5))
    throw ConfigError("taper_fraction must be in (0, 0.5)");
  const int n = f.grid.nx;
  const double band = taper_fraction * double(n - 1);
  for (int i = 0; i < n; ++i) {
    const double d = std::min(double(i), double(n - 1 - i));
    if (d < band) {
      const double w = 0.5 * (1.0 - std::cos(M_PI * d / band));
      f.values[size_t(i)] *= w;
    }
  }
}

// Discrete L2 norm with dx weight.
inline double l2_norm(const WaveField& f) {
  double acc = 0.0;
  for (const auto& v : f.values) acc += std::norm(v);
  return std::sqrt(acc * f.grid.dx());
}

}  // namespace linpot
