#pragma once

#include <string>
#include <vector>

#include "linpot/grid.hpp"

namespace linpot {

// Shortest round-trip decimal representation (up to 17 significant
// digits), locale-independent.
std::string format_double(double v);

// snap_{index:06}_t{t:.6}.csv
std::string snapshot_filename(long index, double t);

// Columns: x,re,im,density
void write_snapshot_csv(const std::string& path, const WaveField& field);

struct TrajectoryRow {
  double t;
  double x_peak;
  double x0_analytic;
  double x_peak_analytic;
};

// Columns: t,x_peak,x0_analytic,x_peak_analytic
void write_trajectory_csv(const std::string& path,
                          const std::vector<TrajectoryRow>& rows);

}  // namespace linpot
