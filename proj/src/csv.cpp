#include "linpot/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>

#include "linpot/errors.hpp"

namespace linpot {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string snapshot_filename(long index, double t) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "snap_%06ld_t%.6g.csv", index, t);
  return buf;
}

void write_snapshot_csv(const std::string& path, const WaveField& field) {
  std::ofstream out(path);
  if (!out) throw EvaluationError("cannot open output file: " + path);
  out << "x,re,im,density\n";
  for (int i = 0; i < field.grid.nx; ++i) {
    const auto& v = field.values[size_t(i)];
    out << format_double(field.grid.x(i)) << ',' << format_double(v.real())
        << ',' << format_double(v.imag()) << ',' << format_double(std::norm(v))
        << '\n';
  }
  if (!out) throw EvaluationError("write failed: " + path);
}

void write_trajectory_csv(const std::string& path,
                          const std::vector<TrajectoryRow>& rows) {
  std::ofstream out(path);
  if (!out) throw EvaluationError("cannot open output file: " + path);
  out << "t,x_peak,x0_analytic,x_peak_analytic\n";
  for (const auto& r : rows) {
    out << format_double(r.t) << ',' << format_double(r.x_peak) << ','
        << format_double(r.x0_analytic) << ','
        << format_double(r.x_peak_analytic) << '\n';
  }
  if (!out) throw EvaluationError("write failed: " + path);
}

}  // namespace linpot
