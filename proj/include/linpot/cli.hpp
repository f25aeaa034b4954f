#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linpot/evolve.hpp"
#include "linpot/grid.hpp"
#include "linpot/solutions.hpp"

namespace linpot {

// JSON run configuration shared by all subcommands:
// {
//   "solution": {"family":"plane"|"airy", "A"|"B":num, "mass":{...}, "force":{...}},
//   "grid":     {"xmin":num, "xmax":num, "nx":int},
//   "times":    {"t0":num, "t1":num, "n_snapshots":int},
//   "oracle":   {"dt":num, "taper_fraction":num},        // optional
//   "quad":     {"abs_tol":num, "rel_tol":num,
//                "max_subdivisions":int,
//                "prefer_closed_forms":bool},            // optional
//   "seed":     int                                      // optional
// }
struct RunConfig {
  SolutionDescriptor solution;
  GridSpec grid;
  double t0;
  double t1;
  int n_snapshots;
  struct OracleParams {
    double dt;
    double taper_fraction = 0.25;
  };
  std::optional<OracleParams> oracle;
  QuadratureConfig quad;
  std::uint64_t seed = 0;
};

RunConfig load_run_config(const std::string& path);

// Exit codes: 0 success/pass, 1 check failed, 2 config error,
// 3 numeric error, 4 stability error.
int run_cli(std::vector<std::string> args);

}  // namespace linpot
