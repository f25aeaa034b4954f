#include "linpot/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "linpot/airy.hpp"
#include "linpot/csv.hpp"
#include "linpot/errors.hpp"
#include "linpot/residual.hpp"
#include "linpot/transform.hpp"

namespace linpot {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<double> eval_times(const RunConfig& cfg) {
  if (cfg.n_snapshots == 1) return {cfg.t0};
  std::vector<double> out(size_t(cfg.n_snapshots));
  for (int k = 0; k < cfg.n_snapshots; ++k)
    out[size_t(k)] =
        cfg.t0 + (cfg.t1 - cfg.t0) * double(k) / double(cfg.n_snapshots - 1);
  out.back() = cfg.t1;
  return out;
}

int cmd_eval(const std::string& config_path, const std::string& out_path) {
  const RunConfig cfg = load_run_config(config_path);
  const std::vector<double> times = eval_times(cfg);
  const auto states = transform_grid(solution_mass(cfg.solution),
                                     solution_force(cfg.solution),
                                     std::span<const double>(times), cfg.quad);
  fs::create_directories(out_path);
  for (size_t k = 0; k < times.size(); ++k) {
    WaveField field{cfg.grid, times[k], {}};
    field.values.resize(size_t(cfg.grid.nx));
    for (int i = 0; i < cfg.grid.nx; ++i) {
      const double x = cfg.grid.x(i);
      field.values[size_t(i)] = std::visit(
          [&](const auto& sol) {
            using T = std::decay_t<decltype(sol)>;
            if constexpr (std::is_same_v<T, PlaneWaveSolution>) {
              return plane_wave_psi_at(sol, states[k], x);
            } else {
              return airy_psi_at(sol, states[k], x);
            }
          },
          cfg.solution);
    }
    const fs::path file = fs::path(out_path) / snapshot_filename(long(k), times[k]);
    write_snapshot_csv(file.string(), field);
  }
  return 0;
}

int cmd_residual(const std::string& config_path, long samples, double h,
                 double tol, double perturb,
                 std::optional<std::uint64_t> seed_override) {
  if (samples < 1) throw ConfigError("residual: --samples must be >= 1");
  if (!(h > 0.0)) throw ConfigError("residual: --h must be > 0");
  const RunConfig cfg = load_run_config(config_path);
  const MassProfile& mass = solution_mass(cfg.solution);
  const TimeProfile& force = solution_force(cfg.solution);

  SpaceTimeFn psi = [&cfg, perturb](double x, double t) {
    Complex v = eval_psi(cfg.solution, x, t);
    if (perturb != 0.0) {
      const double phi = perturb * x * x;
      v *= Complex(std::cos(phi), std::sin(phi));
    }
    return v;
  };

  const double t_lo =
      std::max(cfg.t0, std::max(mass.domain_start(), force.domain_lo()) + 2.0 * h);
  const double t_hi =
      std::min(cfg.t1, std::min(mass.domain_end(), force.domain_hi()) - 2.0 * h);
  if (!(t_hi > t_lo))
    throw ConfigError("residual: no valid t range after stencil margins");

  const std::uint64_t seed = seed_override.value_or(cfg.seed);
  const ResidualStats stats =
      residual_scan(psi, mass, force, Range{cfg.grid.xmin, cfg.grid.xmax},
                    Range{t_lo, t_hi}, samples, h, seed);
  json j;
  j["max_abs"] = stats.max_abs;
  j["max_rel"] = stats.max_rel;
  j["mean_rel"] = stats.mean_rel;
  j["n_samples"] = stats.n_samples;
  std::cout << j.dump() << "\n";
  return stats.max_rel < tol ? 0 : 1;
}

int cmd_evolve(const std::string& config_path, const std::string& out_path) {
  const RunConfig cfg = load_run_config(config_path);
  if (!cfg.oracle)
    throw ConfigError("evolve: config has no \"oracle\" section");
  const auto* airy = std::get_if<AiryPacketSolution>(&cfg.solution);
  if (!airy)
    throw ConfigError("evolve: trajectory tracking requires the airy family");

  EvolveConfig ecfg;
  ecfg.dt = cfg.oracle->dt;
  ecfg.t0 = cfg.t0;
  ecfg.t1 = cfg.t1;
  ecfg.taper_fraction = cfg.oracle->taper_fraction;
  ecfg.n_snapshots = cfg.n_snapshots;

  WaveField initial = sample_field(
      cfg.grid, cfg.t0,
      [&](double x, double t) { return airy_psi(*airy, x, t); });
  apply_window(initial, ecfg.taper_fraction);

  const auto snapshots =
      evolve(initial, airy->mass, airy->force, ecfg,
             [](const std::string& msg) { std::cerr << "warning: " << msg << "\n"; });
  const auto peaks = peak_track(snapshots, ecfg.taper_fraction);

  fs::create_directories(out_path);
  std::vector<TrajectoryRow> rows;
  rows.reserve(snapshots.size());
  for (size_t k = 0; k < snapshots.size(); ++k) {
    const fs::path file =
        fs::path(out_path) / snapshot_filename(long(k), snapshots[k].t);
    write_snapshot_csv(file.string(), snapshots[k]);
    TrajectoryRow row;
    row.t = snapshots[k].t;
    row.x_peak = peaks[k].second;
    row.x0_analytic = airy_trajectory(*airy, snapshots[k].t);
    row.x_peak_analytic = row.x0_analytic + airy_peak_offset() / airy->B;
    rows.push_back(row);
  }
  write_trajectory_csv((fs::path(out_path) / "trajectory.csv").string(), rows);
  return 0;
}

}  // namespace

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config JSON parse error: ") + e.what());
  }
  try {
    GridSpec grid{j.at("grid").at("xmin").get<double>(),
                  j.at("grid").at("xmax").get<double>(),
                  j.at("grid").at("nx").get<int>()};
    grid.validate();
    const auto& times = j.at("times");
    const double t0 = times.at("t0").get<double>();
    const double t1 = times.at("t1").get<double>();
    const int n_snapshots = times.at("n_snapshots").get<int>();
    if (n_snapshots < 1) throw ConfigError("config: n_snapshots must be >= 1");
    if (!(t1 >= t0)) throw ConfigError("config: t1 must be >= t0");

    QuadratureConfig quad;
    if (j.contains("quad")) {
      const auto& q = j.at("quad");
      if (q.contains("abs_tol")) quad.abs_tol = q.at("abs_tol").get<double>();
      if (q.contains("rel_tol")) quad.rel_tol = q.at("rel_tol").get<double>();
      if (q.contains("max_subdivisions"))
        quad.max_subdivisions = q.at("max_subdivisions").get<int>();
      if (q.contains("prefer_closed_forms"))
        quad.prefer_closed_forms = q.at("prefer_closed_forms").get<bool>();
      quad.validate();
    }

    RunConfig cfg{solution_from_json(j.at("solution"), t1, quad),
                  grid,
                  t0,
                  t1,
                  n_snapshots,
                  std::nullopt,
                  quad,
                  0};
    if (j.contains("oracle")) {
      RunConfig::OracleParams op;
      op.dt = j.at("oracle").at("dt").get<double>();
      if (j.at("oracle").contains("taper_fraction"))
        op.taper_fraction = j.at("oracle").at("taper_fraction").get<double>();
      cfg.oracle = op;
    }
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    return cfg;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config JSON: ") + e.what());
  }
}

int run_cli(std::vector<std::string> args) {
  CLI::App app{"analytic and numerical evolution for a quantum particle in a "
               "time-dependent linear potential"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  long samples = 1000;
  double h = 1e-4;
  double tol = 1e-5;
  double perturb = 0.0;
  std::optional<std::uint64_t> seed;

  auto* eval = app.add_subcommand("eval", "tabulate a solution on a grid");
  eval->add_option("--config", config_path, "JSON run configuration")
      ->required();
  eval->add_option("--out", out_path, "output directory")->required();

  auto* residual =
      app.add_subcommand("residual", "finite-difference residual scan");
  residual->set_help_flag("--help", "print help");  // frees -h for --h
  residual->add_option("--config", config_path, "JSON run configuration")
      ->required();
  residual->add_option("--samples", samples, "number of (x,t) samples");
  residual->add_option("--h", h, "finite-difference step");
  residual->add_option("--tol", tol, "pass threshold on max_rel");
  residual->add_option("--perturb", perturb,
                       "multiply psi by exp(i*perturb*x^2) (test only)");
  residual->add_option("--seed", seed, "override config seed");

  auto* evolve = app.add_subcommand(
      "evolve", "Crank-Nicolson propagation with peak tracking");
  evolve->add_option("--config", config_path, "JSON run configuration")
      ->required();
  evolve->add_option("--out", out_path, "output directory")->required();

  // CLI11 wants argv-style input including the program name
  std::vector<const char*> argv;
  argv.push_back("linpot");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help();
      return 0;
    }
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (eval->parsed()) return cmd_eval(config_path, out_path);
    if (residual->parsed())
      return cmd_residual(config_path, samples, h, tol, perturb, seed);
    return cmd_evolve(config_path, out_path);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const StabilityError& e) {
    std::cerr << "stability error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace linpot
