#include "linpot/solutions.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "linpot/airy.hpp"
#include "linpot/errors.hpp"

namespace linpot {
namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014327;  // (2 pi)^(-1/2)

Complex unit_phase(double phi) { return {std::cos(phi), std::sin(phi)}; }

}  // namespace

PlaneWaveSolution::PlaneWaveSolution(double A_, MassProfile mass_,
                                     TimeProfile force_, QuadratureConfig quad_)
    : A(A_), mass(std::move(mass_)), force(std::move(force_)), quad(quad_) {
  if (!std::isfinite(A)) throw ConfigError("plane wave: A must be finite");
  quad.validate();
}

AiryPacketSolution::AiryPacketSolution(double B_, MassProfile mass_,
                                       TimeProfile force_,
                                       QuadratureConfig quad_)
    : B(B_), mass(std::move(mass_)), force(std::move(force_)), quad(quad_) {
  if (!std::isfinite(B) || B == 0.0)
    throw ConfigError("airy packet: B must be finite and nonzero");
  quad.validate();
}

void CosineDriveParams::validate() const {
  if (!(m > 0.0) || !std::isfinite(m))
    throw ConfigError("cosine drive: m must be > 0");
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw ConfigError("cosine drive: omega must be > 0");
  if (!std::isfinite(q) || !std::isfinite(eps0) || !std::isfinite(eps))
    throw ConfigError("cosine drive: parameters must be finite");
}

TimeProfile CosineDriveParams::force_profile() const {
  validate();
  return TimeProfile::sinusoid(q, eps0, eps, omega);
}

MassProfile CosineDriveParams::mass_profile(double domain_end) const {
  validate();
  return MassProfile(TimeProfile::constant(m), domain_end);
}

Complex plane_wave_psi_at(const PlaneWaveSolution& sol,
                          const TransformState& st, double x) {
  const double phase = sol.A * (x + st.nu) - 0.5 * sol.A * sol.A * st.s -
                       st.phase_g + x * st.beta;
  return kInvSqrt2Pi * unit_phase(phase);
}

Complex plane_wave_psi(const PlaneWaveSolution& sol, double x, double t) {
  return plane_wave_psi_at(sol, transform_state(sol.mass, sol.force, t, sol.quad),
                           x);
}

Complex plane_wave_psi_cosine(const CosineDriveParams& p, double A, double x,
                              double t) {
  p.validate();
  const double w = p.omega;
  const double wt = w * t;
  const double nu = p.q / p.m *
                    (0.5 * p.eps0 * t * t - p.eps / (w * w) * std::cos(wt) +
                     p.eps / (w * w));
  const double phase_free = A * (x + nu) - 0.5 * A * A * t / p.m;
  const double phase_beta = -p.q / w * (p.eps0 * wt + p.eps * std::sin(wt)) * x;
  const double bracket =
      p.eps0 * p.eps0 * wt * wt * wt / 3.0 +
      2.0 * p.eps0 * p.eps * (std::sin(wt) - wt * std::cos(wt)) +
      p.eps * p.eps * (0.5 * wt - 0.25 * std::sin(2.0 * wt));
  const double phase_g = p.q * p.q / (2.0 * p.m * w * w * w) * bracket;
  return kInvSqrt2Pi * unit_phase(phase_free + phase_beta - phase_g);
}

Complex airy_psi_at(const AiryPacketSolution& sol, const TransformState& st,
                    double x) {
  const double b3 = sol.B * sol.B * sol.B;
  const double arg = sol.B * (x + st.nested - 0.25 * b3 * st.s * st.s);
  const double phase = 0.5 * b3 * st.s *
                           (x + st.nested - b3 * st.s * st.s / 6.0) -
                       st.phase_g + x * st.beta;
  return airy_ai(arg).ai * unit_phase(phase);
}

Complex airy_psi(const AiryPacketSolution& sol, double x, double t) {
  return airy_psi_at(sol, transform_state(sol.mass, sol.force, t, sol.quad), x);
}

Complex airy_psi_cosine(const CosineDriveParams& p, double B, double x,
                        double t) {
  p.validate();
  if (B == 0.0) throw ConfigError("airy packet: B must be nonzero");
  const double w = p.omega;
  const double wt = w * t;
  const double b3 = B * B * B;
  const double shift = p.q * p.eps0 / (2.0 * p.m) * t * t -
                       p.q * p.eps / (p.m * w * w) * std::cos(wt) +
                       p.q * p.eps / (p.m * w * w);
  const double arg = B * (x + shift - b3 * t * t / (4.0 * p.m * p.m));
  const double phase_front =
      b3 * t / (2.0 * p.m) * (x + shift - b3 * t * t / (6.0 * p.m * p.m));
  const double phase_beta =
      -x * (p.q * p.eps0 * t + p.q * p.eps / w * std::sin(wt));
  const double phase_g =
      p.q * p.q / (2.0 * p.m) *
      (p.eps0 * p.eps0 * t * t * t / 3.0 +
       p.eps * p.eps / (2.0 * w * w * w) * (wt - 0.5 * std::sin(2.0 * wt)) +
       2.0 * p.eps0 * p.eps / (w * w * w) * (std::sin(wt) - wt * std::cos(wt)));
  return airy_ai(arg).ai * unit_phase(phase_front + phase_beta - phase_g);
}

double airy_trajectory_at(const AiryPacketSolution& sol,
                          const TransformState& st) {
  const double b3 = sol.B * sol.B * sol.B;
  return 0.25 * b3 * st.s * st.s - st.nested;
}

double airy_trajectory(const AiryPacketSolution& sol, double t) {
  return airy_trajectory_at(sol,
                            transform_state(sol.mass, sol.force, t, sol.quad));
}

double density_peak(const AiryPacketSolution& sol, double t) {
  return airy_trajectory(sol, t) + airy_peak_offset() / sol.B;
}

double reduce_check(const SolutionDescriptor& sol, double x, double t) {
  const TransformState st = transform_state(solution_mass(sol),
                                            solution_force(sol), t,
                                            solution_quad(sol));
  const double y = x + st.nu;
  const double s = st.s;
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        Complex psi;
        Complex canonical;
        if constexpr (std::is_same_v<T, PlaneWaveSolution>) {
          psi = plane_wave_psi_at(v, st, x);
          canonical = kInvSqrt2Pi * unit_phase(v.A * y - 0.5 * v.A * v.A * s);
        } else {
          psi = airy_psi_at(v, st, x);
          const double b3 = v.B * v.B * v.B;
          canonical = airy_ai(v.B * (y - 0.25 * b3 * s * s)).ai *
                      unit_phase(0.5 * b3 * s * (y - b3 * s * s / 6.0));
        }
        // strip in reverse order: first the x beta phase, then the
        // accumulated G phase
        const Complex remainder =
            psi * unit_phase(-x * st.beta) * unit_phase(st.phase_g);
        return std::abs(remainder - canonical);
      },
      sol);
}

Complex eval_psi(const SolutionDescriptor& sol, double x, double t) {
  return std::visit(
      [&](const auto& v) -> Complex {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PlaneWaveSolution>) {
          return plane_wave_psi(v, x, t);
        } else {
          return airy_psi(v, x, t);
        }
      },
      sol);
}

const MassProfile& solution_mass(const SolutionDescriptor& sol) {
  return std::visit([](const auto& v) -> const MassProfile& { return v.mass; },
                    sol);
}

const TimeProfile& solution_force(const SolutionDescriptor& sol) {
  return std::visit([](const auto& v) -> const TimeProfile& { return v.force; },
                    sol);
}

const QuadratureConfig& solution_quad(const SolutionDescriptor& sol) {
  return std::visit(
      [](const auto& v) -> const QuadratureConfig& { return v.quad; }, sol);
}

nlohmann::json solution_to_json(const SolutionDescriptor& sol) {
  return std::visit(
      [](const auto& v) -> nlohmann::json {
        using T = std::decay_t<decltype(v)>;
        nlohmann::json j;
        if constexpr (std::is_same_v<T, PlaneWaveSolution>) {
          j["family"] = "plane";
          j["A"] = v.A;
        } else {
          j["family"] = "airy";
          j["B"] = v.B;
        }
        j["mass"] = v.mass.to_json();
        j["force"] = v.force.to_json();
        return j;
      },
      sol);
}

SolutionDescriptor solution_from_json(const nlohmann::json& j,
                                      double domain_end,
                                      const QuadratureConfig& quad) {
  if (!j.is_object() || !j.contains("family"))
    throw ConfigError("solution JSON must be an object with a \"family\" field");
  try {
    const std::string family = j.at("family").get<std::string>();
    MassProfile mass(TimeProfile::from_json(j.at("mass")), domain_end);
    TimeProfile force = TimeProfile::from_json(j.at("force"));
    if (family == "plane") {
      return PlaneWaveSolution(j.at("A").get<double>(), std::move(mass),
                               std::move(force), quad);
    } else if (family == "airy") {
      return AiryPacketSolution(j.at("B").get<double>(), std::move(mass),
                                std::move(force), quad);
    }
    throw ConfigError("unknown solution family: " + family);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("solution JSON: ") + e.what());
  }
}

}  // namespace linpot
