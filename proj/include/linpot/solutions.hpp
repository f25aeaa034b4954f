#pragma once

#include <complex>
#include <variant>

#include <nlohmann/json_fwd.hpp>

#include "linpot/quadrature.hpp"
#include "linpot/time_profile.hpp"
#include "linpot/transform.hpp"

namespace linpot {

using Complex = std::complex<double>;

// Constant-modulus solution labeled by the free-particle momentum A.
struct PlaneWaveSolution {
  double A;
  MassProfile mass;
  TimeProfile force;
  QuadratureConfig quad;

  PlaneWaveSolution(double A_, MassProfile mass_, TimeProfile force_,
                    QuadratureConfig quad_ = {});
};

// Nonspreading Airy-packet solution labeled by the scale B (B < 0 mirrors
// the packet; B = 0 is rejected).
struct AiryPacketSolution {
  double B;
  MassProfile mass;
  TimeProfile force;
  QuadratureConfig quad;

  AiryPacketSolution(double B_, MassProfile mass_, TimeProfile force_,
                     QuadratureConfig quad_ = {});
};

using SolutionDescriptor = std::variant<PlaneWaveSolution, AiryPacketSolution>;

// Constant mass m with the sinusoidal force g1(t) = q(eps0 + eps cos(omega t)),
// the configuration for which fully closed-form wave functions exist.
struct CosineDriveParams {
  double m;
  double q;
  double eps0;
  double eps;
  double omega;

  void validate() const;
  TimeProfile force_profile() const;
  MassProfile mass_profile(double domain_end) const;
};

// --- plane-wave family -------------------------------------------------

// Psi(x,t) = (2pi)^(-1/2) exp{iA[x+nu]} exp{-i A^2 s/2} exp{-i phase_g + i x beta}
Complex plane_wave_psi(const PlaneWaveSolution& sol, double x, double t);
// Same, with the transform state precomputed (grid sweeps at fixed t).
Complex plane_wave_psi_at(const PlaneWaveSolution& sol,
                          const TransformState& st, double x);
// Fully closed form for the cosine drive; no quadrature anywhere.
Complex plane_wave_psi_cosine(const CosineDriveParams& p, double A, double x,
                              double t);

// --- Airy-packet family ------------------------------------------------

Complex airy_psi(const AiryPacketSolution& sol, double x, double t);
Complex airy_psi_at(const AiryPacketSolution& sol, const TransformState& st,
                    double x);
Complex airy_psi_cosine(const CosineDriveParams& p, double B, double x,
                        double t);

// Reference trajectory x0(t) = (B^3/4) s(t)^2 - nested(t); the Airy
// argument of airy_psi equals B (x - x0(t)) identically.
double airy_trajectory(const AiryPacketSolution& sol, double t);
double airy_trajectory_at(const AiryPacketSolution& sol,
                          const TransformState& st);
// Location of the global maximum of |Psi|^2: x0(t) + airy_peak_offset()/B.
double density_peak(const AiryPacketSolution& sol, double t);

// --- verification ------------------------------------------------------

// Strips the accumulated phases from Psi in reverse order and compares the
// remainder with the canonical free-particle solution in the transformed
// coordinates (y, s); returns the absolute deviation.  Values below ~1e-10
// certify the reduction chain.
double reduce_check(const SolutionDescriptor& sol, double x, double t);

// Generic evaluation through the descriptor.
Complex eval_psi(const SolutionDescriptor& sol, double x, double t);
const MassProfile& solution_mass(const SolutionDescriptor& sol);
const TimeProfile& solution_force(const SolutionDescriptor& sol);
const QuadratureConfig& solution_quad(const SolutionDescriptor& sol);

// JSON form: {"family":"plane"|"airy", "A"|"B": number,
//             "mass": profile-object, "force": profile-object}
nlohmann::json solution_to_json(const SolutionDescriptor& sol);
SolutionDescriptor solution_from_json(const nlohmann::json& j,
                                      double domain_end,
                                      const QuadratureConfig& quad = {});

}  // namespace linpot
