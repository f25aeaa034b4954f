#pragma once

#include <functional>
#include <span>
#include <vector>

#include "linpot/quadrature.hpp"
#include "linpot/time_profile.hpp"

namespace linpot {

// The accumulated time integrals that parameterize the analytic wave
// functions, all taken from 0 to t:
//   s       rescaled time,  integral of 1/M
//   beta    -integral of g1
//   nu      -integral of beta/M
//   phase_g integral of G = beta^2/(2M)
//   nested  integral over tau of (1/M(tau)) * integral of g1 up to tau
// nu and nested are mathematically equal (nu = +nested); they are computed
// by different routes and cross-checked at construction.
struct TransformState {
  double t = 0.0;
  double s = 0.0;
  double beta = 0.0;
  double nu = 0.0;
  double phase_g = 0.0;
  double nested = 0.0;
};

// Cumulative antiderivative F(tau) = integral of f from `begin` to tau.
// Prefix sums are cached once on an adaptively refined grid (segments
// bisected until the Gauss-Kronrod defect falls under a per-length error
// budget); eval(tau) adds one narrow Gauss-Kronrod panel from the nearest
// cached node, so lookups stay O(log n) and inherit the certified
// per-segment accuracy.
class CumulativeIntegral {
public:
  CumulativeIntegral(std::function<double(double)> f, double begin,
                     double end, const QuadratureConfig& cfg);

  double eval(double tau) const;
  double begin() const { return nodes_.front().t; }
  double end() const { return nodes_.back().t; }
  size_t node_count() const { return nodes_.size(); }

private:
  struct Node {
    double t;
    double cum;  // F(t)
  };
  std::function<double(double)> f_;
  std::vector<Node> nodes_;
};

// All five integrals at time t.  Uses closed-form antiderivatives when the
// mass is Constant and g1 has one (Constant/Sinusoid/Polynomial) and
// cfg.prefer_closed_forms is set; otherwise adaptive quadrature with the
// inner integral cached on a refinement grid.  t may be slightly negative
// (within the mass profile's certified margin) so that time stencils can
// straddle zero.
TransformState transform_state(const MassProfile& M, const TimeProfile& g1,
                               double t, const QuadratureConfig& cfg);

// Batch evaluation at ascending times, reusing cumulative tables across
// the whole span.  Element k agrees with transform_state(times[k]) within
// twice the quadrature tolerance.
std::vector<TransformState> transform_grid(const MassProfile& M,
                                           const TimeProfile& g1,
                                           std::span<const double> times,
                                           const QuadratureConfig& cfg);

}  // namespace linpot
