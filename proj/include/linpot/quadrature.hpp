#pragma once

#include <functional>

namespace linpot {

// Tolerances for the adaptive integrator.  The accepted error of a result
// I is max(abs_tol, rel_tol * |I|).  `prefer_closed_forms` lets callers
// that know closed-form antiderivatives exist bypass quadrature entirely;
// tests switch it off to force the numerical path.
struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
  bool prefer_closed_forms = true;

  void validate() const;
};

// Adaptive Gauss-Kronrod 15-point quadrature of f over [a, b] with
// worst-interval bisection.  Deterministic for fixed inputs and config.
// Throws EvaluationError if f produces NaN/Inf, QuadratureError (carrying
// the best estimate and its bound) if the tolerance is not reached within
// cfg.max_subdivisions bisections.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg);

// Single non-adaptive Gauss-Kronrod 15-point panel; returns the Kronrod
// estimate and stores |kronrod - gauss| in *err_est if non-null.
double gk15_panel(const std::function<double(double)>& f, double a, double b,
                  double* err_est);

}  // namespace linpot
