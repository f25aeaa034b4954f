#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "linpot/errors.hpp"
#include "linpot/quadrature.hpp"

using namespace linpot;

TEST_CASE("constant integrand is exact") {
  QuadratureConfig cfg;
  CHECK(integrate([](double) { return 1.0; }, 0.0, 1.0, cfg) ==
        doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("polynomial integrand is exact for the 15-point rule") {
  QuadratureConfig cfg;
  const double r = integrate([](double t) { return t * t; }, 0.0, 1.0, cfg);
  CHECK(r == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("cosine over [0, pi/2] matches sin antiderivative") {
  QuadratureConfig cfg;
  const double r =
      integrate([](double t) { return std::cos(t); }, 0.0, M_PI / 2.0, cfg);
  CHECK(std::abs(r - 1.0) < std::max(cfg.abs_tol, cfg.rel_tol));
}

TEST_CASE("oscillatory integrand converges to the closed form") {
  QuadratureConfig cfg;
  const double w = 37.0;
  const double r =
      integrate([w](double t) { return std::sin(w * t); }, 0.0, 3.0, cfg);
  const double expected = (1.0 - std::cos(w * 3.0)) / w;
  CHECK(r == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("empty interval integrates to zero, reversed bounds are rejected") {
  QuadratureConfig cfg;
  CHECK(integrate([](double t) { return t; }, 2.0, 2.0, cfg) == 0.0);
  CHECK_THROWS_AS(integrate([](double t) { return t; }, 1.0, 0.0, cfg),
                  ConfigError);
}

TEST_CASE("NaN from the integrand raises an evaluation error") {
  QuadratureConfig cfg;
  CHECK_THROWS_AS(integrate(
                      [](double t) {
                        return t < 0.5 ? 1.0
                                       : std::numeric_limits<double>::quiet_NaN();
                      },
                      0.0, 1.0, cfg),
                  EvaluationError);
}

TEST_CASE("non-convergence carries the best estimate and bound") {
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-16;
  cfg.rel_tol = 1e-16;
  cfg.max_subdivisions = 2;
  bool thrown = false;
  try {
    integrate([](double t) { return std::sin(200.0 * t); }, 0.0, 10.0, cfg);
  } catch (const QuadratureError& e) {
    thrown = true;
    CHECK(std::isfinite(e.estimate()));
    CHECK(e.error_bound() > 0.0);
  }
  CHECK(thrown);
}

TEST_CASE("deterministic: repeated runs give identical bits") {
  QuadratureConfig cfg;
  auto f = [](double t) { return std::exp(-t * t) * std::cos(5.0 * t); };
  const double a = integrate(f, -3.0, 3.0, cfg);
  const double b = integrate(f, -3.0, 3.0, cfg);
  CHECK(a == b);
}

TEST_CASE("config invariants are enforced") {
  QuadratureConfig cfg;
  cfg.rel_tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = {};
  cfg.abs_tol = -1.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = {};
  cfg.max_subdivisions = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}
