#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include <nlohmann/json.hpp>

#include "linpot/errors.hpp"
#include "linpot/time_profile.hpp"

using namespace linpot;

TEST_CASE("closed-form profiles evaluate exactly") {
  CHECK(TimeProfile::constant(2.0).eval(7.0) == 2.0);
  // eps = 0 degenerates to a constant
  CHECK(TimeProfile::sinusoid(1.0, 1.0, 0.0, 1.0).eval(3.0) == 1.0);
  CHECK(TimeProfile::polynomial({0.0, 1.0}).eval(0.5) == 0.5);
}

TEST_CASE("sinusoid evaluates q(eps0 + eps cos wt)") {
  auto p = TimeProfile::sinusoid(2.0, 0.5, 1.5, 3.0);
  for (double t : {0.0, 0.7, 2.9, -1.2}) {
    CHECK(p.eval(t) ==
          doctest::Approx(2.0 * (0.5 + 1.5 * std::cos(3.0 * t))).epsilon(1e-15));
  }
}

TEST_CASE("profile invariants reject bad parameters") {
  CHECK_THROWS_AS(TimeProfile::sinusoid(1.0, 1.0, 1.0, 0.0), ConfigError);
  CHECK_THROWS_AS(TimeProfile::sinusoid(1.0, 1.0, 1.0, -2.0), ConfigError);
  CHECK_THROWS_AS(TimeProfile::polynomial({}), ConfigError);
  CHECK_THROWS_AS(
      TimeProfile::polynomial({1.0, std::numeric_limits<double>::infinity()}),
      ConfigError);
  CHECK_THROWS_AS(TimeProfile::tabulated({0.0, 1.0, 2.0}, {1.0, 1.0, 1.0}),
                  ConfigError);  // < 4 knots
  CHECK_THROWS_AS(
      TimeProfile::tabulated({0.0, 1.0, 1.0, 2.0}, {1.0, 1.0, 1.0, 1.0}),
      ConfigError);  // not strictly increasing
  CHECK_THROWS_AS(
      TimeProfile::tabulated({0.0, 1.0, 2.0, 3.0},
                             {1.0, std::numeric_limits<double>::quiet_NaN(),
                              1.0, 1.0}),
      ConfigError);
}

TEST_CASE("tabulated profile interpolates a smooth function to spline accuracy") {
  std::vector<double> knots, values;
  const int n = 101;
  for (int i = 0; i < n; ++i) {
    const double t = 3.0 * M_PI * double(i) / double(n - 1);
    knots.push_back(t);
    values.push_back(std::sin(t));
  }
  auto p = TimeProfile::tabulated(knots, values);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const double t = 3.0 * M_PI * (double(i) + 0.31) / 500.0;
    worst = std::max(worst, std::abs(p.eval(t) - std::sin(t)));
  }
  CHECK(worst < 1e-5);
  CHECK_THROWS_AS(p.eval(-0.1), DomainError);
  CHECK_THROWS_AS(p.eval(3.0 * M_PI + 0.1), DomainError);
}

TEST_CASE("closed-form antiderivatives match quadrature-free identities") {
  auto s = TimeProfile::sinusoid(2.0, 0.3, 0.7, 1.5);
  for (double t : {0.0, 0.9, 4.2}) {
    const double expected =
        2.0 * (0.3 * t + 0.7 / 1.5 * std::sin(1.5 * t));
    CHECK(s.antiderivative(t) == doctest::Approx(expected).epsilon(1e-15));
  }
  auto poly = TimeProfile::polynomial({1.0, 2.0, 3.0});
  // antider of 1 + 2t + 3t^2 is t + t^2 + t^3
  CHECK(poly.antiderivative(2.0) == doctest::Approx(14.0).epsilon(1e-15));
  // double antider: t^2/2 + t^3/3 + t^4/4
  CHECK(poly.double_antiderivative(2.0) ==
        doctest::Approx(2.0 + 8.0 / 3.0 + 4.0).epsilon(1e-15));
  CHECK_FALSE(TimeProfile::tabulated({0, 1, 2, 3}, {1, 1, 1, 1})
                  .has_closed_antiderivative());
}

TEST_CASE("JSON round-trip preserves every profile kind") {
  std::vector<TimeProfile> profiles;
  profiles.push_back(TimeProfile::constant(2.5));
  profiles.push_back(TimeProfile::sinusoid(1.0, 0.5, 0.25, 2.0));
  profiles.push_back(TimeProfile::polynomial({0.1, -0.2, 0.3}));
  profiles.push_back(
      TimeProfile::tabulated({0.0, 0.5, 1.0, 1.5, 2.0},
                             {1.0, 1.2, 0.9, 1.1, 1.0}));
  for (const auto& p : profiles) {
    auto q = TimeProfile::from_json(p.to_json());
    for (double t : {0.0, 0.4, 1.1, 1.9}) {
      CHECK(q.eval(t) == p.eval(t));
    }
  }
}

TEST_CASE("profile JSON rejects malformed input") {
  CHECK_THROWS_AS(TimeProfile::from_json(nlohmann::json::parse("42")),
                  ConfigError);
  CHECK_THROWS_AS(
      TimeProfile::from_json(nlohmann::json::parse("{\"kind\":\"foo\"}")),
      ConfigError);
  CHECK_THROWS_AS(
      TimeProfile::from_json(nlohmann::json::parse("{\"kind\":\"constant\"}")),
      ConfigError);
}

TEST_CASE("mass positivity certification") {
  CHECK_NOTHROW(MassProfile(TimeProfile::constant(1.0), 10.0));
  CHECK_THROWS_AS(MassProfile(TimeProfile::constant(-1.0), 10.0), ConfigError);
  CHECK_THROWS_AS(MassProfile(TimeProfile::constant(0.0), 10.0), ConfigError);
  // 1 + 0.3 sin t stays positive
  CHECK_NOTHROW(MassProfile(TimeProfile::sinusoid(1.0, 1.0, 0.3, 1.0), 10.0));
  // 1 + 2 cos t dips negative within [0, 10]
  CHECK_THROWS_AS(MassProfile(TimeProfile::sinusoid(1.0, 1.0, 2.0, 1.0), 10.0),
                  ConfigError);
  // ... but stays positive on a domain that ends before the dip
  CHECK_NOTHROW(MassProfile(TimeProfile::sinusoid(1.0, 1.0, 2.0, 1.0), 0.5));
  // polynomial heuristic: 1 - t goes negative past t = 1
  CHECK_THROWS_AS(MassProfile(TimeProfile::polynomial({1.0, -1.0}), 2.0),
                  ConfigError);
  CHECK_NOTHROW(MassProfile(TimeProfile::polynomial({1.0, -1.0}), 0.5));
}

TEST_CASE("tabulated mass must cover the requested domain") {
  auto tab = TimeProfile::tabulated({-0.2, 3.0, 6.0, 9.0}, {1.0, 1.0, 1.0, 1.0});
  CHECK_NOTHROW(MassProfile(tab, 8.0));
  CHECK_THROWS_AS(MassProfile(tab, 9.5), ConfigError);
}

TEST_CASE("mass domain extends slightly below zero for closed forms") {
  MassProfile m(TimeProfile::constant(1.0), 5.0);
  CHECK(m.domain_start() < 0.0);
  CHECK(m.contains(-1e-4));
  CHECK(m.contains(5.0));
  CHECK_FALSE(m.contains(5.1));
}
