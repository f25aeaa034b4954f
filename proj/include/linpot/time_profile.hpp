#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace linpot {

// Real-valued function of time: the mass M(t) or the force coefficient
// g1(t).  Closed-form variants evaluate exactly; Tabulated interpolates
// with a natural cubic spline (C2, as required by finite-difference
// residual checks downstream).
//
// JSON form: {"kind":"constant","c":..}, {"kind":"sinusoid","q":..,
// "eps0":..,"eps":..,"omega":..}, {"kind":"polynomial","coeffs":[..]},
// {"kind":"tabulated","knots":[..],"values":[..]}.
class TimeProfile {
public:
  struct Constant {
    double c;
  };
  // g1(t) = q * (eps0 + eps * cos(omega * t))
  struct Sinusoid {
    double q;
    double eps0;
    double eps;
    double omega;
  };
  // coefficients in ascending powers of t
  struct Polynomial {
    std::vector<double> coeffs;
  };
  struct Tabulated {
    std::vector<double> knots;   // strictly increasing, >= 4
    std::vector<double> values;
    std::vector<double> second_derivs;  // natural spline, filled at construction
  };

  static TimeProfile constant(double c);
  static TimeProfile sinusoid(double q, double eps0, double eps, double omega);
  static TimeProfile polynomial(std::vector<double> coeffs);
  static TimeProfile tabulated(std::vector<double> knots,
                               std::vector<double> values);

  double operator()(double t) const { return eval(t); }
  double eval(double t) const;

  // Antiderivative A(t) = integral of the profile from 0 to t, available
  // for the closed-form variants only.
  bool has_closed_antiderivative() const;
  double antiderivative(double t) const;
  // B(t) = integral from 0 to t of A(sigma) d sigma (same availability).
  double double_antiderivative(double t) const;

  // Largest interval [lo, hi] on which eval() is defined.  Unbounded for
  // closed-form variants; the knot range for Tabulated.
  double domain_lo() const;
  double domain_hi() const;

  bool is_constant() const { return std::holds_alternative<Constant>(v_); }
  bool is_tabulated() const { return std::holds_alternative<Tabulated>(v_); }
  const std::variant<Constant, Sinusoid, Polynomial, Tabulated>& value() const {
    return v_;
  }

  nlohmann::json to_json() const;
  static TimeProfile from_json(const nlohmann::json& j);

private:
  explicit TimeProfile(std::variant<Constant, Sinusoid, Polynomial, Tabulated> v)
      : v_(std::move(v)) {}
  std::variant<Constant, Sinusoid, Polynomial, Tabulated> v_;
};

// A TimeProfile certified strictly positive on [domain_start, domain_end].
// Certification is exact for Constant and Sinusoid (closed-form minima)
// and a dense-sampling heuristic (10000 points per unit time) for
// Polynomial and Tabulated profiles.
class MassProfile {
public:
  MassProfile(TimeProfile profile, double domain_end);

  double operator()(double t) const { return profile_.eval(t); }
  double eval(double t) const { return profile_.eval(t); }
  const TimeProfile& profile() const { return profile_; }
  double domain_start() const { return domain_start_; }
  double domain_end() const { return domain_end_; }
  bool contains(double t) const {
    return t >= domain_start_ && t <= domain_end_;
  }

  nlohmann::json to_json() const;

private:
  TimeProfile profile_;
  double domain_start_;
  double domain_end_;
};

}  // namespace linpot
