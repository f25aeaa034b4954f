#include "linpot/time_profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

#include "linpot/errors.hpp"

namespace linpot {
namespace {

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](double x) { return std::isfinite(x); });
}

// Second derivatives of the natural cubic spline through (knots, values).
std::vector<double> natural_spline_second_derivs(
    const std::vector<double>& t, const std::vector<double>& y) {
  const size_t n = t.size();
  std::vector<double> m(n, 0.0);   // second derivatives
  std::vector<double> diag(n, 0.0), rhs(n, 0.0), upper(n, 0.0);
  diag[0] = 1.0;
  for (size_t i = 1; i + 1 < n; ++i) {
    const double h0 = t[i] - t[i - 1];
    const double h1 = t[i + 1] - t[i];
    diag[i] = 2.0 * (h0 + h1);
    upper[i] = h1;
    rhs[i] = 6.0 * ((y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0);
  }
  diag[n - 1] = 1.0;
  // Thomas elimination; the lower diagonal at row i is h0 = t[i]-t[i-1].
  for (size_t i = 2; i + 1 < n; ++i) {
    const double w = (t[i] - t[i - 1]) / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  for (size_t i = n - 2; i >= 1; --i) {
    m[i] = (rhs[i] - upper[i] * m[i + 1]) / diag[i];
  }
  return m;
}

double spline_eval(const TimeProfile::Tabulated& tab, double t) {
  const auto& knots = tab.knots;
  if (t < knots.front() || t > knots.back())
    throw DomainError("tabulated profile evaluated outside knot range");
  size_t hi = std::upper_bound(knots.begin(), knots.end(), t) - knots.begin();
  hi = std::clamp<size_t>(hi, 1, knots.size() - 1);
  const size_t lo = hi - 1;
  const double h = knots[hi] - knots[lo];
  const double a = (knots[hi] - t) / h;
  const double b = (t - knots[lo]) / h;
  return a * tab.values[lo] + b * tab.values[hi] +
         ((a * a * a - a) * tab.second_derivs[lo] +
          (b * b * b - b) * tab.second_derivs[hi]) *
             h * h / 6.0;
}

double poly_eval(const std::vector<double>& c, double t) {
  double r = 0.0;
  for (size_t i = c.size(); i-- > 0;) r = r * t + c[i];
  return r;
}

}  // namespace

TimeProfile TimeProfile::constant(double c) {
  if (!std::isfinite(c)) throw ConfigError("constant profile: c must be finite");
  return TimeProfile(Constant{c});
}

TimeProfile TimeProfile::sinusoid(double q, double eps0, double eps,
                                  double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw ConfigError("sinusoid profile: omega must be > 0");
  if (!std::isfinite(q) || !std::isfinite(eps0) || !std::isfinite(eps))
    throw ConfigError("sinusoid profile: parameters must be finite");
  return TimeProfile(Sinusoid{q, eps0, eps, omega});
}

TimeProfile TimeProfile::polynomial(std::vector<double> coeffs) {
  if (coeffs.empty())
    throw ConfigError("polynomial profile: coefficient list is empty");
  if (!all_finite(coeffs))
    throw ConfigError("polynomial profile: coefficients must be finite");
  return TimeProfile(Polynomial{std::move(coeffs)});
}

TimeProfile TimeProfile::tabulated(std::vector<double> knots,
                                   std::vector<double> values) {
  if (knots.size() < 4)
    throw ConfigError("tabulated profile: needs at least 4 knots");
  if (knots.size() != values.size())
    throw ConfigError("tabulated profile: knots/values size mismatch");
  if (!all_finite(knots) || !all_finite(values))
    throw ConfigError("tabulated profile: knots and values must be finite");
  for (size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i] > knots[i - 1]))
      throw ConfigError("tabulated profile: knots must be strictly increasing");
  }
  Tabulated tab{std::move(knots), std::move(values), {}};
  tab.second_derivs = natural_spline_second_derivs(tab.knots, tab.values);
  return TimeProfile(std::move(tab));
}

double TimeProfile::eval(double t) const {
  if (!std::isfinite(t)) throw EvaluationError("profile evaluated at non-finite t");
  return std::visit(
      [t](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Constant>) {
          return p.c;
        } else if constexpr (std::is_same_v<T, Sinusoid>) {
          return p.q * (p.eps0 + p.eps * std::cos(p.omega * t));
        } else if constexpr (std::is_same_v<T, Polynomial>) {
          return poly_eval(p.coeffs, t);
        } else {
          return spline_eval(p, t);
        }
      },
      v_);
}

bool TimeProfile::has_closed_antiderivative() const {
  return !std::holds_alternative<Tabulated>(v_);
}

double TimeProfile::antiderivative(double t) const {
  return std::visit(
      [t](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Constant>) {
          return p.c * t;
        } else if constexpr (std::is_same_v<T, Sinusoid>) {
          return p.q * (p.eps0 * t + p.eps / p.omega * std::sin(p.omega * t));
        } else if constexpr (std::is_same_v<T, Polynomial>) {
          std::vector<double> c(p.coeffs.size() + 1, 0.0);
          for (size_t k = 0; k < p.coeffs.size(); ++k)
            c[k + 1] = p.coeffs[k] / double(k + 1);
          return poly_eval(c, t);
        } else {
          throw EvaluationError(
              "tabulated profile has no closed-form antiderivative");
        }
      },
      v_);
}

double TimeProfile::double_antiderivative(double t) const {
  return std::visit(
      [t](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Constant>) {
          return 0.5 * p.c * t * t;
        } else if constexpr (std::is_same_v<T, Sinusoid>) {
          const double w = p.omega;
          return p.q * (0.5 * p.eps0 * t * t +
                        p.eps / (w * w) * (1.0 - std::cos(w * t)));
        } else if constexpr (std::is_same_v<T, Polynomial>) {
          std::vector<double> c(p.coeffs.size() + 2, 0.0);
          for (size_t k = 0; k < p.coeffs.size(); ++k)
            c[k + 2] = p.coeffs[k] / double((k + 1) * (k + 2));
          return poly_eval(c, t);
        } else {
          throw EvaluationError(
              "tabulated profile has no closed-form antiderivative");
        }
      },
      v_);
}

double TimeProfile::domain_lo() const {
  if (const auto* tab = std::get_if<Tabulated>(&v_)) return tab->knots.front();
  return -std::numeric_limits<double>::infinity();
}

double TimeProfile::domain_hi() const {
  if (const auto* tab = std::get_if<Tabulated>(&v_)) return tab->knots.back();
  return std::numeric_limits<double>::infinity();
}

nlohmann::json TimeProfile::to_json() const {
  return std::visit(
      [](const auto& p) -> nlohmann::json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Constant>) {
          return {{"kind", "constant"}, {"c", p.c}};
        } else if constexpr (std::is_same_v<T, Sinusoid>) {
          return {{"kind", "sinusoid"},
                  {"q", p.q},
                  {"eps0", p.eps0},
                  {"eps", p.eps},
                  {"omega", p.omega}};
        } else if constexpr (std::is_same_v<T, Polynomial>) {
          return {{"kind", "polynomial"}, {"coeffs", p.coeffs}};
        } else {
          return {{"kind", "tabulated"},
                  {"knots", p.knots},
                  {"values", p.values}};
        }
      },
      v_);
}

TimeProfile TimeProfile::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw ConfigError("profile JSON must be an object with a \"kind\" field");
  const std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "constant") {
      return constant(j.at("c").get<double>());
    } else if (kind == "sinusoid") {
      return sinusoid(j.at("q").get<double>(), j.at("eps0").get<double>(),
                      j.at("eps").get<double>(), j.at("omega").get<double>());
    } else if (kind == "polynomial") {
      return polynomial(j.at("coeffs").get<std::vector<double>>());
    } else if (kind == "tabulated") {
      return tabulated(j.at("knots").get<std::vector<double>>(),
                       j.at("values").get<std::vector<double>>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("profile JSON: ") + e.what());
  }
  throw ConfigError("unknown profile kind: " + kind);
}

MassProfile::MassProfile(TimeProfile profile, double domain_end)
    : profile_(std::move(profile)), domain_end_(domain_end) {
  if (!std::isfinite(domain_end)) throw ConfigError("mass domain_end not finite");
  // Extend slightly below t=0 so finite-difference stencils in time can
  // straddle zero; tabulated profiles are limited by their knots.
  const double margin = 0.05;
  domain_start_ = std::max(-margin, profile_.domain_lo());
  if (profile_.domain_hi() < domain_end_)
    throw ConfigError("mass profile knots do not cover [0, domain_end]");
  if (!(domain_end_ > domain_start_))
    throw ConfigError("mass domain_end must exceed the domain start");

  double min_seen = std::numeric_limits<double>::infinity();
  if (const auto* c = std::get_if<TimeProfile::Constant>(&profile_.value())) {
    min_seen = c->c;
  } else if (const auto* s =
                 std::get_if<TimeProfile::Sinusoid>(&profile_.value())) {
    // exact: extrema at endpoints and at the cos(omega t) = +-1 points
    // that fall inside the domain
    min_seen = std::min(profile_.eval(domain_start_), profile_.eval(domain_end_));
    const long k_lo = std::lround(std::ceil(s->omega * domain_start_ / M_PI));
    const long k_hi = std::lround(std::floor(s->omega * domain_end_ / M_PI));
    if (k_hi - k_lo >= 2) {
      // at least one full period inside: both extremes are attained
      min_seen = std::min({min_seen, s->q * (s->eps0 + s->eps),
                           s->q * (s->eps0 - s->eps)});
    } else {
      for (long k = k_lo; k <= k_hi; ++k)
        min_seen = std::min(min_seen, profile_.eval(double(k) * M_PI / s->omega));
    }
  } else {
    // dense-sampling heuristic: 10000 points per unit time
    const double span = domain_end_ - domain_start_;
    const long n = std::max(1000L, std::lround(span * 10000.0));
    for (long i = 0; i <= n; ++i) {
      const double t = domain_start_ + span * double(i) / double(n);
      min_seen = std::min(min_seen, profile_.eval(t));
    }
  }
  if (!(min_seen > 0.0))
    throw ConfigError("mass profile must be strictly positive on its domain");
}

nlohmann::json MassProfile::to_json() const { return profile_.to_json(); }

}  // namespace linpot
