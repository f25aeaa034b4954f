#include "linpot/transform.hpp"

#include <algorithm>
#include <cmath>

#include "linpot/errors.hpp"

namespace linpot {
namespace {

void check_time_in_domain(const MassProfile& M, const TimeProfile& g1,
                          double t) {
  if (!std::isfinite(t)) throw EvaluationError("transform time not finite");
  if (!M.contains(t))
    throw DomainError("time outside the certified mass domain");
  if (t < g1.domain_lo() || t > g1.domain_hi())
    throw DomainError("time outside the force profile domain");
}

// integral of p from 0 to tau by adaptive quadrature (handles tau < 0)
double integral_from_zero(const TimeProfile& p, double tau,
                          const QuadratureConfig& cfg) {
  auto f = [&p](double u) { return p.eval(u); };
  if (tau >= 0.0) return integrate(f, 0.0, tau, cfg);
  return -integrate(f, tau, 0.0, cfg);
}

// signed outer integral of `f` from 0 to t
double outer_from_zero(const std::function<double(double)>& f, double t,
                       const QuadratureConfig& cfg) {
  if (t >= 0.0) return integrate(f, 0.0, t, cfg);
  return -integrate(f, t, 0.0, cfg);
}

double sinusoid_phase_g(const TimeProfile::Sinusoid& p, double m, double t) {
  const double w = p.omega;
  const double wt = w * t;
  const double bracket = p.eps0 * p.eps0 * wt * wt * wt / 3.0 +
                         2.0 * p.eps0 * p.eps * (std::sin(wt) - wt * std::cos(wt)) +
                         p.eps * p.eps * (0.5 * wt - 0.25 * std::sin(2.0 * wt));
  return p.q * p.q / (2.0 * m * w * w * w) * bracket;
}

double polynomial_phase_g(const TimeProfile::Polynomial& p, double m, double t) {
  // A(t) = antiderivative of g1 (zero constant term), then integrate A^2/(2m)
  std::vector<double> a(p.coeffs.size() + 1, 0.0);
  for (size_t k = 0; k < p.coeffs.size(); ++k)
    a[k + 1] = p.coeffs[k] / double(k + 1);
  std::vector<double> sq(2 * a.size() - 1, 0.0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) sq[i + j] += a[i] * a[j];
  double r = 0.0;
  for (size_t k = sq.size(); k-- > 0;)
    r = r * t + sq[k] / double(k + 1);
  r *= t;  // integral of sum sq_k t^k is sum sq_k t^(k+1)/(k+1)
  return r / (2.0 * m);
}

TransformState closed_form_state(const MassProfile& M, const TimeProfile& g1,
                                 double t) {
  const double m = std::get<TimeProfile::Constant>(M.profile().value()).c;
  TransformState st;
  st.t = t;
  st.s = t / m;
  st.beta = -g1.antiderivative(t);
  st.nu = g1.double_antiderivative(t) / m;
  st.nested = st.nu;
  if (const auto* c = std::get_if<TimeProfile::Constant>(&g1.value())) {
    st.phase_g = c->c * c->c * t * t * t / (6.0 * m);
  } else if (const auto* sn = std::get_if<TimeProfile::Sinusoid>(&g1.value())) {
    st.phase_g = sinusoid_phase_g(*sn, m, t);
  } else {
    st.phase_g =
        polynomial_phase_g(std::get<TimeProfile::Polynomial>(g1.value()), m, t);
  }
  return st;
}

bool closed_form_applies(const MassProfile& M, const TimeProfile& g1,
                         const QuadratureConfig& cfg) {
  return cfg.prefer_closed_forms && M.profile().is_constant() &&
         g1.has_closed_antiderivative();
}

void cross_check_nu_nested(const TransformState& st,
                           const QuadratureConfig& cfg) {
  const double scale = std::max({1.0, std::abs(st.nu), std::abs(st.nested)});
  const double tol = 100.0 * std::max(cfg.abs_tol, cfg.rel_tol * scale);
  if (std::abs(st.nu - st.nested) > tol)
    throw EvaluationError("transform cross-check failed: nu != nested");
}

}  // namespace

CumulativeIntegral::CumulativeIntegral(std::function<double(double)> f,
                                       double begin, double end,
                                       const QuadratureConfig& cfg)
    : f_(std::move(f)) {
  if (!(end > begin)) throw ConfigError("cumulative table needs end > begin");
  const double span = end - begin;
  // Error budget per unit length; the rel_tol part is scaled by a rough
  // whole-range estimate.
  double rough_err;
  const double rough = gk15_panel(f_, begin, end, &rough_err);
  const double budget =
      std::max(cfg.abs_tol, cfg.rel_tol * std::abs(rough)) / span;

  struct Seg {
    double a, b;
    double integral;
    double err;
  };
  nodes_.push_back({begin, 0.0});

  // depth-first over pending segments so nodes come out ordered in t
  std::vector<Seg> stack;
  stack.push_back({begin, end, rough, rough_err});
  long work = 0;
  const long max_segments = 64L * std::max(cfg.max_subdivisions, 1);
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (s.a + s.b);
    const bool tiny = (mid <= s.a || mid >= s.b);
    if (tiny || s.err <= budget * (s.b - s.a)) {
      nodes_.push_back({s.b, nodes_.back().cum + s.integral});
      continue;
    }
    if (++work > max_segments)
      throw QuadratureError("cumulative table refinement did not converge",
                            nodes_.back().cum, s.err);
    double el, er;
    const double il = gk15_panel(f_, s.a, mid, &el);
    const double ir = gk15_panel(f_, mid, s.b, &er);
    // push right first so the left half is processed next
    stack.push_back({mid, s.b, ir, er});
    stack.push_back({s.a, mid, il, el});
  }
}

double CumulativeIntegral::eval(double tau) const {
  if (tau < nodes_.front().t || tau > nodes_.back().t)
    throw DomainError("cumulative table evaluated outside its range");
  auto it = std::upper_bound(
      nodes_.begin(), nodes_.end(), tau,
      [](double v, const Node& n) { return v < n.t; });
  const size_t lo = std::clamp<size_t>(size_t(it - nodes_.begin()), 1,
                                       nodes_.size() - 1) -
                    1;
  if (tau == nodes_[lo].t) return nodes_[lo].cum;
  return nodes_[lo].cum + gk15_panel(f_, nodes_[lo].t, tau, nullptr);
}

TransformState transform_state(const MassProfile& M, const TimeProfile& g1,
                               double t, const QuadratureConfig& cfg) {
  cfg.validate();
  check_time_in_domain(M, g1, t);
  if (t == 0.0) return TransformState{};
  if (closed_form_applies(M, g1, cfg)) return closed_form_state(M, g1, t);

  const double lo = std::min(0.0, t);
  const double hi = std::max(0.0, t);
  auto g = [&g1](double u) { return g1.eval(u); };
  auto inv_m = [&M](double u) { return 1.0 / M.eval(u); };
  CumulativeIntegral Fg(g, lo, hi, cfg);
  CumulativeIntegral Fm(inv_m, lo, hi, cfg);
  const double Fg0 = Fg.eval(0.0);
  const double Fm0 = Fm.eval(0.0);
  auto inner_g = [&](double tau) { return Fg.eval(tau) - Fg0; };

  TransformState st;
  st.t = t;
  st.s = Fm.eval(t) - Fm0;
  st.beta = -inner_g(t);
  st.nested = outer_from_zero(
      [&](double tau) { return inner_g(tau) / M.eval(tau); }, t, cfg);
  st.phase_g = outer_from_zero(
      [&](double tau) {
        const double b = -inner_g(tau);
        return b * b / (2.0 * M.eval(tau));
      },
      t, cfg);
  // Independent route for nu: direct nested adaptive quadrature, no table.
  // The inner integral leaves noise of order its own tolerance on the
  // outer integrand, so the outer tolerances are floored; chasing
  // anything tighter through two adaptive levels cannot converge.
  QuadratureConfig nu_cfg = cfg;
  nu_cfg.abs_tol = std::max(cfg.abs_tol, 1e-13);
  nu_cfg.rel_tol = std::max(cfg.rel_tol, 1e-12);
  st.nu = outer_from_zero(
      [&](double tau) {
        const double beta_tau = -integral_from_zero(g1, tau, nu_cfg);
        return -beta_tau / M.eval(tau);
      },
      t, nu_cfg);
  cross_check_nu_nested(st, nu_cfg);
  return st;
}

std::vector<TransformState> transform_grid(const MassProfile& M,
                                           const TimeProfile& g1,
                                           std::span<const double> times,
                                           const QuadratureConfig& cfg) {
  cfg.validate();
  if (times.empty()) return {};
  for (size_t i = 0; i < times.size(); ++i) {
    if (i > 0 && !(times[i] >= times[i - 1]))
      throw ConfigError("transform_grid times must be ascending");
    check_time_in_domain(M, g1, times[i]);
  }

  std::vector<TransformState> out;
  out.reserve(times.size());
  if (closed_form_applies(M, g1, cfg)) {
    for (double t : times)
      out.push_back(t == 0.0 ? TransformState{} : closed_form_state(M, g1, t));
    return out;
  }

  const double lo = std::min(0.0, times.front());
  const double hi = std::max(0.0, times.back());
  if (!(hi > lo)) {  // all times equal to 0
    out.assign(times.size(), TransformState{});
    return out;
  }
  auto g = [&g1](double u) { return g1.eval(u); };
  auto inv_m = [&M](double u) { return 1.0 / M.eval(u); };
  CumulativeIntegral Fg(g, lo, hi, cfg);
  CumulativeIntegral Fm(inv_m, lo, hi, cfg);
  const double Fg0 = Fg.eval(0.0);
  const double Fm0 = Fm.eval(0.0);
  auto inner_g = [&](double tau) { return Fg.eval(tau) - Fg0; };
  CumulativeIntegral Fnested(
      [&](double tau) { return inner_g(tau) / M.eval(tau); }, lo, hi, cfg);
  CumulativeIntegral Fphase(
      [&](double tau) {
        const double b = -inner_g(tau);
        return b * b / (2.0 * M.eval(tau));
      },
      lo, hi, cfg);
  const double Fn0 = Fnested.eval(0.0);
  const double Fp0 = Fphase.eval(0.0);

  for (double t : times) {
    TransformState st;
    st.t = t;
    if (t != 0.0) {
      st.s = Fm.eval(t) - Fm0;
      st.beta = -inner_g(t);
      st.nested = Fnested.eval(t) - Fn0;
      st.nu = st.nested;  // table route; the pointwise API cross-checks
      st.phase_g = Fphase.eval(t) - Fp0;
    }
    out.push_back(st);
  }
  return out;
}

}  // namespace linpot
