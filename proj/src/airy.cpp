#include "linpot/airy.hpp"

#include <cmath>

#include "linpot/errors.hpp"

namespace linpot {
namespace {

// ---------------------------------------------------------------------
// Double-double helpers (Dekker/Knuth error-free transforms).  The
// Maclaurin series below cancels from partial sums as large as ~1e6 down
// to values as small as ~5e-8, which plain doubles cannot survive;
// compensated arithmetic keeps ~31 significant digits through the
// cancellation.
// ---------------------------------------------------------------------

struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

inline DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) {  // requires |a| >= |b|
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DD dd_add(const DD& x, const DD& y) {
  DD s = two_sum(x.hi, y.hi);
  s.lo += x.lo + y.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DD dd_mul(const DD& x, const DD& y) {
  DD p = two_prod(x.hi, y.hi);
  p.lo += x.hi * y.lo + x.lo * y.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DD dd_mul_d(const DD& x, double d) {
  DD p = two_prod(x.hi, d);
  p.lo += x.lo * d;
  return quick_two_sum(p.hi, p.lo);
}

inline DD dd_div_d(const DD& x, double d) {
  const double q1 = x.hi / d;
  const DD p = two_prod(q1, d);
  const double q2 = ((x.hi - p.hi) - p.lo + x.lo) / d;
  return quick_two_sum(q1, q2);
}

inline DD dd_sub(const DD& x, const DD& y) {
  return dd_add(x, DD{-y.hi, -y.lo});
}

// c1 = Ai(0) = 3^(-2/3)/Gamma(2/3), c2 = -Ai'(0) = 3^(-1/3)/Gamma(1/3)
constexpr DD kC1{0.3550280538878172, 2.05233632436212e-17};
constexpr DD kC2{0.2588194037928068, -2.522243111610832e-17};
constexpr DD kPiOver4{0.7853981633974483, 3.061616997868383e-17};
constexpr double kHalfInvSqrtPi = 0.28209479177387814;  // 1/(2 sqrt(pi))
constexpr double kInvSqrtPi = 0.5641895835477563;

constexpr double kPeakOffset = -1.018792971647471;  // first zero of Ai'

// Maclaurin series in compensated arithmetic, valid on the interval
// between the asymptotic switch points.
AiryValue airy_series(double x) {
  const DD xd{x, 0.0};
  const DD x3 = dd_mul(dd_mul(xd, xd), xd);
  DD tf{1.0, 0.0};
  DD tg = xd;
  DD f = tf, g = tg;
  DD fp{0.0, 0.0};
  DD gp{1.0, 0.0};
  for (int k = 1; k <= 400; ++k) {
    tf = dd_div_d(dd_mul(tf, x3), double(3 * k - 1) * double(3 * k));
    tg = dd_div_d(dd_mul(tg, x3), double(3 * k) * double(3 * k + 1));
    f = dd_add(f, tf);
    g = dd_add(g, tg);
    if (x != 0.0) {
      fp = dd_add(fp, dd_div_d(dd_mul_d(tf, double(3 * k)), x));
      gp = dd_add(gp, dd_div_d(dd_mul_d(tg, double(3 * k + 1)), x));
    }
    if (std::abs(tf.hi) < 1e-34 * (std::abs(f.hi) + 1.0) &&
        std::abs(tg.hi) < 1e-34 * (std::abs(g.hi) + 1.0)) {
      break;
    }
  }
  const DD ai = dd_sub(dd_mul(kC1, f), dd_mul(kC2, g));
  const DD aip = dd_sub(dd_mul(kC1, fp), dd_mul(kC2, gp));
  return {ai.hi + ai.lo, aip.hi + aip.lo};
}

// zeta = (2/3) z^(3/2) in double-double, accurate enough that the
// oscillatory phase keeps absolute accuracy ~1e-16 even at zeta ~ 100.
DD zeta_dd(double z) {
  const double s0 = std::sqrt(z);
  const DD sq = two_prod(s0, s0);
  const double corr = ((z - sq.hi) - sq.lo) / (2.0 * s0);
  const DD s{s0, corr};
  return dd_div_d(dd_mul_d(dd_mul_d(s, z), 2.0), 3.0);
}

// Exponentially decaying expansion for large positive x:
//   Ai(x)  ~ exp(-zeta)/(2 sqrt(pi) x^(1/4)) * sum (-1)^k u_k zeta^-k
//   Ai'(x) ~ -x^(1/4) exp(-zeta)/(2 sqrt(pi)) * sum (-1)^k v_k zeta^-k
AiryValue airy_asymptotic_pos(double x) {
  const DD zeta = zeta_dd(x);
  const double inv_zeta = 1.0 / zeta.hi;
  double u = 1.0, sum_ai = 1.0, sum_aip = 1.0;
  double pw = 1.0;  // zeta^-k
  double prev = 1.0;
  for (int k = 1; k <= 60; ++k) {
    u *= double(6 * k - 5) * double(6 * k - 3) * double(6 * k - 1) /
         (216.0 * double(k) * double(2 * k - 1));
    const double v = u * double(6 * k + 1) / double(1 - 6 * k);
    pw *= inv_zeta;
    const double tu = u * pw;
    if (tu > prev) break;  // past the optimal truncation
    const double sign = k % 2 ? -1.0 : 1.0;
    sum_ai += sign * tu;
    sum_aip += sign * v * pw;
    prev = tu;
    if (tu < 1e-18) break;
  }
  const double e = std::exp(-zeta.hi) * (1.0 - zeta.lo);
  const double root4 = std::sqrt(std::sqrt(x));
  return {kHalfInvSqrtPi * e * sum_ai / root4,
          -kHalfInvSqrtPi * e * sum_aip * root4};
}

// Oscillatory expansion for large negative x (z = -x):
//   Ai(-z)  ~ (cos(zeta-pi/4) P_a + sin(zeta-pi/4) Q_a) / (sqrt(pi) z^(1/4))
//   Ai'(-z) ~ (sin(zeta-pi/4) P_b - cos(zeta-pi/4) Q_b) * z^(1/4)/sqrt(pi)
// with P/Q the even/odd alternating sums over u_k resp. v_k.
AiryValue airy_asymptotic_neg(double x) {
  const double z = -x;
  const DD zeta = zeta_dd(z);
  const DD phase = dd_sub(zeta, kPiOver4);
  const double sh = std::sin(phase.hi);
  const double ch = std::cos(phase.hi);
  const double si = sh + phase.lo * ch;
  const double co = ch - phase.lo * sh;

  const double inv_zeta = 1.0 / zeta.hi;
  double u = 1.0;
  double pa = 1.0, qa = 0.0, pb = 1.0, qb = 0.0;
  double pw = 1.0;  // zeta^-k
  double prev = 1.0;
  for (int k = 1; k <= 60; ++k) {
    u *= double(6 * k - 5) * double(6 * k - 3) * double(6 * k - 1) /
         (216.0 * double(k) * double(2 * k - 1));
    const double v = u * double(6 * k + 1) / double(1 - 6 * k);
    pw *= inv_zeta;
    const double tu = u * pw;
    if (tu > prev) break;
    const double sign = (k / 2) % 2 ? -1.0 : 1.0;  // (-1)^floor(k/2)
    if (k % 2) {
      qa += sign * tu;
      qb += sign * v * pw;
    } else {
      pa += sign * tu;
      pb += sign * v * pw;
    }
    prev = tu;
    if (tu < 1e-18) break;
  }
  const double root4 = std::sqrt(std::sqrt(z));
  return {kInvSqrtPi * (co * pa + si * qa) / root4,
          kInvSqrtPi * (si * pb - co * qb) * root4};
}

constexpr double kSwitchNeg = -9.0;
constexpr double kSwitchPos = 8.0;

}  // namespace

AiryValue airy_ai(double x) {
  if (!std::isfinite(x)) throw EvaluationError("airy_ai: non-finite argument");
  if (x > kSwitchPos) return airy_asymptotic_pos(x);
  if (x < kSwitchNeg) return airy_asymptotic_neg(x);
  return airy_series(x);
}

double airy_peak_offset() { return kPeakOffset; }

}  // namespace linpot
