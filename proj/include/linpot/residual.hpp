#pragma once

#include <complex>
#include <cstdint>

#include "linpot/grid.hpp"
#include "linpot/time_profile.hpp"

namespace linpot {

// Aggregated finite-difference residual statistics over a random sample.
// n_samples counts the points contributing to the relative statistics
// (points with |Psi| below the exclusion threshold still feed max_abs).
struct ResidualStats {
  double max_abs = 0.0;
  double max_rel = 0.0;
  double mean_rel = 0.0;
  long n_samples = 0;
};

struct Range {
  double lo;
  double hi;
};

// R = i dPsi/dt + (1/(2M)) d2Psi/dx2 - g1 x Psi, via 4th-order central
// differences (5-point stencils, step h) in both x and t.  Vanishes as
// O(h^4) for exact solutions.  Requires t +- 2h inside the profile
// domains.
std::complex<double> residual(const SpaceTimeFn& psi, const MassProfile& M,
                              const TimeProfile& g1, double x, double t,
                              double h);

// Seeded pseudo-random scan of (x, t) pairs.  Points where |Psi| falls
// below 1e-8 of the sampled maximum (e.g. Airy zeros) are excluded from
// the relative statistics; the relative residual at a point is
// |R| / (|dPsi/dt| + |(1/2M) d2Psi/dx2| + |g1 x Psi| + |Psi|).
ResidualStats residual_scan(const SpaceTimeFn& psi, const MassProfile& M,
                            const TimeProfile& g1, Range x_range,
                            Range t_range, long n_samples, double h,
                            std::uint64_t seed);

}  // namespace linpot
