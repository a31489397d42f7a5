#pragma once

#include <functional>

#include "oscint/series_control.hpp"

/// Low-level quadrature building blocks shared by the generalized sine/cosine
/// integrals and the oscillatory oracle.
namespace oscint::quad {

using Integrand = std::function<double(double)>;

struct Estimate {
    double value = 0.0;
    double abs_err = 0.0;
    double abs_mass = 0.0; // integral of |f|, for the roundoff floor
};

/// Single 15-point Gauss-Kronrod panel on [lo, hi] with the QUADPACK error
/// estimate.
Estimate gauss_kronrod15(const Integrand& f, double lo, double hi);

struct AdaptiveOptions {
    double abs_tol = 1e-15;
    double rel_tol = 1e-12;
    int max_subdivisions = 4000;
};

/// Globally adaptive bisection on GK15 panels. Throws ConvergenceFailure
/// (MaxSubdivisions) when the budget is exhausted.
Estimate integrate_adaptive(const Integrand& f, double lo, double hi, const AdaptiveOptions& opts);

struct LobeSum {
    double value = 0.0;
    double abs_err = 0.0;
    int lobes = 0;
    bool accelerated = false;
};

/// Sums lobe(0) + lobe(1) + ... where the lobes from index `direct_lobes`
/// on alternate in sign with a smooth envelope. The first `direct_lobes`
/// terms are added as-is; the rest go through the Euler transformation
/// (repeated averaging of partial sums). Stops once two consecutive Euler
/// estimates agree to ctl.rel_tol; gives up with AccelerationStalled after
/// 10 * ctl.max_terms lobes.
LobeSum sum_alternating_lobes(const std::function<Estimate(int)>& lobe, int direct_lobes,
                              const SeriesControl& ctl);

} // namespace oscint::quad
