#pragma once

#include <functional>
#include <utility>
#include <variant>
#include <vector>

#include "oscint/kernel.hpp"
#include "oscint/series_control.hpp"

/// Direct quadrature of every integral the closed forms claim to evaluate.
///
/// Semi-infinite integrals are split at the zeros of the oscillating kernel,
/// each lobe is integrated by adaptive Gauss-Kronrod and the alternating lobe
/// series is summed with the Euler transformation. Nothing here calls the
/// closed-form modules, so agreement between the two is a genuine check.
namespace oscint::oracle {

/// (t + shift)^-(alpha + 1/2)
struct HalfPower {
    double alpha = 0.0;
    double shift = 0.0;
};

/// 1 / (sqrt(t + a) sqrt(t + b))
struct TwoRadical {
    double a = 1.0;
    double b = 1.0;
};

/// 1 / (sqrt(t + a) (t + b))
struct RadicalPole {
    double a = 1.0;
    double b = 1.0;
};

/// 1 / (sqrt(t + a) sqrt(t + b) sqrt(t + c)); no closed form exists for it.
struct ThreeRadical {
    double a = 1.0;
    double b = 1.0;
    double c = 1.0;
};

/// ln(t + shift) / sqrt(t + shift)
struct LogHalfPower {
    double shift = 1.0;
};

/// prod_i (t + shift_i)^-power_i; used for derivative cross-checks.
struct ShiftedPowers {
    std::vector<std::pair<double, double>> factors; // (shift, power)
};

/// Quadratic-phase integrand kernel(frequency z^2) / sqrt(z^2 + 1) or
/// kernel(frequency z^2) / (z^2 + 1) on [lower, infinity).
struct QuadraticPhase {
    enum class Denominator { Radical, Pole };
    Denominator denominator = Denominator::Radical;
    double lower = 0.0;
};

using Weight = std::variant<HalfPower, TwoRadical, RadicalPole, ThreeRadical, LogHalfPower, ShiftedPowers, QuadraticPhase>;

/// int_0^inf kernel(frequency t) w(t) dt (QuadraticPhase: see above).
struct IntegrandSpec {
    Weight weight;
    Kernel kernel = Kernel::Sin;
    double frequency = 1.0;
};

struct QuadratureReport {
    double value = 0.0;
    double abs_err_est = 0.0;
    int zero_intervals_used = 0;
    bool accelerated = false;
};

/// Throws DomainError for invalid parameters, DivergentIntegral when the
/// integral does not exist, ConvergenceFailure when the lobe series stalls.
QuadratureReport integrate_semi_infinite(const IntegrandSpec& spec, const SeriesControl& ctl = {});

/// Adaptive Gauss-Kronrod on a finite interval, to ctl.rel_tol |value| + 1e-15.
QuadratureReport integrate_finite(const std::function<double(double)>& f, double lo, double hi,
                                  const SeriesControl& ctl = {});

} // namespace oscint::oracle
