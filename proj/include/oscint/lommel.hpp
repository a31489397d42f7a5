#pragma once

#include "oscint/kernel.hpp"
#include "oscint/series_control.hpp"

/// General-exponent transforms through the Lommel function of the second
/// kind with second index 1/2.
///
/// The function is defined computationally by
///
///     sqrt(z) S_{mu,1/2}(z) = int_0^inf sin t / (t + z)^alpha dt,  alpha = 1/2 - mu
///                           = Re[ e^{-i(pi alpha/2 + z)} Gamma(1 - alpha, -iz) ],
///
/// which continues analytically to every real alpha. Everything else in this
/// namespace is expressed through it.
namespace oscint::lommel {

struct LommelOrder {
    double mu = 0.0;

    double alpha() const { return 0.5 - mu; }
    static LommelOrder from_alpha(double alpha) { return {0.5 - alpha}; }
};

/// Exponent 2n + 1/m, or 2n + 1 + 1/m when plus_one is set.
struct GeneralExponent {
    int n = 0;
    int m = 1;

    double exponent(bool plus_one) const;
    /// Throws DomainError unless n >= 0 and m >= 1.
    void validate() const;
};

/// sqrt(z) S_{mu,1/2}(z), z > 0. The printed variant uses Gamma(-alpha, .)
/// in place of Gamma(1 - alpha, .).
double sqrt_z_lommel(double mu, double z, const SeriesControl& ctl = {}, Formula formula = Formula::Verified);

/// S_{mu,1/2}(z), z > 0.
double lommel_s_half(double mu, double z, const SeriesControl& ctl = {}, Formula formula = Formula::Verified);

/// int_0^inf kernel(zeta t)/(t + x)^p dt for any real p > 0, x > 0:
///     sin: zeta^{p-1} sqrt(u) S_{1/2-p,1/2}(u)
///     cos: zeta^{p-1} p sqrt(u) S_{-1/2-p,1/2}(u),   u = zeta x
double power_transform(Kernel kernel, double p, double x, double zeta, const SeriesControl& ctl = {},
                       Formula formula = Formula::Verified);

double general_sin_transform(const GeneralExponent& g, bool plus_one, double x, double zeta,
                             const SeriesControl& ctl = {});
double general_cos_transform(const GeneralExponent& g, bool plus_one, double x, double zeta,
                             const SeriesControl& ctl = {});

/// The same four integrals before the Lommel recurrence is applied:
///     sin, 2n+1/m:    zeta^{p-1} sqrt(u) S_{1/2-p}
///     cos, 2n+1/m:    zeta^{p-1}/(p-1) [u^{1-p} - sqrt(u) S_{3/2-p}]
///     sin, 2n+1+1/m:  zeta^p/((p-1)p) [u^{1-p} - sqrt(u) S_{3/2-p}]
///     cos, 2n+1+1/m:  zeta^p/p [u^{-p} - sqrt(u) S_{1/2-p}]
/// with p = 2n + 1/m. Throws DomainError when p = 1 makes a prefactor singular.
double unreduced_transform(Kernel kernel, const GeneralExponent& g, bool plus_one, double x, double zeta,
                           const SeriesControl& ctl = {});

/// d/dalpha int_0^inf sin t/(t + x)^alpha dt at alpha = 1/2, closed form with 2F2.
double alpha_derivative(double x, const SeriesControl& ctl = {});

/// Same derivative by central differences of the Lommel route.
double alpha_derivative_fd(double x, double h = 1e-4, const SeriesControl& ctl = {});

/// int_0^inf ln(t + x) sin t / sqrt(t + x) dt = -alpha_derivative(x).
double log_weighted_sin_integral(double x, const SeriesControl& ctl = {});

/// Same transforms through the generalized sine and cosine integrals:
///     sin: zeta^{p-1} [cos u si(1-p, u) - sin u ci(1-p, u)]
///     cos: zeta^{p-1} [cos u ci(1-p, u) + sin u si(1-p, u)]
/// The printed variant has sin(x) in place of sin(u) in the sine form.
double si_ci_representation(const GeneralExponent& g, bool plus_one, double x, double zeta, Kernel kernel,
                            const SeriesControl& ctl = {}, Formula formula = Formula::Verified);

} // namespace oscint::lommel
