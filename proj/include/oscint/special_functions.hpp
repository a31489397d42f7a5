#pragma once

#include "oscint/series_control.hpp"

/// Classical special functions needed by the transform closed forms.
/// Everything here is pure and reentrant.
namespace oscint::special {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

/// |z| at which the Fresnel integrals switch from the power series to the
/// continued fraction for the auxiliary functions.
inline constexpr double kFresnelSeriesLimit = 1.6;

/// Argument at which J0/Y0 switch from the ascending series to the Hankel
/// asymptotic expansion.
inline constexpr double kBesselSeriesLimit = 12.0;

struct FresnelPair {
    double s = 0.0;
    double c = 0.0;
};

/// S(z) = int_0^z sin(pi t^2 / 2) dt and C(z) likewise with cos.
FresnelPair fresnel(double z);
double fresnel_s(double z);
double fresnel_c(double z);

double bessel_j0(double z);
/// Throws DomainError for z <= 0.
double bessel_y0(double z);

/// Gamma function; throws DomainError at the poles 0, -1, -2, ...
double gamma_real(double x);

/// Upper incomplete gamma Gamma(a, z) on the principal branch.
ComplexValue upper_incomplete_gamma(double a, ComplexValue z, const SeriesControl& ctl = {});

/// Gauss hypergeometric 2F1(a, b; c; z) for real z < 1. Arguments below
/// -1/2 go through the Pfaff transformation.
double hyp2f1(double a, double b, double c, double z, const SeriesControl& ctl = {});

/// 2F2(1/2, 1/2; 3/2, 3/2; i x).
ComplexValue hyp2f2_half(double x, const SeriesControl& ctl = {});

/// si(alpha, z) = int_z^inf sin(t) t^(alpha - 1) dt for alpha < 1, z > 0.
double gen_si(double alpha, double z, const SeriesControl& ctl = {});
/// ci(alpha, z) = int_z^inf cos(t) t^(alpha - 1) dt for alpha < 1, z > 0.
double gen_ci(double alpha, double z, const SeriesControl& ctl = {});

namespace detail {

// Individual branches, exposed so tests can check that they agree at the
// switch points.
FresnelPair fresnel_series(double z);
FresnelPair fresnel_continued_fraction(double z);
double bessel_j0_series(double z);
double bessel_y0_series(double z);
double bessel_j0_asymptotic(double z);
double bessel_y0_asymptotic(double z);
double hyp2f1_direct(double a, double b, double c, double z, const SeriesControl& ctl);
double hyp2f1_pfaff(double a, double b, double c, double z, const SeriesControl& ctl);
ComplexValue incomplete_gamma_series(double a, ComplexValue z, const SeriesControl& ctl);
ComplexValue incomplete_gamma_continued_fraction(double a, ComplexValue z, const SeriesControl& ctl);
ComplexValue exponential_integral_e1(ComplexValue z, const SeriesControl& ctl);

} // namespace detail

} // namespace oscint::special
