#pragma once

#include "oscint/kernel.hpp"
#include "oscint/series_control.hpp"

/// int_0^inf sin(zeta t) / (sqrt(t + a) (t + b)) dt and its cosine
/// counterpart, for b > a.
///
/// Same reduction as the two-radical case, with 1/(z^2 + 1) in place of
/// 1/sqrt(z^2 + 1), an overall factor 2/sqrt(b - a), Fresnel tails and
/// 2F1(1, .; .; -gamma^2) heads.
namespace oscint::radical_pole {

struct RadicalPoleParams {
    double a = 1.0;
    double b = 2.0;
    double zeta = 1.0;
};

struct Reduced {
    double c;     // zeta (b - a)
    double gamma; // sqrt(a / (b - a))
    double scale; // 2 / sqrt(b - a)
};

/// Throws DomainError for non-positive parameters and NotSupported for b < a.
Reduced reduce(const RadicalPoleParams& p);

/// int_0^inf sin(c x^2)/(x^2+1) dx and the cosine analogue.
double pole_tail_sin(double c);
double pole_tail_cos(double c, Formula formula = Formula::Verified);

/// int_0^gamma sin(c x^2)/(x^2+1) dx (and cos) by the 2F1 series.
double pole_head_sin_series(double c, double gamma, const SeriesControl& ctl = {});
double pole_head_cos_series(double c, double gamma, const SeriesControl& ctl = {});

/// Leading-order Fresnel approximation of the heads; gamma <= 1.
double pole_head_approx(Kernel kind, double c, double gamma);

enum class HeadMethod { Series, Quadrature, Approximation };

struct Assembly {
    double value = 0.0;
    bool used_fallback = false;
};

/// Assembled transform. a = b is the half-power member alpha = 1 at x = a.
Assembly assemble(Kernel kernel, const RadicalPoleParams& p, HeadMethod heads, const SeriesControl& ctl = {},
                  Formula formula = Formula::Verified);

double pole_sin_transform(const RadicalPoleParams& p, const SeriesControl& ctl = {});
double pole_cos_transform(const RadicalPoleParams& p, const SeriesControl& ctl = {});

} // namespace oscint::radical_pole
