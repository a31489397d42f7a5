#pragma once

#include "oscint/kernel.hpp"
#include "oscint/series_control.hpp"

/// int_0^inf sin(zeta t) / (sqrt(t + a) sqrt(t + b)) dt and its cosine
/// counterpart.
///
/// With t + a = (b - a) z^2 both reduce to quadratic-phase integrals over
/// [gamma, inf), gamma = sqrt(a / (b - a)), frequency c = zeta (b - a). Each
/// of those is a tail over [0, inf), known in terms of J0 and Y0, minus a
/// head over [0, gamma] given by a 2F1 series.
namespace oscint::two_radical {

struct TwoRadicalParams {
    double a = 1.0;
    double b = 2.0;
    double zeta = 1.0;
};

/// Parameters after ordering so that b > a.
struct Reduced {
    double a;
    double b;
    double c;     // zeta (b - a)
    double gamma; // sqrt(a / (b - a))
};

/// Throws DomainError unless a, b, zeta > 0. Requires a != b.
Reduced reduce(const TwoRadicalParams& p);

/// int_0^inf sin(c z^2)/sqrt(z^2+1) dz and the cosine analogue.
double tail_sin(double c);
double tail_cos(double c);

/// int_0^gamma sin(c z^2)/sqrt(z^2+1) dz (and cos) by the 2F1 series.
/// Throws ConvergenceFailure on term overflow or heavy cancellation.
double head_sin_series(double c, double gamma, const SeriesControl& ctl = {});
double head_cos_series(double c, double gamma, const SeriesControl& ctl = {});

/// Leading-order Fresnel approximations to the heads; gamma <= 1.
double head_sin_approx(double c, double gamma, Formula formula = Formula::Verified);
double head_cos_approx(double c, double gamma, Formula formula = Formula::Verified);

/// How the finite heads are evaluated inside the assembled transform.
enum class HeadMethod { Series, Quadrature, Approximation };

struct Assembly {
    double value = 0.0;
    bool used_fallback = false; // series abandoned for quadrature
};

/// Assembled transform. The a = b case bypasses the decomposition and uses
/// the generalized sine/cosine integrals.
Assembly assemble(Kernel kernel, const TwoRadicalParams& p, HeadMethod heads, const SeriesControl& ctl = {},
                  Formula formula = Formula::Verified);

double sin_transform(const TwoRadicalParams& p, const SeriesControl& ctl = {});
double cos_transform(const TwoRadicalParams& p, const SeriesControl& ctl = {});

} // namespace oscint::two_radical
