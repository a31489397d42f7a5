#include "oscint/two_radical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "oscint/errors.hpp"
#include "oscint/oracle.hpp"
#include "oscint/special_functions.hpp"

namespace oscint::two_radical {

using special::kPi;

namespace {

// Largest |term| / |sum| ratio accepted before the head series is deemed
// too cancellation-prone.
constexpr double kMaxCancellation = 1e6;

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError(std::string("two_radical: ") + what + " must be positive");
}

// gamma_scale * sum_k (-c^2 gamma^4)^k / (fact_k (4k + d0)) 2F1(1/2, 2k + h0; 2k + h0 + 1; -gamma^2)
// with fact_k = (2k+1)! for the sine head and (2k)! for the cosine head.
double head_series(double c, double gamma, bool sine, const SeriesControl& ctl)
{
    ctl.validate();
    require_positive(c, "c");
    if (!(gamma >= 0.0))
        throw DomainError("two_radical: gamma must be nonnegative");
    if (gamma == 0.0)
        return 0.0;

    const double g2 = gamma * gamma;
    const double x = -c * c * g2 * g2;
    const double prefactor = sine ? c * gamma * g2 : gamma;
    const double d0 = sine ? 3.0 : 1.0;
    const double tol = std::max(1e-2 * ctl.rel_tol, std::numeric_limits<double>::epsilon());

    double power = 1.0; // x^k / fact_k
    double sum = 0.0;
    double peak = 0.0;
    for (int k = 0;; ++k) {
        if (k >= ctl.max_terms)
            throw ConvergenceFailure(ConvergenceFailure::Kind::SeriesTerms, "two_radical: head series exceeded max_terms");
        const double b = 2.0 * k + 0.5 * d0;
        const double term = power / (4.0 * k + d0) * special::hyp2f1(0.5, b, b + 1.0, -g2, ctl);
        sum += term;
        peak = std::max(peak, std::abs(term));
        if (!std::isfinite(sum))
            throw ConvergenceFailure(ConvergenceFailure::Kind::SeriesTerms, "two_radical: head series overflow");
        // Terms decay factorially once k exceeds c gamma^2 / 2.
        if (k > 0 && std::abs(term) <= tol * std::abs(sum) && 2.0 * k > c * g2)
            break;
        const double f1 = sine ? (2.0 * k + 2.0) * (2.0 * k + 3.0) : (2.0 * k + 1.0) * (2.0 * k + 2.0);
        power *= x / f1;
    }
    if (peak > kMaxCancellation * std::abs(sum))
        throw ConvergenceFailure(ConvergenceFailure::Kind::SeriesTerms,
                                 "two_radical: head series cancellation too large (c gamma^2 = " +
                                     std::to_string(c * g2) + ")");
    return prefactor * sum;
}

double head_quadrature(double c, double gamma, bool sine, const SeriesControl& ctl)
{
    auto f = [c, sine](double z) {
        const double ph = c * z * z;
        return (sine ? std::sin(ph) : std::cos(ph)) / std::sqrt(z * z + 1.0);
    };
    return oracle::integrate_finite(f, 0.0, gamma, ctl).value;
}

void require_approx_domain(double c, double gamma)
{
    require_positive(c, "c");
    if (!(gamma >= 0.0) || gamma > 1.0)
        throw DomainError("two_radical: approximations need 0 <= gamma <= 1");
}

} // namespace

Reduced reduce(const TwoRadicalParams& p)
{
    require_positive(p.a, "a");
    require_positive(p.b, "b");
    require_positive(p.zeta, "zeta");
    if (p.a == p.b)
        throw DomainError("two_radical: a = b has no quadratic-phase reduction");
    // The integrand is symmetric in a and b.
    const double lo = std::min(p.a, p.b);
    const double hi = std::max(p.a, p.b);
    return {lo, hi, p.zeta * (hi - lo), std::sqrt(lo / (hi - lo))};
}

double tail_sin(double c)
{
    require_positive(c, "c");
    const double h = 0.5 * c;
    return 0.25 * kPi * (std::sin(h) * special::bessel_y0(h) + std::cos(h) * special::bessel_j0(h));
}

double tail_cos(double c)
{
    require_positive(c, "c");
    const double h = 0.5 * c;
    return 0.25 * kPi * (std::sin(h) * special::bessel_j0(h) - std::cos(h) * special::bessel_y0(h));
}

double head_sin_series(double c, double gamma, const SeriesControl& ctl) { return head_series(c, gamma, true, ctl); }
double head_cos_series(double c, double gamma, const SeriesControl& ctl) { return head_series(c, gamma, false, ctl); }

double head_sin_approx(double c, double gamma, Formula)
{
    require_approx_domain(c, gamma);
    const auto f = special::fresnel(gamma * std::sqrt(2.0 * c / kPi));
    return gamma / (4.0 * c) * std::cos(c * gamma * gamma) + std::sqrt(kPi / (2.0 * c)) * (f.s - f.c / (4.0 * c));
}

double head_cos_approx(double c, double gamma, Formula formula)
{
    require_approx_domain(c, gamma);
    const auto f = special::fresnel(gamma * std::sqrt(2.0 * c / kPi));
    // The printed prefactor of the sine term is gamma/c; expanding
    // 1/sqrt(1+z^2) to second order gives gamma/(4c).
    const double lead = formula == Formula::AsPrinted ? gamma / c : gamma / (4.0 * c);
    return -lead * std::sin(c * gamma * gamma) + std::sqrt(kPi / (2.0 * c)) * (f.s / (4.0 * c) + f.c);
}

Assembly assemble(Kernel kernel, const TwoRadicalParams& p, HeadMethod heads, const SeriesControl& ctl, Formula formula)
{
    require_positive(p.a, "a");
    require_positive(p.b, "b");
    require_positive(p.zeta, "zeta");

    Assembly out;
    if (p.a == p.b) {
        // int kernel(zeta t)/(t + a) dt = cos(u) si(0,u) -+ sin(u) ci(0,u), u = zeta a.
        const double u = p.zeta * p.a;
        const double si = special::gen_si(0.0, u, ctl);
        const double ci = special::gen_ci(0.0, u, ctl);
        out.value = kernel == Kernel::Sin ? std::cos(u) * si - std::sin(u) * ci : std::cos(u) * ci + std::sin(u) * si;
        return out;
    }

    const Reduced r = reduce(p);
    double head_s = 0.0;
    double head_c = 0.0;
    switch (heads) {
    case HeadMethod::Series:
        try {
            head_s = head_sin_series(r.c, r.gamma, ctl);
            head_c = head_cos_series(r.c, r.gamma, ctl);
        } catch (const ConvergenceFailure&) {
            head_s = head_quadrature(r.c, r.gamma, true, ctl);
            head_c = head_quadrature(r.c, r.gamma, false, ctl);
            out.used_fallback = true;
        }
        break;
    case HeadMethod::Quadrature:
        head_s = head_quadrature(r.c, r.gamma, true, ctl);
        head_c = head_quadrature(r.c, r.gamma, false, ctl);
        break;
    case HeadMethod::Approximation:
        head_s = head_sin_approx(r.c, r.gamma, formula);
        head_c = head_cos_approx(r.c, r.gamma, formula);
        break;
    }

    const double upper_s = tail_sin(r.c) - head_s; // int_gamma^inf sin(c z^2)/sqrt(z^2+1)
    const double upper_c = tail_cos(r.c) - head_c;
    const double ca = std::cos(r.a * p.zeta);
    const double sa = std::sin(r.a * p.zeta);
    out.value = kernel == Kernel::Sin ? 2.0 * (ca * upper_s - sa * upper_c) : 2.0 * (ca * upper_c + sa * upper_s);
    return out;
}

double sin_transform(const TwoRadicalParams& p, const SeriesControl& ctl)
{
    return assemble(Kernel::Sin, p, HeadMethod::Series, ctl).value;
}

double cos_transform(const TwoRadicalParams& p, const SeriesControl& ctl)
{
    return assemble(Kernel::Cos, p, HeadMethod::Series, ctl).value;
}

} // namespace oscint::two_radical
