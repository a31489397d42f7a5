#include "oscint/radical_pole.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "oscint/errors.hpp"
#include "oscint/half_power.hpp"
#include "oscint/oracle.hpp"
#include "oscint/special_functions.hpp"

namespace oscint::radical_pole {

using special::kPi;

namespace {

constexpr double kMaxCancellation = 1e6;

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError(std::string("radical_pole: ") + what + " must be positive");
}

// sin: c gamma   sum_k (-c^2 gamma^4)^k / ((2k+1)! (4k+1)) {1 - 2F1(1, 2k+1/2; 2k+3/2; -gamma^2)}
// cos: gamma     sum_k (-c^2 gamma^4)^k / ((2k)!   (4k+1))     2F1(1, 2k+1/2; 2k+3/2; -gamma^2)
double head_series(double c, double gamma, bool sine, const SeriesControl& ctl)
{
    ctl.validate();
    require_positive(c, "c");
    if (!(gamma >= 0.0))
        throw DomainError("radical_pole: gamma must be nonnegative");
    if (gamma == 0.0)
        return 0.0;

    const double g2 = gamma * gamma;
    const double x = -c * c * g2 * g2;
    const double tol = std::max(1e-2 * ctl.rel_tol, std::numeric_limits<double>::epsilon());

    double power = 1.0;
    double sum = 0.0;
    double peak = 0.0;
    for (int k = 0;; ++k) {
        if (k >= ctl.max_terms)
            throw ConvergenceFailure(ConvergenceFailure::Kind::SeriesTerms, "radical_pole: head series exceeded max_terms");
        const double b = 2.0 * k + 0.5;
        const double f = special::hyp2f1(1.0, b, b + 1.0, -g2, ctl);
        const double term = power / (4.0 * k + 1.0) * (sine ? 1.0 - f : f);
        sum += term;
        peak = std::max(peak, std::abs(term));
        if (!std::isfinite(sum))
            throw ConvergenceFailure(ConvergenceFailure::Kind::SeriesTerms, "radical_pole: head series overflow");
        if (k > 0 && std::abs(term) <= tol * std::abs(sum) && 2.0 * k > c * g2)
            break;
        const double f1 = sine ? (2.0 * k + 2.0) * (2.0 * k + 3.0) : (2.0 * k + 1.0) * (2.0 * k + 2.0);
        power *= x / f1;
    }
    if (peak > kMaxCancellation * std::abs(sum))
        throw ConvergenceFailure(ConvergenceFailure::Kind::SeriesTerms, "radical_pole: head series cancellation too large");
    return (sine ? c * gamma : gamma) * sum;
}

double head_quadrature(double c, double gamma, bool sine, const SeriesControl& ctl)
{
    auto f = [c, sine](double z) {
        const double ph = c * z * z;
        return (sine ? std::sin(ph) : std::cos(ph)) / (z * z + 1.0);
    };
    return oracle::integrate_finite(f, 0.0, gamma, ctl).value;
}

} // namespace

Reduced reduce(const RadicalPoleParams& p)
{
    require_positive(p.a, "a");
    require_positive(p.b, "b");
    require_positive(p.zeta, "zeta");
    if (!(p.b > p.a))
        throw NotSupported("radical_pole: closed form requires b > a; use the oracle");
    const double d = p.b - p.a;
    return {p.zeta * d, std::sqrt(p.a / d), 2.0 / std::sqrt(d)};
}

double pole_tail_sin(double c)
{
    require_positive(c, "c");
    const auto f = special::fresnel(std::sqrt(2.0 * c / kPi));
    return 0.5 * kPi * (std::sin(c) * (f.s + f.c - 1.0) - std::cos(c) * (f.s - f.c));
}

double pole_tail_cos(double c, Formula formula)
{
    require_positive(c, "c");
    const auto f = special::fresnel(std::sqrt(2.0 * c / kPi));
    if (formula == Formula::AsPrinted)
        return 0.5 * kPi * (std::cos(c) * (f.s + f.c + 1.0) + std::sin(c) * (f.s - f.c)) + std::sqrt(2.0 * kPi / c);
    return 0.5 * kPi * (std::cos(c) * (1.0 - f.s - f.c) - std::sin(c) * (f.s - f.c));
}

double pole_head_sin_series(double c, double gamma, const SeriesControl& ctl) { return head_series(c, gamma, true, ctl); }
double pole_head_cos_series(double c, double gamma, const SeriesControl& ctl) { return head_series(c, gamma, false, ctl); }

double pole_head_approx(Kernel kind, double c, double gamma)
{
    require_positive(c, "c");
    if (!(gamma >= 0.0) || gamma > 1.0)
        throw DomainError("radical_pole: approximations need 0 <= gamma <= 1");
    const auto f = special::fresnel(gamma * std::sqrt(2.0 * c / kPi));
    const double root = std::sqrt(kPi / (2.0 * c));
    const double ph = c * gamma * gamma;
    if (kind == Kernel::Sin)
        return gamma / (2.0 * c) * std::cos(ph) + root * (f.s - f.c / (2.0 * c));
    return -gamma / (2.0 * c) * std::sin(ph) + root * (f.s / (2.0 * c) + f.c);
}

Assembly assemble(Kernel kernel, const RadicalPoleParams& p, HeadMethod heads, const SeriesControl& ctl, Formula formula)
{
    require_positive(p.a, "a");
    require_positive(p.b, "b");
    require_positive(p.zeta, "zeta");

    Assembly out;
    if (p.a == p.b) {
        // 1/(sqrt(t+a)(t+a)) = (t+a)^-3/2
        out.value = half_power::transform(kernel, {p.zeta, p.a, 1});
        return out;
    }

    const Reduced r = reduce(p);
    double head_s = 0.0;
    double head_c = 0.0;
    switch (heads) {
    case HeadMethod::Series:
        try {
            head_s = pole_head_sin_series(r.c, r.gamma, ctl);
            head_c = pole_head_cos_series(r.c, r.gamma, ctl);
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
        head_s = pole_head_approx(Kernel::Sin, r.c, r.gamma);
        head_c = pole_head_approx(Kernel::Cos, r.c, r.gamma);
        break;
    }

    const double upper_s = pole_tail_sin(r.c) - head_s;
    const double upper_c = pole_tail_cos(r.c, formula) - head_c;
    const double ca = std::cos(p.a * p.zeta);
    const double sa = std::sin(p.a * p.zeta);
    out.value = r.scale * (kernel == Kernel::Sin ? ca * upper_s - sa * upper_c : ca * upper_c + sa * upper_s);
    return out;
}

double pole_sin_transform(const RadicalPoleParams& p, const SeriesControl& ctl)
{
    return assemble(Kernel::Sin, p, HeadMethod::Series, ctl).value;
}

double pole_cos_transform(const RadicalPoleParams& p, const SeriesControl& ctl)
{
    return assemble(Kernel::Cos, p, HeadMethod::Series, ctl).value;
}

} // namespace oscint::radical_pole
