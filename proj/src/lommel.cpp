#include "oscint/lommel.hpp"

#include <cmath>
#include <string>

#include "oscint/errors.hpp"
#include "oscint/special_functions.hpp"

namespace oscint::lommel {

using special::kPi;

namespace {

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError(std::string("lommel: ") + what + " must be positive");
}

} // namespace

double GeneralExponent::exponent(bool plus_one) const
{
    validate();
    return 2.0 * n + 1.0 / m + (plus_one ? 1.0 : 0.0);
}

void GeneralExponent::validate() const
{
    if (n < 0)
        throw DomainError("lommel: n must be nonnegative (n >= 0)");
    if (m < 1)
        throw DomainError("lommel: m must be at least 1 (m >= 1)");
}

double sqrt_z_lommel(double mu, double z, const SeriesControl& ctl, Formula formula)
{
    require_positive(z, "z");
    if (!std::isfinite(mu))
        throw DomainError("lommel: mu must be finite");
    const double alpha = 0.5 - mu;
    const double order = formula == Formula::AsPrinted ? -alpha : 1.0 - alpha;
    const double phase = 0.5 * kPi * alpha + z;
    const ComplexValue lower = std::polar(1.0, -phase) * special::upper_incomplete_gamma(order, {0.0, -z}, ctl);
    const ComplexValue upper = std::polar(1.0, phase) * special::upper_incomplete_gamma(order, {0.0, z}, ctl);
    const ComplexValue sum = 0.5 * (lower + upper);
    // The two halves are complex conjugates, so the imaginary part is round-off.
    if (std::abs(sum.imag()) > 1e-12 * (std::abs(lower) + std::abs(upper)) + 1e-300)
        throw Error("lommel: incomplete-gamma sum is not real (imaginary part " + std::to_string(sum.imag()) + ")");
    return sum.real();
}

double lommel_s_half(double mu, double z, const SeriesControl& ctl, Formula formula)
{
    return sqrt_z_lommel(mu, z, ctl, formula) / std::sqrt(z);
}

double power_transform(Kernel kernel, double p, double x, double zeta, const SeriesControl& ctl, Formula formula)
{
    require_positive(p, "exponent");
    require_positive(x, "x");
    require_positive(zeta, "zeta");
    const double u = zeta * x;
    const double scale = std::pow(zeta, p - 1.0);
    if (kernel == Kernel::Sin)
        return scale * sqrt_z_lommel(0.5 - p, u, ctl, formula);
    return scale * p * sqrt_z_lommel(-0.5 - p, u, ctl, formula);
}

double general_sin_transform(const GeneralExponent& g, bool plus_one, double x, double zeta, const SeriesControl& ctl)
{
    return power_transform(Kernel::Sin, g.exponent(plus_one), x, zeta, ctl);
}

double general_cos_transform(const GeneralExponent& g, bool plus_one, double x, double zeta, const SeriesControl& ctl)
{
    return power_transform(Kernel::Cos, g.exponent(plus_one), x, zeta, ctl);
}

double unreduced_transform(Kernel kernel, const GeneralExponent& g, bool plus_one, double x, double zeta,
                           const SeriesControl& ctl)
{
    require_positive(x, "x");
    require_positive(zeta, "zeta");
    const double p = g.exponent(false);
    const double u = zeta * x;
    auto root_s = [&](double mu) { return sqrt_z_lommel(mu, u, ctl); };

    if (!plus_one && kernel == Kernel::Sin)
        return std::pow(zeta, p - 1.0) * root_s(0.5 - p);
    if (!plus_one && kernel == Kernel::Cos) {
        if (p == 1.0)
            throw DomainError("lommel: unreduced cosine form is singular at exponent 1");
        return std::pow(zeta, p - 1.0) / (p - 1.0) * (std::pow(u, 1.0 - p) - root_s(1.5 - p));
    }
    if (kernel == Kernel::Sin) {
        if (p == 1.0)
            throw DomainError("lommel: unreduced sine form is singular at exponent 2");
        return std::pow(zeta, p) / ((p - 1.0) * p) * (std::pow(u, 1.0 - p) - root_s(1.5 - p));
    }
    return std::pow(zeta, p) / p * (std::pow(u, -p) - root_s(0.5 - p));
}

double alpha_derivative(double x, const SeriesControl& ctl)
{
    require_positive(x, "x");
    const ComplexValue f = special::hyp2f2_half(x, ctl);
    const double rx = std::sqrt(x);
    const double s0 = sqrt_z_lommel(0.0, x, ctl); // sqrt(x) S_{0,1/2}(x)
    const double shifted = x + 0.25 * kPi;
    return -std::log(x) * s0 - 0.5 * std::pow(kPi, 1.5) * std::sin(shifted) +
           std::sqrt(kPi) * (special::kEulerGamma + std::log(4.0 * x)) * std::cos(shifted) +
           4.0 * rx * (std::sin(x) * f.real() - std::cos(x) * f.imag());
}

double alpha_derivative_fd(double x, double h, const SeriesControl& ctl)
{
    require_positive(x, "x");
    require_positive(h, "h");
    const double up = sqrt_z_lommel(0.5 - (0.5 + h), x, ctl);
    const double down = sqrt_z_lommel(0.5 - (0.5 - h), x, ctl);
    return (up - down) / (2.0 * h);
}

double log_weighted_sin_integral(double x, const SeriesControl& ctl) { return -alpha_derivative(x, ctl); }

double si_ci_representation(const GeneralExponent& g, bool plus_one, double x, double zeta, Kernel kernel,
                            const SeriesControl& ctl, Formula formula)
{
    require_positive(x, "x");
    require_positive(zeta, "zeta");
    const double p = g.exponent(plus_one);
    const double u = zeta * x;
    const double si = special::gen_si(1.0 - p, u, ctl);
    const double ci = special::gen_ci(1.0 - p, u, ctl);
    const double scale = std::pow(zeta, p - 1.0);
    if (kernel == Kernel::Sin) {
        const double s = formula == Formula::AsPrinted ? std::sin(x) : std::sin(u);
        return scale * (std::cos(u) * si - s * ci);
    }
    return scale * (std::cos(u) * ci + std::sin(u) * si);
}

} // namespace oscint::lommel
