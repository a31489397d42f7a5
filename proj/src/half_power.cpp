#include "oscint/half_power.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "oscint/errors.hpp"
#include "oscint/special_functions.hpp"

namespace oscint::half_power {

using special::kPi;

namespace {

double sign(int n) { return n % 2 == 0 ? 1.0 : -1.0; }

// Closed-form coefficients. With g(s) = Gamma(s), u the scaled argument:
//   S_{2n}:   F = (-1)^{n+1} sum_{k<n} (-1)^k g(2k+1/2)/g(2n+1/2) u^-(2k+1/2), c = (-1)^n pi/(sqrt2 g(2n+1/2)), SinLike
//   C_{2n}:   F = (-1)^{n+1} sum_{k<n} (-1)^k g(2k+3/2)/g(2n+1/2) u^-(2k+3/2), c = (-1)^n pi/(sqrt2 g(2n+1/2)), CosLike
//   S_{2n+1}: F = (-1)^{n+1} sum_{k<n} (-1)^k g(2k+3/2)/g(2n+3/2) u^-(2k+3/2), c = (-1)^n pi/(sqrt2 g(2n+3/2)), CosLike
//   C_{2n+1}: F = (-1)^n sqrt(pi)/g(2n+3/2) u^-1/2
//                 + (-1)^{n+1} sum_{k<n} (-1)^k g(2k+5/2)/g(2n+3/2) u^-(2k+5/2), c = (-1)^{n+1} pi/(sqrt2 g(2n+3/2)), SinLike
FamilyCoefficients closed_coefficients(int alpha, Kernel kernel, Formula formula)
{
    const int n = alpha / 2;
    const bool odd = alpha % 2 == 1;
    const bool printed = formula == Formula::AsPrinted;
    const double base = odd ? 2.0 * n + 1.5 : 2.0 * n + 0.5;
    const double g_base = std::tgamma(base);

    FamilyCoefficients fc;
    double first_power = 0.0;
    double sum_sign = sign(n + 1);
    if (!odd) {
        first_power = kernel == Kernel::Sin ? 0.5 : 1.5;
        fc.phase_pattern = kernel == Kernel::Sin ? PhasePattern::SinLike : PhasePattern::CosLike;
        fc.fresnel_coeff = sign(n) * kPi / (std::sqrt(2.0) * g_base);
    } else if (kernel == Kernel::Sin) {
        first_power = 1.5;
        fc.phase_pattern = PhasePattern::CosLike;
        fc.fresnel_coeff = sign(n) * kPi / (std::sqrt(2.0) * g_base);
        if (printed)
            sum_sign = sign(n);
    } else {
        first_power = 2.5;
        fc.phase_pattern = PhasePattern::SinLike;
        fc.fresnel_coeff = sign(n + 1) * kPi / (std::sqrt(2.0) * g_base);
        const double lead_sign = printed ? sign(n + 1) : sign(n);
        fc.rational_part.push_back({0.5, lead_sign * std::sqrt(kPi) / g_base});
    }
    for (int k = 0; k < n; ++k) {
        const double power = 2.0 * k + first_power;
        fc.rational_part.push_back({power, sum_sign * sign(k) * std::tgamma(power) / g_base});
    }
    return fc;
}

// Coefficient of u^-power in fc.rational_part (0 if absent).
double coefficient_of(const FamilyCoefficients& fc, double power)
{
    double c = 0.0;
    for (const auto& t : fc.rational_part)
        if (t.power == power)
            c += t.coeff;
    return c;
}

// One step of the family recurrence, alpha -> alpha + 2, in coefficient form:
//   (alpha+1/2)(alpha+3/2) X_{alpha+2} + X_alpha = rhs,
// rhs = u^-(alpha+1/2) for sin and (alpha+1/2) u^-(alpha+3/2) for cos.
void check_recurrence(const FamilyCoefficients& lower, const FamilyCoefficients& upper, int alpha, Kernel kernel)
{
    const double factor = (alpha + 0.5) * (alpha + 1.5);
    auto close = [](double a, double b) { return std::abs(a - b) <= 1e-13 * std::max({1.0, std::abs(a), std::abs(b)}); };

    bool ok = close(factor * upper.fresnel_coeff + lower.fresnel_coeff, 0.0) &&
              upper.phase_pattern == lower.phase_pattern;
    const double rhs_power = kernel == Kernel::Sin ? alpha + 0.5 : alpha + 1.5;
    const double rhs_coeff = kernel == Kernel::Sin ? 1.0 : alpha + 0.5;
    for (const auto& t : upper.rational_part) {
        const double expected = (t.power == rhs_power ? rhs_coeff : 0.0) - coefficient_of(lower, t.power);
        ok = ok && close(factor * t.coeff, expected);
    }
    if (!ok)
        throw std::logic_error("half_power: family coefficients for alpha = " + std::to_string(alpha + 2) +
                               " violate the recurrence");
}

// Bracket evaluated through the Maclaurin series of the Fresnel integrals in
// u directly: C(w) = w sum (-1)^n u^{2n}/((2n)!(4n+1)),
// S(w) = w sum (-1)^n u^{2n+1}/((2n+1)!(4n+3)).
double bracket_small(PhasePattern pattern, double u)
{
    double sum_c = 0.0;
    double sum_s = 0.0;
    double term = 1.0; // u^k / k!
    for (int k = 0; k < 30; ++k) {
        const double contrib = ((k / 2) % 2 == 0 ? 1.0 : -1.0) * term / (2 * k + 1);
        if (k % 2 == 0)
            sum_c += contrib;
        else
            sum_s += contrib;
        term *= u / (k + 1);
        if (term < 1e-18)
            break;
    }
    const double w = std::sqrt(2.0 * u / kPi);
    const double cu = std::cos(u);
    const double su = std::sin(u);
    if (pattern == PhasePattern::SinLike)
        return cu - su + 2.0 * w * (su * sum_c - cu * sum_s);
    return cu + su - 2.0 * w * (cu * sum_c + su * sum_s);
}

// Value of the member in the scaled variable u = zeta x (zeta = 1).
double scaled_value(const FamilyCoefficients& fc, double u)
{
    return fc.rational(u) + fc.fresnel_coeff * bracket(fc.phase_pattern, u);
}

} // namespace

double FamilyCoefficients::rational(double u) const
{
    double v = 0.0;
    for (const auto& t : rational_part)
        v += t.coeff * std::pow(u, -t.power);
    return v;
}

double bracket(PhasePattern pattern, double u)
{
    if (u < kSmallArgument)
        return bracket_small(pattern, u);
    const auto f = special::fresnel(std::sqrt(2.0 * u / kPi));
    const double cu = std::cos(u);
    const double su = std::sin(u);
    if (pattern == PhasePattern::SinLike)
        return cu * (1.0 - 2.0 * f.s) - su * (1.0 - 2.0 * f.c);
    return cu * (1.0 - 2.0 * f.c) + su * (1.0 - 2.0 * f.s);
}

FamilyCoefficients family_coefficients(int alpha, Kernel kernel, Formula formula)
{
    if (alpha < 0)
        throw DomainError("half_power: alpha must be a nonnegative integer");
    FamilyCoefficients fc = closed_coefficients(alpha, kernel, formula);
    if (formula == Formula::Verified && alpha >= 2)
        check_recurrence(closed_coefficients(alpha - 2, kernel, formula), fc, alpha - 2, kernel);
    return fc;
}

void validate(Kernel kernel, const HalfPowerParams& p)
{
    if (!(p.zeta > 0.0) || !std::isfinite(p.zeta))
        throw DomainError("half_power: zeta must be positive (zeta > 0)");
    if (!(p.x >= 0.0) || !std::isfinite(p.x))
        throw DomainError("half_power: x must be nonnegative (x >= 0)");
    if (p.alpha < 0)
        throw DomainError("half_power: alpha must be a nonnegative integer");
    if (p.x == 0.0) {
        // At the origin sin t / t^p converges for p < 2, cos t / t^p for p < 1.
        const bool converges = kernel == Kernel::Sin ? p.alpha <= 1 : p.alpha == 0;
        if (!converges)
            throw DivergentIntegral("half_power: the " + std::string(to_string(kernel)) +
                                    " transform with alpha = " + std::to_string(p.alpha) + " diverges at x = 0");
    }
}

double transform(Kernel kernel, const HalfPowerParams& p, Formula formula)
{
    validate(kernel, p);
    const FamilyCoefficients fc = family_coefficients(p.alpha, kernel, formula);
    const double u = p.zeta * p.x;
    return std::pow(p.zeta, p.alpha - 0.5) * scaled_value(fc, u);
}

double s_alpha(const HalfPowerParams& p, Formula formula) { return transform(Kernel::Sin, p, formula); }
double c_alpha(const HalfPowerParams& p, Formula formula) { return transform(Kernel::Cos, p, formula); }

double s0(double x, double zeta) { return s_alpha({zeta, x, 0}); }
double c0(double x, double zeta) { return c_alpha({zeta, x, 0}); }

} // namespace oscint::half_power
