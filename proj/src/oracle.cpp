#include "oscint/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "oscint/errors.hpp"
#include "oscint/quadrature.hpp"

namespace oscint::oracle {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEps = std::numeric_limits<double>::epsilon();

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& message)
{
    if (!ok)
        throw DomainError("oracle: " + message);
}

// Weight function plus what the lobe walker needs to know about it.
struct PreparedWeight {
    std::function<double(double)> w;
    bool quadratic_phase = false;
    double lower = 0.0;
    // Integrand behaves like t^-origin_exponent at t = 0 (0 when regular).
    double origin_exponent = 0.0;
    // Lobes summed without acceleration while the envelope is not monotone.
    double monotone_from = 0.0;
};

PreparedWeight prepare(const IntegrandSpec& spec)
{
    return std::visit(
        Overloaded{
            [&](const HalfPower& hp) {
                const double p = hp.alpha + 0.5;
                require(std::isfinite(p), "HalfPower exponent must be finite");
                require(hp.shift >= 0.0 && std::isfinite(hp.shift), "HalfPower shift must be nonnegative");
                if (p <= 0.0)
                    throw DivergentIntegral("oracle: HalfPower with alpha + 1/2 <= 0 diverges at infinity");
                PreparedWeight out;
                const double x = hp.shift;
                out.w = [p, x](double t) { return std::pow(t + x, -p); };
                if (x == 0.0) {
                    const double local = spec.kernel == Kernel::Sin ? p - 1.0 : p;
                    if (local >= 1.0)
                        throw DivergentIntegral(std::string("oracle: HalfPower at shift 0 diverges at the origin for the ") +
                                                std::string(to_string(spec.kernel)) + " kernel with alpha + 1/2 = " +
                                                std::to_string(p));
                    out.origin_exponent = std::max(0.0, local);
                }
                return out;
            },
            [&](const TwoRadical& r) {
                require(r.a > 0.0 && r.b > 0.0, "TwoRadical constants must be positive");
                PreparedWeight out;
                out.w = [a = r.a, b = r.b](double t) { return 1.0 / (std::sqrt(t + a) * std::sqrt(t + b)); };
                return out;
            },
            [&](const RadicalPole& r) {
                require(r.a > 0.0 && r.b > 0.0, "RadicalPole constants must be positive");
                PreparedWeight out;
                out.w = [a = r.a, b = r.b](double t) { return 1.0 / (std::sqrt(t + a) * (t + b)); };
                return out;
            },
            [&](const ThreeRadical& r) {
                require(r.a > 0.0 && r.b > 0.0 && r.c > 0.0, "ThreeRadical constants must be positive");
                PreparedWeight out;
                out.w = [a = r.a, b = r.b, c = r.c](double t) {
                    return 1.0 / (std::sqrt(t + a) * std::sqrt(t + b) * std::sqrt(t + c));
                };
                return out;
            },
            [&](const LogHalfPower& lp) {
                require(lp.shift > 0.0, "LogHalfPower shift must be positive");
                PreparedWeight out;
                const double x = lp.shift;
                out.w = [x](double t) { return std::log(t + x) / std::sqrt(t + x); };
                // ln(s)/sqrt(s) rises until s = e^2.
                out.monotone_from = std::max(0.0, std::exp(2.0) - x);
                return out;
            },
            [&](const ShiftedPowers& sp) {
                require(!sp.factors.empty(), "ShiftedPowers needs at least one factor");
                double total = 0.0;
                for (const auto& [shift, power] : sp.factors) {
                    require(shift > 0.0, "ShiftedPowers shifts must be positive");
                    total += power;
                }
                if (total <= 0.0)
                    throw DivergentIntegral("oracle: ShiftedPowers total power must be positive");
                PreparedWeight out;
                out.w = [factors = sp.factors](double t) {
                    double v = 1.0;
                    for (const auto& [shift, power] : factors)
                        v *= std::pow(t + shift, -power);
                    return v;
                };
                return out;
            },
            [&](const QuadraticPhase& qp) {
                require(qp.lower >= 0.0 && std::isfinite(qp.lower), "QuadraticPhase lower limit must be nonnegative");
                PreparedWeight out;
                out.quadratic_phase = true;
                out.lower = qp.lower;
                if (qp.denominator == QuadraticPhase::Denominator::Radical)
                    out.w = [](double z) { return 1.0 / std::sqrt(z * z + 1.0); };
                else
                    out.w = [](double z) { return 1.0 / (z * z + 1.0); };
                return out;
            },
        },
        spec.weight);
}

} // namespace

QuadratureReport integrate_semi_infinite(const IntegrandSpec& spec, const SeriesControl& ctl)
{
    ctl.validate();
    require(spec.frequency > 0.0 && std::isfinite(spec.frequency), "frequency must be positive and finite");

    const PreparedWeight pw = prepare(spec);
    const double freq = spec.frequency;
    const bool sine = spec.kernel == Kernel::Sin;

    // Phase phi(t) = freq t (or freq t^2) and its inverse.
    auto phase = [&](double t) { return pw.quadratic_phase ? freq * t * t : freq * t; };
    auto inverse_phase = [&](double theta) { return pw.quadratic_phase ? std::sqrt(theta / freq) : theta / freq; };
    auto integrand = [&](double t) {
        const double th = phase(t);
        return (sine ? std::sin(th) : std::cos(th)) * pw.w(t);
    };

    const double offset = sine ? 0.0 : 0.5;
    const double first = std::floor(phase(pw.lower) / kPi - offset) + 1.0;
    auto zero = [&](int k) { return inverse_phase((first + k + offset) * kPi); };

    quad::AdaptiveOptions opts;
    opts.rel_tol = std::max(1e-2 * ctl.rel_tol, 4.0 * kEps);
    opts.abs_tol = 1e-17;

    auto lobe = [&](int k) -> quad::Estimate {
        const double lo = k == 0 ? pw.lower : zero(k - 1);
        const double hi = zero(k);
        if (k == 0 && pw.origin_exponent > 0.0) {
            // t = s^q removes the t^-e endpoint singularity when q = 1/(1-e).
            const double q = 1.0 / (1.0 - pw.origin_exponent);
            auto g = [&, q](double s) {
                if (s <= 0.0)
                    return 0.0;
                return integrand(std::pow(s, q)) * q * std::pow(s, q - 1.0);
            };
            return quad::integrate_adaptive(g, 0.0, std::pow(hi, 1.0 / q), opts);
        }
        return quad::integrate_adaptive(integrand, lo, hi, opts);
    };

    int direct = 0;
    while (zero(direct) <= pw.monotone_from)
        ++direct;
    if (pw.monotone_from > 0.0)
        ++direct;

    const quad::LobeSum sum = quad::sum_alternating_lobes(lobe, direct, ctl);
    QuadratureReport report;
    report.value = sum.value;
    report.abs_err_est = sum.abs_err;
    report.zero_intervals_used = sum.lobes;
    report.accelerated = sum.accelerated;
    return report;
}

QuadratureReport integrate_finite(const std::function<double(double)>& f, double lo, double hi,
                                  const SeriesControl& ctl)
{
    ctl.validate();
    require(std::isfinite(lo) && std::isfinite(hi), "finite-range limits must be finite");
    require(lo <= hi, "finite-range integration needs lo <= hi");
    QuadratureReport report;
    if (lo == hi)
        return report;
    quad::AdaptiveOptions opts;
    opts.rel_tol = ctl.rel_tol;
    opts.abs_tol = 1e-15;
    const quad::Estimate e = quad::integrate_adaptive(f, lo, hi, opts);
    report.value = e.value;
    report.abs_err_est = e.abs_err;
    report.zero_intervals_used = 0;
    return report;
}

} // namespace oscint::oracle
