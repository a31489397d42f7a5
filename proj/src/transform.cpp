#include "oscint/transform.hpp"

#include <cmath>

#include "oscint/errors.hpp"
#include "oscint/half_power.hpp"
#include "oscint/lommel.hpp"
#include "oscint/radical_pole.hpp"
#include "oscint/two_radical.hpp"

namespace oscint {

namespace {

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError(std::string(what) + " must be positive (" + what + " > 0)");
}

lommel::GeneralExponent exponent_of(const TransformRequest& r) { return {r.n, r.m}; }

double closed_estimate(double value, const SeriesControl& ctl) { return ctl.rel_tol * std::abs(value); }

template <class Assemble>
EvalResult assembled(Method method, const SeriesControl& ctl, Formula formula,
                     Assemble assemble)
{
    EvalResult out;
    out.method = method;
    switch (method) {
    case Method::ClosedForm: {
        const auto a = assemble(0, formula);
        out.value = a.value;
        out.route = "closed tails, quadrature heads";
        out.err_estimate = closed_estimate(out.value, ctl);
        break;
    }
    case Method::Series:
    case Method::AsPrinted: {
        const auto a = assemble(1, formula);
        out.value = a.value;
        out.route = a.used_fallback ? "closed tails, series heads (quadrature fallback)" : "closed tails, series heads";
        out.err_estimate = closed_estimate(out.value, ctl);
        break;
    }
    case Method::Approximation: {
        const auto a = assemble(2, formula);
        const auto reference = assemble(1, Formula::Verified);
        out.value = a.value;
        out.route = "closed tails, leading-order heads";
        out.err_estimate = std::abs(a.value - reference.value);
        break;
    }
    case Method::Oracle:
        break;
    }
    return out;
}

} // namespace

std::string_view to_string(Family f)
{
    switch (f) {
    case Family::HalfPower:
        return "half-power";
    case Family::TwoRadical:
        return "two-radical";
    case Family::RadicalPole:
        return "radical-pole";
    case Family::Lommel:
        return "lommel";
    case Family::ThreeRadical:
        return "three-radical";
    case Family::LogWeighted:
        return "log-weighted";
    }
    return "unknown";
}

std::string_view to_string(Method m)
{
    switch (m) {
    case Method::ClosedForm:
        return "closed-form";
    case Method::Series:
        return "series";
    case Method::Approximation:
        return "approximation";
    case Method::Oracle:
        return "oracle";
    case Method::AsPrinted:
        return "as-printed";
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view s)
{
    for (Family f : all_families())
        if (to_string(f) == s)
            return f;
    return std::nullopt;
}

std::optional<Method> parse_method(std::string_view s)
{
    for (Method m : {Method::ClosedForm, Method::Series, Method::Approximation, Method::Oracle, Method::AsPrinted})
        if (to_string(m) == s)
            return m;
    return std::nullopt;
}

std::optional<Kernel> parse_kernel(std::string_view s)
{
    if (s == "sin")
        return Kernel::Sin;
    if (s == "cos")
        return Kernel::Cos;
    return std::nullopt;
}

std::vector<Family> all_families()
{
    return {Family::HalfPower,    Family::TwoRadical,   Family::RadicalPole,
            Family::Lommel,       Family::ThreeRadical, Family::LogWeighted};
}

std::vector<Method> supported_methods(Family f)
{
    switch (f) {
    case Family::HalfPower:
        return {Method::ClosedForm, Method::Oracle, Method::AsPrinted};
    case Family::TwoRadical:
    case Family::RadicalPole:
        return {Method::ClosedForm, Method::Series, Method::Approximation, Method::Oracle, Method::AsPrinted};
    case Family::Lommel:
        return {Method::ClosedForm, Method::Series, Method::Oracle, Method::AsPrinted};
    case Family::ThreeRadical:
        return {Method::Oracle};
    case Family::LogWeighted:
        return {Method::ClosedForm, Method::Series, Method::Oracle};
    }
    return {};
}

Method default_method(Family f)
{
    switch (f) {
    case Family::TwoRadical:
    case Family::RadicalPole:
        return Method::Series;
    case Family::ThreeRadical:
        return Method::Oracle;
    default:
        return Method::ClosedForm;
    }
}

void validate(const TransformRequest& r, Method method)
{
    require_positive(r.zeta, "zeta");
    bool supported = false;
    for (Method m : supported_methods(r.family))
        supported = supported || m == method;
    if (!supported)
        throw NotSupported("method " + std::string(to_string(method)) + " is not available for family " +
                           std::string(to_string(r.family)));

    switch (r.family) {
    case Family::HalfPower:
        if (r.alpha < 0)
            throw DomainError("alpha must be a nonnegative integer (alpha >= 0)");
        if (!(r.x >= 0.0) || !std::isfinite(r.x))
            throw DomainError("x must be nonnegative (x >= 0)");
        half_power::validate(r.kernel, {r.zeta, r.x, r.alpha});
        break;
    case Family::TwoRadical:
        require_positive(r.a, "a");
        require_positive(r.b, "b");
        if (method == Method::Approximation) {
            const double lo = std::min(r.a, r.b);
            const double hi = std::max(r.a, r.b);
            if (!(hi > lo) || lo / (hi - lo) > 1.0)
                throw DomainError("approximation requires gamma <= 1, i.e. b >= 2a");
        }
        break;
    case Family::RadicalPole:
        require_positive(r.a, "a");
        require_positive(r.b, "b");
        if (method != Method::Oracle && r.b < r.a)
            throw NotSupported("radical-pole closed forms require b >= a");
        if (method == Method::Approximation && (!(r.b > r.a) || r.a / (r.b - r.a) > 1.0))
            throw DomainError("approximation requires gamma <= 1, i.e. b >= 2a");
        break;
    case Family::Lommel:
        require_positive(r.x, "x");
        exponent_of(r).validate();
        break;
    case Family::ThreeRadical:
        require_positive(r.a, "a");
        require_positive(r.b, "b");
        require_positive(r.c3, "c3");
        break;
    case Family::LogWeighted:
        require_positive(r.x, "x");
        if (r.kernel != Kernel::Sin || r.zeta != 1.0)
            throw NotSupported("log-weighted integral is available for the sin kernel at zeta = 1 only");
        break;
    }
}

oracle::IntegrandSpec to_integrand(const TransformRequest& r)
{
    oracle::IntegrandSpec spec;
    spec.kernel = r.kernel;
    spec.frequency = r.zeta;
    switch (r.family) {
    case Family::HalfPower:
        spec.weight = oracle::HalfPower{static_cast<double>(r.alpha), r.x};
        break;
    case Family::TwoRadical:
        spec.weight = oracle::TwoRadical{r.a, r.b};
        break;
    case Family::RadicalPole:
        spec.weight = oracle::RadicalPole{r.a, r.b};
        break;
    case Family::Lommel:
        spec.weight = oracle::HalfPower{exponent_of(r).exponent(r.plus_one) - 0.5, r.x};
        break;
    case Family::ThreeRadical:
        spec.weight = oracle::ThreeRadical{r.a, r.b, r.c3};
        break;
    case Family::LogWeighted:
        spec.weight = oracle::LogHalfPower{r.x};
        break;
    }
    return spec;
}

EvalResult evaluate(const TransformRequest& r, Method method, const SeriesControl& ctl, Formula formula)
{
    validate(r, method);
    if (method == Method::AsPrinted)
        formula = Formula::AsPrinted;

    if (method == Method::Oracle) {
        const auto report = oracle::integrate_semi_infinite(to_integrand(r), ctl);
        EvalResult out;
        out.value = report.value;
        out.method = method;
        out.err_estimate = report.abs_err_est;
        out.route = "lobe quadrature, " + std::to_string(report.zero_intervals_used) + " lobes" +
                    (report.accelerated ? ", Euler accelerated" : "");
        return out;
    }

    switch (r.family) {
    case Family::HalfPower: {
        EvalResult out;
        out.method = method;
        out.value = half_power::transform(r.kernel, {r.zeta, r.x, r.alpha}, formula);
        out.err_estimate = closed_estimate(out.value, ctl);
        out.route = r.alpha == 0 ? "Fresnel closed form" : "Gamma-ratio coefficients with Fresnel bracket";
        return out;
    }
    case Family::TwoRadical: {
        const two_radical::TwoRadicalParams p{r.a, r.b, r.zeta};
        return assembled(method, ctl, formula, [&](int heads, Formula f) {
            static constexpr two_radical::HeadMethod kHeads[] = {two_radical::HeadMethod::Quadrature,
                                                                 two_radical::HeadMethod::Series,
                                                                 two_radical::HeadMethod::Approximation};
            return two_radical::assemble(r.kernel, p, kHeads[heads], ctl, f);
        });
    }
    case Family::RadicalPole: {
        const radical_pole::RadicalPoleParams p{r.a, r.b, r.zeta};
        return assembled(method, ctl, formula, [&](int heads, Formula f) {
            static constexpr radical_pole::HeadMethod kHeads[] = {radical_pole::HeadMethod::Quadrature,
                                                                  radical_pole::HeadMethod::Series,
                                                                  radical_pole::HeadMethod::Approximation};
            return radical_pole::assemble(r.kernel, p, kHeads[heads], ctl, f);
        });
    }
    case Family::Lommel: {
        EvalResult out;
        out.method = method;
        const auto g = exponent_of(r);
        if (method == Method::Series) {
            out.value = lommel::si_ci_representation(g, r.plus_one, r.x, r.zeta, r.kernel, ctl, formula);
            out.route = "generalized si/ci";
        } else {
            out.value = lommel::power_transform(r.kernel, g.exponent(r.plus_one), r.x, r.zeta, ctl, formula);
            out.route = "Lommel function via incomplete gamma";
        }
        out.err_estimate = closed_estimate(out.value, ctl);
        return out;
    }
    case Family::LogWeighted: {
        EvalResult out;
        out.method = method;
        if (method == Method::Series) {
            constexpr double h = 1e-4;
            out.value = -lommel::alpha_derivative_fd(r.x, h, ctl);
            out.route = "central difference of the Lommel route in the exponent";
            out.err_estimate = std::abs(out.value) * h * h;
        } else {
            out.value = lommel::log_weighted_sin_integral(r.x, ctl);
            out.route = "2F2 closed form";
            out.err_estimate = closed_estimate(out.value, ctl);
        }
        return out;
    }
    case Family::ThreeRadical:
        break;
    }
    throw NotSupported("no closed form for family " + std::string(to_string(r.family)));
}

} // namespace oscint
