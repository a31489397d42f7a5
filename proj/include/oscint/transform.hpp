#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oscint/kernel.hpp"
#include "oscint/oracle.hpp"
#include "oscint/series_control.hpp"

/// One entry point for every family and evaluation route. The CLI and the
/// self-check suite go through here; the family modules stay independent.
namespace oscint {

/// LogWeighted is int_0^inf ln(t + x) sin t / sqrt(t + x) dt (sin kernel, zeta = 1).
enum class Family { HalfPower, TwoRadical, RadicalPole, Lommel, ThreeRadical, LogWeighted };

/// ClosedForm     closed tails, heads by finite quadrature (two-radical,
///                radical-pole); Fresnel / incomplete-gamma forms otherwise
/// Series         closed tails with series heads; the si/ci route for lommel;
///                finite differences of the Lommel route for log-weighted
/// Approximation  closed tails with leading-order heads, gamma <= 1
/// Oracle         direct oscillatory quadrature
/// AsPrinted      the default route with every errata correction reverted
enum class Method { ClosedForm, Series, Approximation, Oracle, AsPrinted };

struct TransformRequest {
    Family family = Family::HalfPower;
    Kernel kernel = Kernel::Sin;
    double x = 1.0;
    double zeta = 1.0;
    double a = 1.0;
    double b = 2.0;
    double c3 = 3.0; // third shift, three-radical only
    int alpha = 0;   // half-power order
    int n = 0;       // lommel exponent 2n + 1/m (+1)
    int m = 1;
    bool plus_one = false;
};

struct EvalResult {
    double value = 0.0;
    Method method = Method::ClosedForm;
    double err_estimate = 0.0;
    std::string route;
};

std::string_view to_string(Family f);
std::string_view to_string(Method m);
std::optional<Family> parse_family(std::string_view s);
std::optional<Method> parse_method(std::string_view s);
std::optional<Kernel> parse_kernel(std::string_view s);

std::vector<Family> all_families();
std::vector<Method> supported_methods(Family f);
Method default_method(Family f);

/// Throws DomainError, DivergentIntegral or NotSupported.
void validate(const TransformRequest& r, Method method);

/// The oracle integrand equivalent to the request.
oracle::IntegrandSpec to_integrand(const TransformRequest& r);

/// formula applies to the non-oracle routes; Method::AsPrinted forces it.
EvalResult evaluate(const TransformRequest& r, Method method, const SeriesControl& ctl = {},
                    Formula formula = Formula::Verified);

} // namespace oscint
