#include "oscint/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "oscint/errors.hpp"
#include "oscint/quadrature.hpp"

namespace oscint::special {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr long double kPiL = 3.141592653589793238462643383279502884L;
constexpr long double kEulerGammaL = 0.577215664901532860606512090082402431L;

// Stopping threshold for series and continued fractions: a little tighter
// than requested so that downstream identities keep their margin.
double inner_tolerance(const SeriesControl& ctl)
{
    ctl.validate();
    return std::max(1e-2 * ctl.rel_tol, kEps);
}

bool is_nonpositive_integer(double x)
{
    return x <= 0.0 && x == std::floor(x);
}

} // namespace

// ---------------------------------------------------------------------------
// Fresnel integrals

namespace detail {

FresnelPair fresnel_series(double z)
{
    // C = sum (-1)^n (pi/2)^{2n} z^{4n+1} / ((2n)! (4n+1)),
    // S = sum (-1)^n (pi/2)^{2n+1} z^{4n+3} / ((2n+1)! (4n+3)).
    const double x = 0.5 * kPi * z * z;
    double term = z; // x^k z / k!
    FresnelPair out;
    for (int k = 0; k < 200; ++k) {
        const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
        const double contrib = sign * term / (2 * k + 1);
        if (k % 2 == 0)
            out.c += contrib;
        else
            out.s += contrib;
        if (k > 2 && std::abs(contrib) <= kEps * std::max(std::abs(out.c), std::abs(out.s)))
            break;
        term *= x / (k + 1);
    }
    return out;
}

FresnelPair fresnel_continued_fraction(double z)
{
    // Modified Lentz evaluation of the complementary error function
    // continued fraction; z > 0.
    using C = std::complex<double>;
    const double pix2 = kPi * z * z;
    C b(1.0, -pix2);
    C cc(1.0 / kTiny, 0.0);
    C d = 1.0 / b;
    C h = d;
    int n = -1;
    for (int k = 2; k < 1000; ++k) {
        n += 2;
        const double a = -static_cast<double>(n) * (n + 1);
        b += 4.0;
        d = 1.0 / (a * d + b);
        cc = b + a / cc;
        const C del = cc * d;
        h *= del;
        if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < kEps)
            break;
    }
    h *= C(z, -z);
    const C cs = C(0.5, 0.5) * (1.0 - C(std::cos(0.5 * pix2), std::sin(0.5 * pix2)) * h);
    return {cs.imag(), cs.real()};
}

} // namespace detail

FresnelPair fresnel(double z)
{
    const double az = std::abs(z);
    FresnelPair out = (az <= kFresnelSeriesLimit) ? detail::fresnel_series(az) : detail::fresnel_continued_fraction(az);
    if (z < 0.0) {
        out.s = -out.s;
        out.c = -out.c;
    }
    return out;
}

double fresnel_s(double z) { return fresnel(z).s; }
double fresnel_c(double z) { return fresnel(z).c; }

// ---------------------------------------------------------------------------
// Bessel J0, Y0

namespace detail {

// Ascending series in extended precision; the alternating terms peak near
// k = z/2, so the extra mantissa bits absorb the cancellation up to the
// switch point.
double bessel_j0_series(double z)
{
    const long double q = 0.25L * static_cast<long double>(z) * z;
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 1; k < 300; ++k) {
        term *= -q / (static_cast<long double>(k) * k);
        sum += term;
        if (std::fabs(term) <= std::numeric_limits<long double>::epsilon() * std::fabs(sum) && k > q)
            break;
    }
    return static_cast<double>(sum);
}

double bessel_y0_series(double z)
{
    const long double zl = z;
    const long double q = 0.25L * zl * zl;
    long double term = 1.0L;
    long double j0 = 1.0L;
    long double harmonic = 0.0L;
    long double tail = 0.0L;
    for (int k = 1; k < 300; ++k) {
        term *= -q / (static_cast<long double>(k) * k);
        harmonic += 1.0L / k;
        j0 += term;
        tail -= harmonic * term;
        if (std::fabs(harmonic * term) <= std::numeric_limits<long double>::epsilon() * std::fabs(tail) && k > q)
            break;
    }
    const long double y0 = (2.0L / kPiL) * ((std::log(0.5L * zl) + kEulerGammaL) * j0 + tail);
    return static_cast<double>(y0);
}

namespace {

// Hankel P0, Q0 summed up to the smallest term.
void hankel_pq(double z, double& p, double& q)
{
    double term = 1.0; // a_k / z^k
    p = 1.0;
    q = 0.0;
    double last = 1.0;
    for (int k = 1; k < 100; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= -(odd * odd) / (8.0 * k * z);
        if (std::abs(term) >= last)
            break;
        last = std::abs(term);
        // (-1)^{floor(k/2)} a_k / z^k feeds P for even k and Q for odd k.
        const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 0)
            p += sign * term;
        else
            q += sign * term;
        if (last < 0.25 * kEps)
            break;
    }
}

} // namespace

double bessel_j0_asymptotic(double z)
{
    double p = 0.0;
    double q = 0.0;
    hankel_pq(z, p, q);
    const double s = std::sin(z);
    const double c = std::cos(z);
    const double cos_chi = (c + s) / std::sqrt(2.0);
    const double sin_chi = (s - c) / std::sqrt(2.0);
    return std::sqrt(2.0 / (kPi * z)) * (p * cos_chi - q * sin_chi);
}

double bessel_y0_asymptotic(double z)
{
    double p = 0.0;
    double q = 0.0;
    hankel_pq(z, p, q);
    const double s = std::sin(z);
    const double c = std::cos(z);
    const double cos_chi = (c + s) / std::sqrt(2.0);
    const double sin_chi = (s - c) / std::sqrt(2.0);
    return std::sqrt(2.0 / (kPi * z)) * (p * sin_chi + q * cos_chi);
}

} // namespace detail

double bessel_j0(double z)
{
    const double az = std::abs(z);
    return az <= kBesselSeriesLimit ? detail::bessel_j0_series(az) : detail::bessel_j0_asymptotic(az);
}

double bessel_y0(double z)
{
    if (!(z > 0.0))
        throw DomainError("bessel_y0: argument must be positive");
    return z <= kBesselSeriesLimit ? detail::bessel_y0_series(z) : detail::bessel_y0_asymptotic(z);
}

// ---------------------------------------------------------------------------
// Gamma

double gamma_real(double x)
{
    if (is_nonpositive_integer(x))
        throw DomainError("gamma_real: pole at non-positive integer " + std::to_string(x));
    return std::tgamma(x);
}

// ---------------------------------------------------------------------------
// Upper incomplete gamma

namespace detail {

ComplexValue incomplete_gamma_series(double a, ComplexValue z, const SeriesControl& ctl)
{
    // Gamma(a, z) = Gamma(a) - e^{-z} z^a sum_n z^n / (a (a+1) ... (a+n)), a > 0.
    const double tol = inner_tolerance(ctl);
    ComplexValue term = 1.0 / a;
    ComplexValue sum = term;
    for (int n = 1;; ++n) {
        if (n > ctl.max_terms)
            throw ConvergenceFailure(ConvergenceFailure::Kind::SeriesTerms,
                                     "incomplete gamma series exceeded max_terms");
        term *= z / (a + n);
        sum += term;
        if (std::abs(term) <= tol * std::abs(sum))
            break;
    }
    const ComplexValue lower = std::exp(-z + a * std::log(z)) * sum;
    return gamma_real(a) - lower;
}

ComplexValue incomplete_gamma_continued_fraction(double a, ComplexValue z, const SeriesControl& ctl)
{
    // Legendre continued fraction, modified Lentz.
    const double tol = inner_tolerance(ctl);
    ComplexValue b = z + 1.0 - a;
    ComplexValue c = 1.0 / kTiny;
    ComplexValue d = 1.0 / b;
    ComplexValue h = d;
    for (int i = 1;; ++i) {
        if (i > ctl.max_terms)
            throw ConvergenceFailure(ConvergenceFailure::Kind::ContinuedFraction,
                                     "incomplete gamma continued fraction exceeded max_terms");
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny)
            d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        const ComplexValue del = d * c;
        h *= del;
        if (std::abs(del - 1.0) <= tol)
            break;
    }
    return std::exp(-z + a * std::log(z)) * h;
}

ComplexValue exponential_integral_e1(ComplexValue z, const SeriesControl& ctl)
{
    if (std::abs(z) >= 1.0)
        return incomplete_gamma_continued_fraction(0.0, z, ctl);
    // E1(z) = -gamma - log z - sum_{k>=1} (-z)^k / (k k!)
    const double tol = inner_tolerance(ctl);
    ComplexValue term = 1.0;
    ComplexValue sum = 0.0;
    for (int k = 1;; ++k) {
        if (k > ctl.max_terms)
            throw ConvergenceFailure(ConvergenceFailure::Kind::SeriesTerms, "E1 series exceeded max_terms");
        term *= -z / static_cast<double>(k);
        const ComplexValue contrib = term / static_cast<double>(k);
        sum += contrib;
        if (std::abs(contrib) <= tol * std::abs(sum))
            break;
    }
    return -kEulerGamma - std::log(z) - sum;
}

} // namespace detail

ComplexValue upper_incomplete_gamma(double a, ComplexValue z, const SeriesControl& ctl)
{
    ctl.validate();
    if (!std::isfinite(a) || !std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("upper_incomplete_gamma: arguments must be finite");
    if (z == ComplexValue(0.0, 0.0)) {
        if (a > 0.0)
            return gamma_real(a);
        throw DomainError("upper_incomplete_gamma: z = 0 requires a > 0");
    }

    const bool on_negative_axis = z.imag() == 0.0 && z.real() < 0.0;
    if (std::abs(z) >= std::max(1.0, a + 1.0) && !on_negative_axis)
        return detail::incomplete_gamma_continued_fraction(a, z, ctl);
    if (a > 0.0)
        return detail::incomplete_gamma_series(a, z, ctl);

    // a <= 0: start from a point in (0, 1] (or from E1 when a is an
    // integer) and step down with Gamma(s, z) = (Gamma(s+1, z) - z^s e^{-z}) / s.
    const int steps = static_cast<int>(std::ceil(-a));
    double start = a + steps;
    ComplexValue value;
    if (start == 0.0) {
        value = detail::exponential_integral_e1(z, ctl);
    } else {
        value = detail::incomplete_gamma_series(start, z, ctl);
    }
    const ComplexValue log_z = std::log(z);
    const ComplexValue exp_mz = std::exp(-z);
    for (double s = start - 1.0; s >= a - 0.5; s -= 1.0)
        value = (value - std::exp(s * log_z) * exp_mz) / s;
    return value;
}

// ---------------------------------------------------------------------------
// Gauss 2F1

namespace detail {

double hyp2f1_direct(double a, double b, double c, double z, const SeriesControl& ctl)
{
    if (!(std::abs(z) < 1.0))
        throw DomainError("hyp2f1: direct series needs |z| < 1");
    const double tol = inner_tolerance(ctl);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0;; ++k) {
        if (k >= ctl.max_terms)
            throw ConvergenceFailure(ConvergenceFailure::Kind::SeriesTerms,
                                     "hyp2f1 series exceeded max_terms at z = " + std::to_string(z));
        const double ratio = (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        term *= ratio;
        sum += term;
        if (term == 0.0)
            break;
        const double r = std::abs(ratio);
        if (r < 1.0 && std::abs(term) * r / (1.0 - r) <= tol * std::abs(sum))
            break;
    }
    return sum;
}

double hyp2f1_pfaff(double a, double b, double c, double z, const SeriesControl& ctl)
{
    if (!(z < 1.0))
        throw DomainError("hyp2f1: Pfaff transformation needs z < 1");
    // 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)); the roles of a and
    // b are chosen so the transformed series has the smaller numerator.
    if (std::abs(c - a) < std::abs(c - b))
        std::swap(a, b);
    const double zt = z / (z - 1.0);
    return std::pow(1.0 - z, -a) * hyp2f1_direct(a, c - b, c, zt, ctl);
}

} // namespace detail

double hyp2f1(double a, double b, double c, double z, const SeriesControl& ctl)
{
    ctl.validate();
    if (is_nonpositive_integer(c))
        throw DomainError("hyp2f1: c must not be a non-positive integer");
    if (!(z < 1.0))
        throw DomainError("hyp2f1: argument must be below 1");
    if (z == 0.0)
        return 1.0;
    return z < -0.5 ? detail::hyp2f1_pfaff(a, b, c, z, ctl) : detail::hyp2f1_direct(a, b, c, z, ctl);
}

// ---------------------------------------------------------------------------
// 2F2(1/2, 1/2; 3/2, 3/2; ix) = sum_k (ix)^k / (k! (2k+1)^2)

ComplexValue hyp2f2_half(double x, const SeriesControl& ctl)
{
    ctl.validate();
    if (!std::isfinite(x))
        throw DomainError("hyp2f2_half: argument must be finite");
    const double tol = inner_tolerance(ctl);
    const ComplexValue ix(0.0, x);
    ComplexValue term = 1.0;
    ComplexValue sum = 1.0;
    double peak = 1.0;
    for (int k = 1;; ++k) {
        if (k > ctl.max_terms)
            throw ConvergenceFailure(ConvergenceFailure::Kind::SeriesTerms,
                                     "hyp2f2_half exceeded max_terms at |x| = " + std::to_string(std::abs(x)));
        term *= ix / static_cast<double>(k);
        const double denom = 2.0 * k + 1.0;
        const ComplexValue contrib = term / (denom * denom);
        sum += contrib;
        peak = std::max(peak, std::abs(contrib));
        if (k > std::abs(x) && std::abs(contrib) <= tol * std::abs(sum))
            break;
    }
    if (peak * kEps > ctl.rel_tol * std::abs(sum))
        throw ConvergenceFailure(ConvergenceFailure::Kind::SeriesTerms,
                                 "hyp2f2_half: terms reach " + std::to_string(peak) +
                                     ", cancellation exceeds the requested tolerance");
    return sum;
}

// ---------------------------------------------------------------------------
// Generalized sine and cosine integrals

namespace {

double generalized_trig_integral(double alpha, double z, bool sine, const SeriesControl& ctl)
{
    const char* name = sine ? "gen_si" : "gen_ci";
    if (!(alpha < 1.0))
        throw DomainError(std::string(name) + ": alpha must be below 1");
    if (!(z > 0.0) || !std::isfinite(z))
        throw DomainError(std::string(name) + ": z must be positive and finite");

    const double power = alpha - 1.0;
    auto f = [power, sine](double t) { return (sine ? std::sin(t) : std::cos(t)) * std::pow(t, power); };

    // Kernel zeros are (j + offset) pi; the first partial lobe runs from z to
    // the first zero beyond it.
    const double offset = sine ? 0.0 : 0.5;
    const double first = std::floor(z / kPi - offset) + 1.0;
    auto zero = [&](int k) { return (first + k + offset) * kPi; };

    quad::AdaptiveOptions opts;
    opts.rel_tol = std::max(1e-2 * ctl.rel_tol, 4.0 * kEps);
    opts.abs_tol = 0.0;
    auto lobe = [&](int k) {
        const double lo = k == 0 ? z : zero(k - 1);
        return quad::integrate_adaptive(f, lo, zero(k), opts);
    };
    return quad::sum_alternating_lobes(lobe, 0, ctl).value;
}

} // namespace

double gen_si(double alpha, double z, const SeriesControl& ctl)
{
    return generalized_trig_integral(alpha, z, true, ctl);
}

double gen_ci(double alpha, double z, const SeriesControl& ctl)
{
    return generalized_trig_integral(alpha, z, false, ctl);
}

} // namespace oscint::special
