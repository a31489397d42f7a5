#pragma once

#include <vector>

#include "oscint/kernel.hpp"
#include "oscint/series_control.hpp"

/// Closed forms for
///
///     S_alpha(x, zeta) = int_0^inf sin(zeta t) / (t + x)^(alpha + 1/2) dt
///     C_alpha(x, zeta) = int_0^inf cos(zeta t) / (t + x)^(alpha + 1/2) dt
///
/// for integer alpha >= 0. Each member of the family is a finite sum of
/// inverse half-integer powers of u = zeta x plus a multiple of one of two
/// Fresnel brackets. Evaluation always happens in the scaled variable u and
/// is then multiplied by zeta^(alpha - 1/2).
namespace oscint::half_power {

struct HalfPowerParams {
    double zeta = 1.0;
    double x = 0.0;
    int alpha = 0;
};

/// Which Fresnel combination multiplies the constant coefficient.
enum class PhasePattern {
    /// cos u {1 - 2S(w)} - sin u {1 - 2C(w)}
    SinLike,
    /// cos u {1 - 2C(w)} + sin u {1 - 2S(w)}
    CosLike,
};

/// coeff * u^-power
struct PowerTerm {
    double power = 0.0;
    double coeff = 0.0;
};

struct FamilyCoefficients {
    std::vector<PowerTerm> rational_part;
    double fresnel_coeff = 0.0;
    PhasePattern phase_pattern = PhasePattern::SinLike;

    double rational(double u) const;
};

/// Below this u the Fresnel brackets are summed directly as power series in u.
inline constexpr double kSmallArgument = 1e-3;

/// Fresnel bracket with w = sqrt(2u/pi).
double bracket(PhasePattern pattern, double u);

/// Coefficients of the alpha-th member for the given kernel. The Verified
/// form is checked against one step of its recurrence before returning.
FamilyCoefficients family_coefficients(int alpha, Kernel kernel, Formula formula = Formula::Verified);

double s0(double x, double zeta);
double c0(double x, double zeta);

double s_alpha(const HalfPowerParams& p, Formula formula = Formula::Verified);
double c_alpha(const HalfPowerParams& p, Formula formula = Formula::Verified);
double transform(Kernel kernel, const HalfPowerParams& p, Formula formula = Formula::Verified);

/// Throws DomainError / DivergentIntegral when p is not a valid request.
void validate(Kernel kernel, const HalfPowerParams& p);

} // namespace oscint::half_power
