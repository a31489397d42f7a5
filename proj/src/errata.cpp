#include "oscint/errata.hpp"

#include <algorithm>
#include <array>

namespace oscint::errata {

namespace {

constexpr std::array kEntries = {
    Entry{"half-power-odd-sin-sign", "half-power",
          "S_{2n+1}: F_{2n+1} carries the sign (-1)^n",
          "F_{2n+1} carries (-1)^{n+1}",
          "the printed sign breaks the family's own recurrence and disagrees with quadrature from alpha = 3 on",
          Status::Corrected, true, std::nullopt},
    Entry{"half-power-odd-cos-sign", "half-power",
          "C_{2n+1}: leading u^{-1/2} term carries (-1)^{n+1}",
          "leading term carries (-1)^n",
          "the printed sign contradicts the seed value 2/sqrt(u) at n = 0 and the quadrature values",
          Status::Corrected, true, std::nullopt},
    Entry{"half-power-even-hat-recurrence", "half-power",
          "recurrence right-hand side (8n+2)/u^{2n+1/2}",
          "(8n+2)/u^{2n+3/2}",
          "follows from the cosine difference equation; the closed coefficients are unaffected",
          Status::Corrected, false, std::nullopt},
    Entry{"two-radical-cos-approx", "two-radical",
          "cos head approximation with prefactor (gamma/c) sin(c gamma^2)",
          "prefactor (gamma/(4c)) sin(c gamma^2), mirroring the sine approximation",
          "leading-order expansion of 1/sqrt(1+z^2); printed form is off by about 10 percent at gamma = 0.5",
          Status::Corrected, true, false},
    Entry{"two-radical-sin-approx", "two-radical",
          "sin head approximation with prefactor (gamma/(4c)) cos(c gamma^2)",
          "as printed",
          "relative error decreases with c",
          Status::Confirmed, false, true},
    Entry{"radical-pole-cos-tail", "radical-pole",
          "cos tail with a trailing +sqrt(2 pi/c) term and an unbalanced bracket",
          "(pi/2){cos c [1 - S(w) - C(w)] - sin c [S(w) - C(w)]}, w = sqrt(2c/pi)",
          "printed form diverges as c -> 0 while the integral stays below pi/2; shipped form matches quadrature",
          Status::Corrected, true, std::nullopt},
    Entry{"radical-pole-sin-series", "radical-pole",
          "sin head series with denominator (2k+1)!(4k+1) and a {1 - 2F1} factor",
          "as printed",
          "agrees with finite quadrature; the structure comes from x^2/(1+x^2) = 1 - 1/(1+x^2)",
          Status::Confirmed, false, std::nullopt},
    Entry{"radical-pole-sin-approx", "radical-pole",
          "leading-order sin head approximation",
          "as printed",
          "relative error decreases with c",
          Status::Confirmed, false, true},
    Entry{"radical-pole-cos-approx", "radical-pole",
          "leading-order cos head approximation",
          "as printed",
          "correct to leading order, but the neglected next term oscillates with c gamma^2, so the error is not monotone in c",
          Status::DocumentedLimitation, false, false},
    Entry{"two-radical-cos-approx-monotonicity", "two-radical",
          "cos head approximation (either prefactor)",
          "gamma/(4c) form",
          "the corrected form is 5 to 50 times more accurate than the printed one but, like every leading-order "
          "cos head, its error oscillates with c gamma^2",
          Status::DocumentedLimitation, false, false},
    Entry{"lommel-incomplete-gamma-order", "lommel",
          "sqrt(x) S_{1/2-alpha,1/2}(x) via Gamma(-alpha, +-ix)",
          "Gamma(1 - alpha, +-ix)",
          "the printed order fails against quadrature for every tested alpha; the shifted order matches to 1e-14",
          Status::Corrected, true, std::nullopt},
    Entry{"lommel-sici-sin-argument", "lommel",
          "sin-form second term sin(x) ci(.)",
          "sin(zeta x) ci(.)",
          "the printed form is only right at zeta = 1",
          Status::Corrected, true, std::nullopt},
    Entry{"lommel-log-derivative-sign", "lommel",
          "closed form with 2F2(1/2,1/2;3/2,3/2;ix)",
          "as printed; it equals the alpha-derivative, and the log-weighted integral is its negative",
          "checked against quadrature of ln(t+x) sin t/sqrt(t+x) at x = 0.5, 1, 2",
          Status::Confirmed, false, std::nullopt},
};

} // namespace

std::span<const Entry> registry() { return kEntries; }

const Entry* find(std::string_view id)
{
    const auto it = std::find_if(kEntries.begin(), kEntries.end(), [&](const Entry& e) { return e.id == id; });
    return it == kEntries.end() ? nullptr : &*it;
}

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::Corrected:
        return "corrected";
    case Status::Confirmed:
        return "confirmed";
    case Status::DocumentedLimitation:
        return "documented-limitation";
    }
    return "unknown";
}

} // namespace oscint::errata
