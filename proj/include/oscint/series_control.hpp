#pragma once

#include <complex>

namespace oscint {

/// Complex value used by the incomplete gamma and 2F2 backends.
using ComplexValue = std::complex<double>;

/// Truncation policy shared by every infinite series, continued fraction and
/// accelerated lobe sum in the library.
struct SeriesControl {
    double rel_tol = 1e-12;
    int max_terms = 500;

    /// Throws DomainError unless rel_tol > 0 and max_terms >= 1.
    void validate() const;

    /// Defaults, with rel_tol taken from OSCINT_REL_TOL when that variable is
    /// set to a positive number.
    static SeriesControl from_environment();
};

/// Selects between the quadrature-verified form of a reference formula and
/// its literal printed form (see docs/ERRATA.md).
enum class Formula { Verified, AsPrinted };

} // namespace oscint
