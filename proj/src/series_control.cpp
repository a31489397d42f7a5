#include "oscint/series_control.hpp"

#include <cmath>
#include <cstdlib>

#include "oscint/errors.hpp"

namespace oscint {

void SeriesControl::validate() const
{
    if (!(rel_tol > 0.0) || !std::isfinite(rel_tol))
        throw DomainError("SeriesControl: rel_tol must be a positive finite number");
    if (max_terms < 1)
        throw DomainError("SeriesControl: max_terms must be at least 1");
}

SeriesControl SeriesControl::from_environment()
{
    SeriesControl ctl;
    if (const char* env = std::getenv("OSCINT_REL_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0.0 && std::isfinite(v))
            ctl.rel_tol = v;
    }
    return ctl;
}

} // namespace oscint
