#include "oscint/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "oscint/errors.hpp"

namespace oscint::quad {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// QUADPACK qk15 abscissae and weights; xgk[1], xgk[3], xgk[5] are the
// 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double lo;
    double hi;
    Estimate est;
    bool operator<(const Panel& other) const { return est.abs_err < other.est.abs_err; }
};

} // namespace

Estimate gauss_kronrod15(const Integrand& f, double lo, double hi)
{
    const double centre = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double abs_half = std::abs(half);

    const double fc = f(centre);
    double res_g = fc * kWg[3];
    double res_k = fc * kWgk[7];
    double res_abs = std::abs(res_k);
    std::array<double, 7> fv1{};
    std::array<double, 7> fv2{};

    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(centre - dx);
        const double f2 = f(centre + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += kWgk[j] * (f1 + f2);
        res_abs += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1)
            res_g += kWg[j / 2] * (f1 + f2);
    }

    const double mean = 0.5 * res_k;
    double res_asc = kWgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j)
        res_asc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));

    Estimate out;
    out.value = res_k * half;
    res_abs *= abs_half;
    res_asc *= abs_half;
    double err = std::abs((res_k - res_g) * half);
    if (res_asc != 0.0 && err != 0.0)
        err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
    if (res_abs > std::numeric_limits<double>::min() / (50.0 * kEps))
        err = std::max(50.0 * kEps * res_abs, err);
    out.abs_err = err;
    out.abs_mass = res_abs;
    return out;
}

Estimate integrate_adaptive(const Integrand& f, double lo, double hi, const AdaptiveOptions& opts)
{
    if (lo == hi)
        return {};

    std::priority_queue<Panel> panels;
    Estimate first = gauss_kronrod15(f, lo, hi);
    panels.push({lo, hi, first});
    Estimate total = first;

    // Below 100 eps of the absolute mass the estimate is roundoff-dominated.
    auto tolerance = [&](const Estimate& e) {
        return std::max({opts.abs_tol, opts.rel_tol * std::abs(e.value), 100.0 * kEps * e.abs_mass});
    };

    int subdivisions = 1;
    while (total.abs_err > tolerance(total)) {
        if (subdivisions >= opts.max_subdivisions) {
            throw ConvergenceFailure(ConvergenceFailure::Kind::MaxSubdivisions,
                                     "adaptive quadrature on [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                         "] exceeded " + std::to_string(opts.max_subdivisions) +
                                         " subdivisions (error estimate " + std::to_string(total.abs_err) + ")");
        }
        Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) {
            // Panel at machine resolution; its error cannot shrink further.
            panels.push(worst);
            break;
        }
        Panel left{worst.lo, mid, gauss_kronrod15(f, worst.lo, mid)};
        Panel right{mid, worst.hi, gauss_kronrod15(f, mid, worst.hi)};
        total.value += left.est.value + right.est.value - worst.est.value;
        total.abs_err += left.est.abs_err + right.est.abs_err - worst.est.abs_err;
        total.abs_mass += left.est.abs_mass + right.est.abs_mass - worst.est.abs_mass;
        panels.push(left);
        panels.push(right);
        ++subdivisions;
    }

    // Re-sum to shed the drift of the incremental updates.
    Estimate exact;
    while (!panels.empty()) {
        exact.value += panels.top().est.value;
        exact.abs_err += panels.top().est.abs_err;
        exact.abs_mass += panels.top().est.abs_mass;
        panels.pop();
    }
    return exact;
}

LobeSum sum_alternating_lobes(const std::function<Estimate(int)>& lobe, int direct_lobes, const SeriesControl& ctl)
{
    ctl.validate();
    constexpr int kMinAccelerated = 8;
    constexpr std::size_t kEulerWindow = 64;
    const int max_lobes = 10 * ctl.max_terms + direct_lobes;

    LobeSum out;
    double direct = 0.0;
    double lobe_err = 0.0;
    double lobe_abs = 0.0;
    for (int k = 0; k < direct_lobes; ++k) {
        Estimate e = lobe(k);
        direct += e.value;
        lobe_err += e.abs_err;
        lobe_abs += std::abs(e.value);
    }

    std::vector<double> partial;
    std::vector<double> table;
    double running = 0.0;
    double previous = 0.0;
    int calm_steps = 0;

    for (int k = direct_lobes; k < max_lobes; ++k) {
        Estimate e = lobe(k);
        running += e.value;
        lobe_err += e.abs_err;
        lobe_abs += std::abs(e.value);
        partial.push_back(running);

        // Euler transform: binomial average of the most recent partial sums.
        const std::size_t window = std::min<std::size_t>(partial.size(), kEulerWindow);
        table.assign(partial.end() - static_cast<std::ptrdiff_t>(window), partial.end());
        for (std::size_t level = 1; level < table.size(); ++level)
            for (std::size_t i = 0; i + level < table.size(); ++i)
                table[i] = 0.5 * (table[i] + table[i + 1]);
        const double estimate = direct + table.front();

        const int count = static_cast<int>(partial.size());
        if (count > 1) {
            const double change = std::abs(estimate - previous);
            const double floor = 64.0 * kEps * lobe_abs;
            if (count >= kMinAccelerated && change <= std::max(ctl.rel_tol * std::abs(estimate), floor)) {
                if (++calm_steps >= 2) {
                    out.value = estimate;
                    out.abs_err = 2.0 * change + lobe_err + floor;
                    out.lobes = k + 1;
                    out.accelerated = true;
                    return out;
                }
            } else {
                calm_steps = 0;
            }
        }
        previous = estimate;
    }
    throw ConvergenceFailure(ConvergenceFailure::Kind::AccelerationStalled,
                             "Euler-accelerated lobe sum did not settle within " + std::to_string(max_lobes) +
                                 " lobes");
}

} // namespace oscint::quad
