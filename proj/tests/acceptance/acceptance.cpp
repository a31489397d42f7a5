// One line per acceptance criterion; exit status is nonzero if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "oscint/errata.hpp"
#include "oscint/half_power.hpp"
#include "oscint/lommel.hpp"
#include "oscint/oracle.hpp"
#include "oscint/radical_pole.hpp"
#include "oscint/special_functions.hpp"
#include "oscint/two_radical.hpp"

#ifndef OSCINT_CLI_PATH
#error "OSCINT_CLI_PATH must point at the oscint executable"
#endif
#ifndef OSCINT_SOURCE_DIR
#error "OSCINT_SOURCE_DIR must point at the source tree"
#endif

using namespace oscint;

namespace {

using Clock = std::chrono::steady_clock;

class Tally {
public:
    void close(double got, double want, double rel, double abs, const std::string& where)
    {
        const double tol = std::max(abs, rel * std::abs(want));
        const double dev = std::abs(got - want);
        ++points_;
        worst_ = std::max(worst_, tol > 0.0 ? dev / tol : (dev == 0.0 ? 0.0 : INFINITY));
        if (!(dev <= tol) && first_failure_.empty()) {
            std::ostringstream os;
            os.precision(17);
            os << where << ": got " << got << ", want " << want;
            first_failure_ = os.str();
        }
    }

    void require(bool ok, const std::string& where)
    {
        ++points_;
        if (!ok && first_failure_.empty())
            first_failure_ = where;
    }

    void note(const std::string& s) { notes_.push_back(s); }

    bool passed() const { return first_failure_.empty(); }
    int points() const { return points_; }
    double worst() const { return worst_; }
    const std::string& failure() const { return first_failure_; }
    const std::vector<std::string>& notes() const { return notes_; }

private:
    int points_ = 0;
    double worst_ = 0.0;
    std::string first_failure_;
    std::vector<std::string> notes_;
};

double hp_oracle(Kernel k, double alpha, double x, double zeta)
{
    return oracle::integrate_semi_infinite({oracle::HalfPower{alpha, x}, k, zeta}).value;
}

std::string label(std::initializer_list<std::pair<const char*, double>> kv)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : kv) {
        os << (first ? "" : ", ") << k << "=" << v;
        first = false;
    }
    return os.str();
}

// 1: s0, c0 vs oracle on x in {0.1,1,10} x zeta in {0.5,1,2}, max(1e-9 abs, 1e-8 rel), < 5 s.
void criterion1(Tally& t)
{
    const auto start = Clock::now();
    for (double x : {0.1, 1.0, 10.0})
        for (double zeta : {0.5, 1.0, 2.0}) {
            t.close(half_power::s0(x, zeta), hp_oracle(Kernel::Sin, 0.0, x, zeta), 1e-8, 1e-9,
                    "s0 at " + label({{"x", x}, {"zeta", zeta}}));
            t.close(half_power::c0(x, zeta), hp_oracle(Kernel::Cos, 0.0, x, zeta), 1e-8, 1e-9,
                    "c0 at " + label({{"x", x}, {"zeta", zeta}}));
        }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    t.require(seconds < 5.0, "runtime " + std::to_string(seconds) + " s exceeds 5 s");
    t.note("runtime " + std::to_string(seconds) + " s");
}

// 2: alpha in 1..5 vs oracle on x in {0.5,1,2}, zeta = 1; difference equation to 1e-10 rel.
void criterion2(Tally& t)
{
    for (int alpha = 1; alpha <= 5; ++alpha)
        for (double x : {0.5, 1.0, 2.0}) {
            const auto where = label({{"alpha", double(alpha)}, {"x", x}});
            t.close(half_power::s_alpha({1.0, x, alpha}), hp_oracle(Kernel::Sin, alpha, x, 1.0), 1e-8, 1e-9,
                    "S at " + where);
            t.close(half_power::c_alpha({1.0, x, alpha}), hp_oracle(Kernel::Cos, alpha, x, 1.0), 1e-8, 1e-9,
                    "C at " + where);
            const double k = alpha + 0.5;
            const double lhs =
                k * (k + 1.0) * half_power::s_alpha({1.0, x, alpha + 2}) + half_power::s_alpha({1.0, x, alpha});
            t.close(lhs, std::pow(x, -k), 1e-10, 0.0, "difference equation at " + where);
        }
}

// 3: by-parts pair (1e-10 rel) and scaling law (4 ulp).
void criterion3(Tally& t)
{
    for (int alpha = 0; alpha <= 5; ++alpha)
        for (double u : {0.5, 1.0, 2.0, 10.0}) {
            const double k = alpha + 0.5;
            const auto where = label({{"alpha", double(alpha)}, {"u", u}});
            t.close(half_power::s_alpha({1.0, u, alpha}),
                    std::pow(u, -k) - k * half_power::c_alpha({1.0, u, alpha + 1}), 1e-10, 0.0, "sin pair at " + where);
            t.close(half_power::c_alpha({1.0, u, alpha}), k * half_power::s_alpha({1.0, u, alpha + 1}), 1e-10, 0.0,
                    "cos pair at " + where);
        }
    const double ulp4 = 4.0 * std::numeric_limits<double>::epsilon();
    for (int alpha : {0, 1, 2, 3, 4, 5})
        for (double x : {0.3, 1.0, 2.5})
            for (double zeta : {0.5, 2.0, 3.0})
                for (Kernel k : {Kernel::Sin, Kernel::Cos})
                    t.close(half_power::transform(k, {zeta, x, alpha}),
                            std::pow(zeta, alpha - 0.5) * half_power::transform(k, {1.0, zeta * x, alpha}), ulp4, 0.0,
                            "scaling at " + label({{"alpha", double(alpha)}, {"x", x}, {"zeta", zeta}}));
}

struct QuadraticParts {
    oracle::QuadraticPhase::Denominator denominator;
    double (*tail_sin)(double);
    std::function<double(double)> tail_cos;
    double (*head_sin)(double, double, const SeriesControl&);
    double (*head_cos)(double, double, const SeriesControl&);
    double (*weight)(double);
};

void check_tails_and_heads(Tally& t, const QuadraticParts& p)
{
    for (double c : {0.5, 1.0, 2.0, 5.0, 50.0}) {
        const oracle::QuadraticPhase qp{p.denominator, 0.0};
        t.close(p.tail_sin(c), oracle::integrate_semi_infinite({qp, Kernel::Sin, c}).value, 1e-8, 0.0,
                "sin tail at " + label({{"c", c}}));
        t.close(p.tail_cos(c), oracle::integrate_semi_infinite({qp, Kernel::Cos, c}).value, 1e-8, 0.0,
                "cos tail at " + label({{"c", c}}));
    }
    for (double c : {0.5, 1.0, 2.0, 5.0})
        for (double g : {0.3, 0.5, 0.7, 1.0}) {
            const auto w = p.weight;
            const double qs =
                oracle::integrate_finite([&](double z) { return std::sin(c * z * z) * w(z); }, 0.0, g).value;
            const double qc =
                oracle::integrate_finite([&](double z) { return std::cos(c * z * z) * w(z); }, 0.0, g).value;
            t.close(p.head_sin(c, g, {}), qs, 0.0, 1e-10, "sin head at " + label({{"c", c}, {"gamma", g}}));
            t.close(p.head_cos(c, g, {}), qc, 0.0, 1e-10, "cos head at " + label({{"c", c}, {"gamma", g}}));
        }
}

template <class Transform, class Weight>
void check_full_grid(Tally& t, Transform transform, Weight weight)
{
    for (double a : {0.5, 1.0})
        for (double b : {1.5, 2.0, 4.0})
            for (double zeta : {0.5, 1.0, 2.0})
                for (Kernel k : {Kernel::Sin, Kernel::Cos})
                    t.close(transform(k, a, b, zeta),
                            oracle::integrate_semi_infinite({weight(a, b), k, zeta}).value, 1e-8, 0.0,
                            std::string(to_string(k)) + " transform at " + label({{"a", a}, {"b", b}, {"zeta", zeta}}));
}

// 4: two-radical tails, heads, assembled transforms.
void criterion4(Tally& t)
{
    check_tails_and_heads(t, {oracle::QuadraticPhase::Denominator::Radical, two_radical::tail_sin,
                              two_radical::tail_cos, two_radical::head_sin_series, two_radical::head_cos_series,
                              [](double z) { return 1.0 / std::sqrt(z * z + 1.0); }});
    check_full_grid(
        t,
        [](Kernel k, double a, double b, double zeta) {
            return two_radical::assemble(k, {a, b, zeta}, two_radical::HeadMethod::Series).value;
        },
        [](double a, double b) { return oracle::TwoRadical{a, b}; });
}

// 5: approximation error along c in {5,10,20,40} at gamma = 0.5.
void criterion5(Tally& t)
{
    struct Curve {
        const char* name;
        const char* errata_id;
        std::function<double(double)> approx;
        std::function<double(double)> reference;
    };
    const double g = 0.5;
    const std::vector<Curve> curves = {
        {"two-radical sin", "two-radical-sin-approx", [&](double c) { return two_radical::head_sin_approx(c, g); },
         [&](double c) { return two_radical::head_sin_series(c, g); }},
        {"two-radical cos (printed)", "two-radical-cos-approx",
         [&](double c) { return two_radical::head_cos_approx(c, g, Formula::AsPrinted); },
         [&](double c) { return two_radical::head_cos_series(c, g); }},
        {"two-radical cos (corrected)", "two-radical-cos-approx-monotonicity",
         [&](double c) { return two_radical::head_cos_approx(c, g); },
         [&](double c) { return two_radical::head_cos_series(c, g); }},
        {"radical-pole sin", "radical-pole-sin-approx",
         [&](double c) { return radical_pole::pole_head_approx(Kernel::Sin, c, g); },
         [&](double c) { return radical_pole::pole_head_sin_series(c, g); }},
        {"radical-pole cos", "radical-pole-cos-approx",
         [&](double c) { return radical_pole::pole_head_approx(Kernel::Cos, c, g); },
         [&](double c) { return radical_pole::pole_head_cos_series(c, g); }},
    };
    int documented = 0;
    for (const auto& curve : curves) {
        std::ostringstream os;
        os.precision(3);
        double previous = INFINITY;
        bool monotone = true;
        for (double c : {5.0, 10.0, 20.0, 40.0}) {
            const double ref = curve.reference(c);
            const double err = std::abs(curve.approx(c) - ref) / std::abs(ref);
            monotone = monotone && err <= previous;
            previous = err;
            os << (c == 5.0 ? "" : " ") << err;
        }
        const auto* entry = errata::find(curve.errata_id);
        const bool registry_ok = entry != nullptr && entry->monotone_in_c.value_or(monotone) == monotone;
        const bool is_printed_curve = std::string(curve.name).find("corrected") == std::string::npos;
        t.note(std::string(curve.name) + ": rel err " + os.str() + (monotone ? " (monotone)" : " (not monotone)"));
        if (monotone) {
            t.require(registry_ok || entry == nullptr, std::string(curve.name) + ": registry disagrees");
            continue;
        }
        // Escape clause: a non-monotone printed approximation must be documented.
        t.require(entry != nullptr && registry_ok && entry->status != errata::Status::Confirmed,
                  std::string(curve.name) + " is not monotone and not documented in the errata registry");
        if (is_printed_curve)
            ++documented;
    }
    // The printed two-radical cos approximation ships corrected, with the printed form kept separate.
    const auto* cos_entry = errata::find("two-radical-cos-approx");
    t.require(cos_entry && cos_entry->status == errata::Status::Corrected && cos_entry->as_printed_available,
              "corrected two-radical cos approximation is not separated from the printed form");
    t.require(two_radical::head_cos_approx(10.0, g) != two_radical::head_cos_approx(10.0, g, Formula::AsPrinted),
              "printed and corrected cos approximations coincide");
    t.note(std::to_string(documented) + " printed approximation(s) pass through the errata clause");
}

// 6: radical-pole assembled transforms and errata for the cos tail and sin series.
void criterion6(Tally& t)
{
    check_tails_and_heads(t, {oracle::QuadraticPhase::Denominator::Pole, radical_pole::pole_tail_sin,
                              [](double c) { return radical_pole::pole_tail_cos(c); }, radical_pole::pole_head_sin_series,
                              radical_pole::pole_head_cos_series, [](double z) { return 1.0 / (z * z + 1.0); }});
    check_full_grid(
        t,
        [](Kernel k, double a, double b, double zeta) {
            return radical_pole::assemble(k, {a, b, zeta}, radical_pole::HeadMethod::Series).value;
        },
        [](double a, double b) { return oracle::RadicalPole{a, b}; });
    const auto* tail = errata::find("radical-pole-cos-tail");
    const auto* series = errata::find("radical-pole-sin-series");
    t.require(tail && tail->status == errata::Status::Corrected && tail->as_printed_available,
              "cos tail correction is not registered");
    t.require(series && series->status == errata::Status::Confirmed, "sin series check is not registered");
    const oracle::QuadraticPhase qp{oracle::QuadraticPhase::Denominator::Pole, 0.0};
    const double truth = oracle::integrate_semi_infinite({qp, Kernel::Cos, 2.0}).value;
    t.require(std::abs(radical_pole::pole_tail_cos(2.0, Formula::AsPrinted) - truth) > 1e-3 * truth,
              "printed cos tail unexpectedly matches the oracle");
    const auto doc = std::filesystem::path(OSCINT_SOURCE_DIR) / "docs" / "ERRATA.md";
    t.require(std::filesystem::exists(doc), "docs/ERRATA.md is missing");
}

// 7: Lommel recurrence, three-way agreement, logarithmic integral.
void criterion7(Tally& t)
{
    for (double mu : {-2.5, -1.5, -0.5, 0.0})
        for (double z : {0.5, 1.0, 2.0, 5.0}) {
            // Residual relative to the largest term; the right side vanishes at mu = -1.5, -0.5.
            const double power = std::pow(z, mu + 1.5);
            const double shifted = lommel::sqrt_z_lommel(mu + 2.0, z);
            const double rhs = ((mu + 1.0) * (mu + 1.0) - 0.25) * lommel::sqrt_z_lommel(mu, z);
            const double scale = std::max({std::abs(power), std::abs(shifted), std::abs(rhs)});
            t.close(power - shifted, rhs, 0.0, 1e-9 * scale, "recurrence at " + label({{"mu", mu}, {"z", z}}));
        }
    for (int n : {0, 1})
        for (int m : {1, 2, 3})
            for (bool plus : {false, true})
                for (double x : {0.5, 1.0, 2.0})
                    for (double zeta : {0.5, 1.0})
                        for (Kernel k : {Kernel::Sin, Kernel::Cos}) {
                            const lommel::GeneralExponent g{n, m};
                            const double p = g.exponent(plus);
                            const double via_gamma = lommel::power_transform(k, p, x, zeta);
                            const double via_sici = lommel::si_ci_representation(g, plus, x, zeta, k);
                            const double ref = hp_oracle(k, p - 0.5, x, zeta);
                            const auto where = std::string(to_string(k)) + " at " +
                                               label({{"p", p}, {"x", x}, {"zeta", zeta}});
                            t.close(via_gamma, ref, 1e-8, 0.0, "incomplete gamma vs oracle, " + where);
                            t.close(via_sici, ref, 1e-8, 0.0, "si/ci vs oracle, " + where);
                            t.close(via_sici, via_gamma, 1e-8, 0.0, "si/ci vs incomplete gamma, " + where);
                        }
    for (double x : {0.5, 1.0, 2.0}) {
        const double closed = lommel::log_weighted_sin_integral(x);
        const double ref = oracle::integrate_semi_infinite({oracle::LogHalfPower{x}, Kernel::Sin, 1.0}).value;
        t.close(closed, ref, 0.0, 1e-5, "log integral vs oracle at " + label({{"x", x}}));
        t.close(closed, -lommel::alpha_derivative_fd(x, 1e-4), 0.0, 1e-5,
                "log integral vs finite difference at " + label({{"x", x}}));
    }
}

// 8: special functions.
void criterion8(Tally& t)
{
    using namespace special;
    const double h = 1e-5;
    for (double z = 0.0; z <= 5.0; z += 0.05) {
        t.close((fresnel_s(z + h) - fresnel_s(z - h)) / (2 * h), std::sin(0.5 * kPi * z * z), 0.0, 1e-8,
                "S' at " + label({{"z", z}}));
        t.close((fresnel_c(z + h) - fresnel_c(z - h)) / (2 * h), std::cos(0.5 * kPi * z * z), 0.0, 1e-8,
                "C' at " + label({{"z", z}}));
    }
    for (double x : {-3.5, -2.5, -1.5, -0.5, 0.3, 1.7, 4.2, 9.5})
        t.close(gamma_real(x + 1.0), x * gamma_real(x), 1e-10, 0.0, "Gamma recurrence at " + label({{"x", x}}));
    for (double a : {-1.5, -0.5, 0.5, 1.5})
        for (double y : {0.5, 1.0, 5.0})
            for (double s : {-1.0, 1.0}) {
                const ComplexValue z{0.0, s * y};
                const ComplexValue lhs = upper_incomplete_gamma(a + 1.0, z);
                const ComplexValue rhs = a * upper_incomplete_gamma(a, z) + std::pow(z, a) * std::exp(-z);
                t.close(std::abs(lhs - rhs), 0.0, 0.0, 1e-10 * std::abs(lhs),
                        "incomplete Gamma recurrence at " + label({{"a", a}, {"Im z", z.imag()}}));
            }
    t.close(hyp2f1(0.5, 0.5, 1.5, -1.0), std::log(1.0 + std::sqrt(2.0)), 1e-11, 0.0, "2F1 = ln(1+sqrt 2)");
    t.close(hyp2f1(0.5, 1.0, 1.5, -1.0), 0.25 * kPi, 1e-11, 0.0, "2F1 = pi/4");
    t.close(bessel_j0(2.404825557695773), 0.0, 0.0, 1e-9, "J0 first zero");
}

// 9: halving internal tolerances moves no golden by more than its error estimate.
void criterion9(Tally& t)
{
    std::vector<oracle::IntegrandSpec> specs;
    for (double x : {0.1, 1.0, 10.0})
        for (double zeta : {0.5, 1.0, 2.0})
            for (Kernel k : {Kernel::Sin, Kernel::Cos})
                specs.push_back({oracle::HalfPower{0.0, x}, k, zeta});
    for (int alpha = 1; alpha <= 5; ++alpha)
        specs.push_back({oracle::HalfPower{double(alpha), 1.0}, Kernel::Cos, 1.0});
    for (double a : {0.5, 1.0})
        for (double b : {1.5, 4.0}) {
            specs.push_back({oracle::TwoRadical{a, b}, Kernel::Sin, 1.0});
            specs.push_back({oracle::RadicalPole{a, b}, Kernel::Cos, 2.0});
        }
    for (double c : {0.5, 5.0, 50.0})
        specs.push_back({oracle::QuadraticPhase{oracle::QuadraticPhase::Denominator::Pole, 0.0}, Kernel::Cos, c});
    specs.push_back({oracle::ThreeRadical{0.5, 1.0, 2.0}, Kernel::Sin, 1.0});
    specs.push_back({oracle::HalfPower{0.0, 0.0}, Kernel::Sin, 1.0});
    for (double x : {0.5, 1.0, 2.0})
        specs.push_back({oracle::LogHalfPower{x}, Kernel::Sin, 1.0});

    SeriesControl half;
    half.rel_tol = 0.5 * SeriesControl{}.rel_tol;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const auto base = oracle::integrate_semi_infinite(specs[i]);
        const auto fine = oracle::integrate_semi_infinite(specs[i], half);
        t.close(fine.value, base.value, 0.0, base.abs_err_est, "golden #" + std::to_string(i));
    }
}

// 10: CLI selfcheck exits 0 in under 60 s.
void criterion10(Tally& t)
{
    const auto start = Clock::now();
    const std::string cmd = std::string("\"") + OSCINT_CLI_PATH + "\" selfcheck > /dev/null";
    const int status = std::system(cmd.c_str());
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    t.require(status == 0, "selfcheck exited with status " + std::to_string(status));
    t.require(seconds < 60.0, "selfcheck took " + std::to_string(seconds) + " s");
    t.note("selfcheck " + std::to_string(seconds) + " s");
}

} // namespace

int main()
{
    const std::array<std::pair<const char*, void (*)(Tally&)>, 10> criteria = {{
        {"base closed forms vs oracle", criterion1},
        {"integer families and difference equation", criterion2},
        {"by-parts pair and scaling law", criterion3},
        {"two-radical tails, heads and transforms", criterion4},
        {"head approximations improve with c", criterion5},
        {"radical-pole transforms and errata", criterion6},
        {"Lommel recurrence, three-way agreement, log integral", criterion7},
        {"special-function identities", criterion8},
        {"oracle robustness under tolerance halving", criterion9},
        {"CLI selfcheck", criterion10},
    }};
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Tally t;
        try {
            criteria[i].second(t);
        } catch (const std::exception& e) {
            t.require(false, std::string("exception: ") + e.what());
        }
        all = all && t.passed();
        std::printf("criterion %2zu: %s  %s (%d points, worst deviation/tolerance %.3g)\n", i + 1,
                    t.passed() ? "PASS" : "FAIL", criteria[i].first, t.points(), t.worst());
        for (const auto& n : t.notes())
            std::printf("               %s\n", n.c_str());
        if (!t.passed())
            std::printf("               first failure: %s\n", t.failure().c_str());
    }
    return all ? 0 : 1;
}
