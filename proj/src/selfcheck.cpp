#include "oscint/selfcheck.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "oscint/errata.hpp"
#include "oscint/errors.hpp"
#include "oscint/half_power.hpp"
#include "oscint/lommel.hpp"
#include "oscint/oracle.hpp"
#include "oscint/radical_pole.hpp"
#include "oscint/special_functions.hpp"
#include "oscint/two_radical.hpp"

namespace oscint::selfcheck {

namespace {

using special::kPi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

class Check {
public:
    explicit Check(std::string name) { result_.name = std::move(name); }

    /// |got - want| <= max(abs_tol, rel_tol |want|)
    void close(double got, double want, double rel_tol, double abs_tol, const std::string& where)
    {
        const double tol = std::max(abs_tol, rel_tol * std::abs(want));
        const double dev = std::abs(got - want);
        const double ratio = tol > 0.0 ? dev / tol : (dev == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
        record(std::isfinite(got) && ratio <= 1.0, ratio, [&] {
            std::ostringstream os;
            os.precision(17);
            os << where << ": got " << got << ", expected " << want << " (tolerance " << tol << ")";
            return os.str();
        });
    }

    void require(bool ok, const std::string& where)
    {
        record(ok, ok ? 0.0 : std::numeric_limits<double>::infinity(), [&] { return where; });
    }

    void fail(const std::string& why) { require(false, why); }

    CheckResult finish() { return result_; }

private:
    template <class Describe>
    void record(bool ok, double ratio, Describe describe)
    {
        ++result_.points;
        result_.worst_ratio = std::max(result_.worst_ratio, ratio);
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.detail = describe();
        }
    }

    CheckResult result_;
};

std::string fmt(double v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string at(std::initializer_list<std::pair<const char*, double>> kv)
{
    std::string s;
    for (const auto& [k, v] : kv) {
        if (!s.empty())
            s += ", ";
        s += std::string(k) + "=" + fmt(v);
    }
    return s;
}

using Body = std::function<void(Check&, const SeriesControl&)>;

struct NamedCheck {
    const char* name;
    Body body;
};

CheckResult run_check(const NamedCheck& nc, const SeriesControl& ctl)
{
    Check c(nc.name);
    try {
        nc.body(c, ctl);
    } catch (const std::exception& e) {
        c.fail(std::string("exception: ") + e.what());
    }
    return c.finish();
}

double oracle_value(const oracle::IntegrandSpec& spec, const SeriesControl& ctl)
{
    return oracle::integrate_semi_infinite(spec, ctl).value;
}

double hp_oracle(Kernel k, double alpha, double x, double zeta, const SeriesControl& ctl)
{
    return oracle_value({oracle::HalfPower{alpha, x}, k, zeta}, ctl);
}

// --------------------------------------------------------------------------

std::vector<NamedCheck> special_function_checks()
{
    return {
        {"fresnel-derivative",
         [](Check& c, const SeriesControl&) {
             const double h = 1e-5;
             for (int i = 0; i <= 20; ++i) {
                 const double z = 0.25 * i;
                 const double ds = (special::fresnel_s(z + h) - special::fresnel_s(z - h)) / (2 * h);
                 const double dc = (special::fresnel_c(z + h) - special::fresnel_c(z - h)) / (2 * h);
                 c.close(ds, std::sin(0.5 * kPi * z * z), 0.0, 1e-8, "S' at " + at({{"z", z}}));
                 c.close(dc, std::cos(0.5 * kPi * z * z), 0.0, 1e-8, "C' at " + at({{"z", z}}));
             }
         }},
        {"fresnel-branch-agreement",
         [](Check& c, const SeriesControl&) {
             const auto s = special::detail::fresnel_series(special::kFresnelSeriesLimit);
             const auto f = special::detail::fresnel_continued_fraction(special::kFresnelSeriesLimit);
             c.close(f.s, s.s, 0.0, 1e-12, "S at the switch point");
             c.close(f.c, s.c, 0.0, 1e-12, "C at the switch point");
         }},
        {"bessel-branch-agreement",
         [](Check& c, const SeriesControl&) {
             const double z = special::kBesselSeriesLimit;
             c.close(special::detail::bessel_j0_asymptotic(z), special::detail::bessel_j0_series(z), 0.0, 1e-12,
                     "J0 at the switch point");
             c.close(special::detail::bessel_y0_asymptotic(z), special::detail::bessel_y0_series(z), 0.0, 1e-12,
                     "Y0 at the switch point");
         }},
        {"j0-first-zero",
         [](Check& c, const SeriesControl&) {
             c.close(special::bessel_j0(2.404825557695773), 0.0, 0.0, 1e-9, "J0 at its first zero");
         }},
        {"gamma-recurrence",
         [](Check& c, const SeriesControl&) {
             for (double x : {-2.5, -1.5, -0.5, 0.3, 1.7, 4.2, 9.5})
                 c.close(special::gamma_real(x + 1.0), x * special::gamma_real(x), 1e-10, 0.0,
                         "Gamma(x+1) = x Gamma(x) at " + at({{"x", x}}));
         }},
        {"incomplete-gamma-recurrence",
         [](Check& c, const SeriesControl& ctl) {
             for (double a : {-1.5, -0.5, 0.5, 1.5})
                 for (double y : {0.5, 1.0, 5.0})
                     for (double sign : {-1.0, 1.0}) {
                         const ComplexValue z{0.0, sign * y};
                         const ComplexValue lhs = special::upper_incomplete_gamma(a + 1.0, z, ctl);
                         const ComplexValue rhs =
                             a * special::upper_incomplete_gamma(a, z, ctl) + std::pow(z, a) * std::exp(-z);
                         c.close(std::abs(lhs - rhs), 0.0, 0.0, 1e-10 * std::abs(lhs),
                                 "Gamma(a+1,z) = a Gamma(a,z) + z^a e^-z at " + at({{"a", a}, {"Im z", z.imag()}}));
                     }
         }},
        {"incomplete-gamma-conjugate",
         [](Check& c, const SeriesControl& ctl) {
             for (double a : {-1.5, -0.5, 0.5, 1.5})
                 for (double y : {0.5, 1.0, 5.0}) {
                     const ComplexValue up = special::upper_incomplete_gamma(a, {0.0, y}, ctl);
                     const ComplexValue down = special::upper_incomplete_gamma(a, {0.0, -y}, ctl);
                     c.close(std::abs(down - std::conj(up)), 0.0, 0.0, 1e-10 * std::abs(up),
                             "conjugate symmetry at " + at({{"a", a}, {"y", y}}));
                 }
         }},
        {"hyp2f1-known-values",
         [](Check& c, const SeriesControl& ctl) {
             c.close(special::hyp2f1(0.5, 0.5, 1.5, -1.0, ctl), std::log(1.0 + std::sqrt(2.0)), 1e-11, 0.0,
                     "2F1(1/2,1/2;3/2;-1)");
             c.close(special::hyp2f1(0.5, 1.0, 1.5, -1.0, ctl), 0.25 * kPi, 1e-11, 0.0, "2F1(1/2,1;3/2;-1)");
         }},
        {"hyp2f1-pfaff",
         [](Check& c, const SeriesControl& ctl) {
             for (auto [a, b, cc] : {std::array{0.5, 0.5, 1.5}, std::array{1.0, 2.25, 3.25}, std::array{0.5, 4.5, 5.5}})
                 c.close(special::detail::hyp2f1_pfaff(a, b, cc, -0.9, ctl),
                         special::detail::hyp2f1_direct(a, b, cc, -0.9, ctl), 1e-11, 0.0,
                         "Pfaff vs direct at " + at({{"a", a}, {"b", b}, {"c", cc}}));
         }},
        {"gen-si-additivity",
         [](Check& c, const SeriesControl& ctl) {
             for (double alpha : {-0.5, 0.0, 0.5})
                 for (auto [z, z2] : {std::pair{1.0, 3.0}, std::pair{0.5, 4.0}}) {
                     const auto piece = oracle::integrate_finite(
                         [alpha](double t) { return std::sin(t) * std::pow(t, alpha - 1.0); }, z, z2, ctl);
                     c.close(special::gen_si(alpha, z, ctl), special::gen_si(alpha, z2, ctl) + piece.value, 0.0,
                             1e-9, "si additivity at " + at({{"alpha", alpha}, {"z", z}, {"z'", z2}}));
                     const auto piece_c = oracle::integrate_finite(
                         [alpha](double t) { return std::cos(t) * std::pow(t, alpha - 1.0); }, z, z2, ctl);
                     c.close(special::gen_ci(alpha, z, ctl), special::gen_ci(alpha, z2, ctl) + piece_c.value, 0.0,
                             1e-9, "ci additivity at " + at({{"alpha", alpha}, {"z", z}, {"z'", z2}}));
                 }
         }},
    };
}

std::vector<NamedCheck> oracle_checks()
{
    return {
        {"integration-by-parts",
         [](Check& c, const SeriesControl& ctl) {
             for (int alpha : {0, 1, 2})
                 for (double x : {0.5, 1.0, 2.0}) {
                     const double k = alpha + 0.5;
                     const double s = hp_oracle(Kernel::Sin, alpha, x, 1.0, ctl);
                     const double cc = hp_oracle(Kernel::Cos, alpha, x, 1.0, ctl);
                     const double s1 = hp_oracle(Kernel::Sin, alpha + 1, x, 1.0, ctl);
                     const double c1 = hp_oracle(Kernel::Cos, alpha + 1, x, 1.0, ctl);
                     const auto where = at({{"alpha", alpha}, {"x", x}});
                     c.close(s, std::pow(x, -k) - k * c1, 1e-8, 0.0, "sin by parts at " + where);
                     c.close(cc, k * s1, 1e-8, 0.0, "cos by parts at " + where);
                 }
         }},
        {"tolerance-halving",
         [](Check& c, const SeriesControl& ctl) {
             const std::vector<oracle::IntegrandSpec> specs = {
                 {oracle::HalfPower{0.0, 1.0}, Kernel::Sin, 1.0},
                 {oracle::HalfPower{0.0, 1.0}, Kernel::Cos, 1.0},
                 {oracle::HalfPower{3.0, 0.5}, Kernel::Cos, 1.0},
                 {oracle::HalfPower{0.0, 0.0}, Kernel::Sin, 1.0},
                 {oracle::TwoRadical{1.0, 2.0}, Kernel::Sin, 1.0},
                 {oracle::RadicalPole{1.0, 2.0}, Kernel::Cos, 1.0},
                 {oracle::ThreeRadical{0.5, 1.0, 2.0}, Kernel::Sin, 1.0},
                 {oracle::LogHalfPower{1.0}, Kernel::Sin, 1.0},
                 {oracle::HalfPower{7.0 / 3.0 - 0.5, 0.5}, Kernel::Sin, 1.0},
             };
             SeriesControl tight = ctl;
             tight.rel_tol = 0.5 * ctl.rel_tol;
             for (std::size_t i = 0; i < specs.size(); ++i) {
                 const auto base = oracle::integrate_semi_infinite(specs[i], ctl);
                 const auto fine = oracle::integrate_semi_infinite(specs[i], tight);
                 c.close(fine.value, base.value, 0.0, base.abs_err_est, "spec #" + std::to_string(i));
             }
         }},
    };
}

std::vector<NamedCheck> base_closed_form_checks()
{
    return {
        {"s0-c0-vs-oracle",
         [](Check& c, const SeriesControl& ctl) {
             for (double x : {0.1, 1.0, 10.0})
                 for (double zeta : {0.5, 1.0, 2.0}) {
                     const auto where = at({{"x", x}, {"zeta", zeta}});
                     c.close(half_power::s0(x, zeta), hp_oracle(Kernel::Sin, 0, x, zeta, ctl), 1e-8, 1e-9,
                             "s0 at " + where);
                     c.close(half_power::c0(x, zeta), hp_oracle(Kernel::Cos, 0, x, zeta, ctl), 1e-8, 1e-9,
                             "c0 at " + where);
                 }
         }},
        {"s0-at-origin",
         [](Check& c, const SeriesControl&) {
             for (double zeta : {0.5, 1.0, 2.0})
                 c.close(half_power::s0(0.0, zeta), std::sqrt(kPi / (2.0 * zeta)), 1e-14, 0.0,
                         "s0(0) at " + at({{"zeta", zeta}}));
         }},
    };
}

std::vector<NamedCheck> integer_family_checks()
{
    return {
        {"integer-family-vs-oracle",
         [](Check& c, const SeriesControl& ctl) {
             for (int alpha = 1; alpha <= 5; ++alpha)
                 for (double x : {0.5, 1.0, 2.0})
                     for (Kernel k : {Kernel::Sin, Kernel::Cos}) {
                         const double closed = half_power::transform(k, {1.0, x, alpha});
                         c.close(closed, hp_oracle(k, alpha, x, 1.0, ctl), 1e-8, 1e-9,
                                 std::string(to_string(k)) + " at " + at({{"alpha", alpha}, {"x", x}}));
                     }
         }},
        {"integer-family-scaled-vs-oracle",
         [](Check& c, const SeriesControl& ctl) {
             for (int alpha : {1, 4})
                 for (double zeta : {0.5, 2.0})
                     for (Kernel k : {Kernel::Sin, Kernel::Cos})
                         c.close(half_power::transform(k, {zeta, 1.0, alpha}), hp_oracle(k, alpha, 1.0, zeta, ctl),
                                 1e-8, 1e-9,
                                 std::string(to_string(k)) + " at " + at({{"alpha", alpha}, {"zeta", zeta}}));
         }},
    };
}

std::vector<NamedCheck> difference_equation_checks()
{
    return {
        {"sin-difference-equation",
         [](Check& c, const SeriesControl&) {
             for (int alpha = 0; alpha <= 5; ++alpha)
                 for (double u : {0.5, 1.0, 2.0, 10.0}) {
                     const double k = alpha + 0.5;
                     const double lhs = k * (k + 1.0) * half_power::s_alpha({1.0, u, alpha + 2}) +
                                        half_power::s_alpha({1.0, u, alpha});
                     c.close(lhs, std::pow(u, -k), 1e-10, 0.0, "at " + at({{"alpha", alpha}, {"u", u}}));
                 }
         }},
        {"cos-difference-equation",
         [](Check& c, const SeriesControl&) {
             for (int alpha = 0; alpha <= 5; ++alpha)
                 for (double u : {0.5, 1.0, 2.0, 10.0}) {
                     const double k = alpha + 0.5;
                     const double lhs = k * (k + 1.0) * half_power::c_alpha({1.0, u, alpha + 2}) +
                                        half_power::c_alpha({1.0, u, alpha});
                     c.close(lhs, k * std::pow(u, -k - 1.0), 1e-10, 0.0, "at " + at({{"alpha", alpha}, {"u", u}}));
                 }
         }},
    };
}

std::vector<NamedCheck> interrelation_checks()
{
    return {
        {"integration-by-parts",
         [](Check& c, const SeriesControl&) {
             for (int alpha = 0; alpha <= 5; ++alpha)
                 for (double u : {0.5, 1.0, 2.0, 10.0}) {
                     const double k = alpha + 0.5;
                     const auto where = at({{"alpha", alpha}, {"u", u}});
                     c.close(half_power::s_alpha({1.0, u, alpha}),
                             std::pow(u, -k) - k * half_power::c_alpha({1.0, u, alpha + 1}), 1e-10, 0.0,
                             "sin at " + where);
                     c.close(half_power::c_alpha({1.0, u, alpha}), k * half_power::s_alpha({1.0, u, alpha + 1}),
                             1e-10, 0.0, "cos at " + where);
                 }
         }},
        {"scaling",
         [](Check& c, const SeriesControl&) {
             for (int alpha : {0, 1, 2, 5})
                 for (double x : {0.3, 1.0, 2.5})
                     for (double zeta : {0.5, 2.0, 3.0})
                         for (Kernel k : {Kernel::Sin, Kernel::Cos}) {
                             const double direct = half_power::transform(k, {zeta, x, alpha});
                             const double scaled =
                                 std::pow(zeta, alpha - 0.5) * half_power::transform(k, {1.0, zeta * x, alpha});
                             c.close(direct, scaled, 4.0 * kEps, 0.0,
                                     "at " + at({{"alpha", alpha}, {"x", x}, {"zeta", zeta}}));
                         }
         }},
        {"differential-equation",
         [](Check& c, const SeriesControl&) {
             const double h = 1e-3;
             for (int alpha = 0; alpha <= 3; ++alpha)
                 for (double u : {0.5, 1.0, 2.0, 10.0}) {
                     auto s = [&](double v) { return half_power::s_alpha({1.0, v, alpha}); };
                     auto diff2 = [&](double step) { return (s(u + step) - 2.0 * s(u) + s(u - step)) / (step * step); };
                     // Richardson step removes the h^2 s''''/12 truncation term.
                     const double second = (4.0 * diff2(h) - diff2(2.0 * h)) / 3.0;
                     c.close(second + s(u), std::pow(u, -(alpha + 0.5)), 0.0, 1e-5,
                             "at " + at({{"alpha", alpha}, {"u", u}}));
                 }
         }},
        {"derivative-relation",
         [](Check& c, const SeriesControl&) {
             const double h = 1e-4;
             for (int alpha = 0; alpha <= 3; ++alpha)
                 for (double u : {0.5, 1.0, 2.0, 10.0}) {
                     auto s = [&](double v) { return half_power::s_alpha({1.0, v, alpha}); };
                     const double d = (s(u + h) - s(u - h)) / (2.0 * h);
                     c.close(d, -(alpha + 0.5) * half_power::s_alpha({1.0, u, alpha + 1}), 0.0, 1e-6,
                             "at " + at({{"alpha", alpha}, {"u", u}}));
                 }
         }},
    };
}

// Shared by the two quadratic-phase families.
struct QuadraticFamily {
    oracle::QuadraticPhase::Denominator denominator;
    std::function<double(double)> tail_sin;
    std::function<double(double)> tail_cos;
    std::function<double(double, double, const SeriesControl&)> head_sin;
    std::function<double(double, double, const SeriesControl&)> head_cos;
    std::function<double(double)> weight;
};

std::vector<NamedCheck> quadratic_checks(const QuadraticFamily& fam)
{
    return {
        {"tails-vs-oracle",
         [fam](Check& c, const SeriesControl& ctl) {
             for (double cc : {0.5, 1.0, 2.0, 5.0, 50.0}) {
                 const oracle::QuadraticPhase qp{fam.denominator, 0.0};
                 c.close(fam.tail_sin(cc), oracle_value({qp, Kernel::Sin, cc}, ctl), 1e-8, 0.0,
                         "sin tail at " + at({{"c", cc}}));
                 c.close(fam.tail_cos(cc), oracle_value({qp, Kernel::Cos, cc}, ctl), 1e-8, 0.0,
                         "cos tail at " + at({{"c", cc}}));
             }
         }},
        {"heads-vs-finite-quadrature",
         [fam](Check& c, const SeriesControl& ctl) {
             for (double cc : {0.5, 1.0, 2.0, 5.0})
                 for (double g : {0.3, 0.7, 1.0}) {
                     const auto where = at({{"c", cc}, {"gamma", g}});
                     const auto w = fam.weight;
                     const double qs =
                         oracle::integrate_finite([&](double z) { return std::sin(cc * z * z) * w(z); }, 0.0, g, ctl)
                             .value;
                     const double qc =
                         oracle::integrate_finite([&](double z) { return std::cos(cc * z * z) * w(z); }, 0.0, g, ctl)
                             .value;
                     c.close(fam.head_sin(cc, g, ctl), qs, 0.0, 1e-10, "sin head at " + where);
                     c.close(fam.head_cos(cc, g, ctl), qc, 0.0, 1e-10, "cos head at " + where);
                 }
         }},
        {"decomposition",
         [fam](Check& c, const SeriesControl& ctl) {
             for (double cc : {0.5, 1.0, 5.0})
                 for (double g : {0.3, 0.7, 1.0}) {
                     const oracle::QuadraticPhase qp{fam.denominator, g};
                     const auto where = at({{"c", cc}, {"gamma", g}});
                     c.close(fam.tail_sin(cc) - fam.head_sin(cc, g, ctl), oracle_value({qp, Kernel::Sin, cc}, ctl),
                             1e-8, 0.0, "sin at " + where);
                     c.close(fam.tail_cos(cc) - fam.head_cos(cc, g, ctl), oracle_value({qp, Kernel::Cos, cc}, ctl),
                             1e-8, 0.0, "cos at " + where);
                 }
         }},
    };
}

template <class Transform, class Spec>
NamedCheck full_grid_check(Transform transform, Spec spec)
{
    return {"full-transform-vs-oracle", [transform, spec](Check& c, const SeriesControl& ctl) {
                for (double a : {0.5, 1.0})
                    for (double b : {1.5, 2.0, 4.0})
                        for (double zeta : {0.5, 1.0, 2.0})
                            for (Kernel k : {Kernel::Sin, Kernel::Cos})
                                c.close(transform(k, a, b, zeta, ctl), oracle_value({spec(a, b), k, zeta}, ctl), 1e-8,
                                        1e-9,
                                        std::string(to_string(k)) + " at " +
                                            at({{"a", a}, {"b", b}, {"zeta", zeta}}));
            }};
}

std::vector<NamedCheck> two_radical_checks()
{
    auto checks = quadratic_checks({oracle::QuadraticPhase::Denominator::Radical, two_radical::tail_sin,
                                    two_radical::tail_cos, two_radical::head_sin_series,
                                    two_radical::head_cos_series,
                                    [](double z) { return 1.0 / std::sqrt(z * z + 1.0); }});
    checks.push_back(full_grid_check(
        [](Kernel k, double a, double b, double zeta, const SeriesControl& ctl) {
            return two_radical::assemble(k, {a, b, zeta}, two_radical::HeadMethod::Series, ctl).value;
        },
        [](double a, double b) { return oracle::TwoRadical{a, b}; }));
    checks.push_back({"equal-shifts", [](Check& c, const SeriesControl& ctl) {
                          for (double a : {0.5, 2.0})
                              for (Kernel k : {Kernel::Sin, Kernel::Cos})
                                  c.close(two_radical::assemble(k, {a, a, 1.0}, two_radical::HeadMethod::Series, ctl)
                                              .value,
                                          oracle_value({oracle::TwoRadical{a, a}, k, 1.0}, ctl), 1e-8, 1e-9,
                                          std::string(to_string(k)) + " at " + at({{"a", a}}));
                      }});
    checks.push_back({"b-derivative", [](Check& c, const SeriesControl& ctl) {
                          const double h = 1e-4;
                          for (double a : {0.5, 1.0})
                              for (double b : {2.0, 4.0}) {
                                  const double d = (two_radical::sin_transform({a, b + h, 1.0}, ctl) -
                                                    two_radical::sin_transform({a, b - h, 1.0}, ctl)) /
                                                   (2.0 * h);
                                  const double ref =
                                      -0.5 * oracle_value({oracle::ShiftedPowers{{{a, 0.5}, {b, 1.5}}}, Kernel::Sin, 1.0},
                                                          ctl);
                                  c.close(d, ref, 0.0, 1e-5, "at " + at({{"a", a}, {"b", b}}));
                              }
                      }});
    return checks;
}

std::vector<NamedCheck> radical_pole_checks()
{
    auto checks = quadratic_checks({oracle::QuadraticPhase::Denominator::Pole, radical_pole::pole_tail_sin,
                                    [](double c) { return radical_pole::pole_tail_cos(c); },
                                    radical_pole::pole_head_sin_series, radical_pole::pole_head_cos_series,
                                    [](double z) { return 1.0 / (z * z + 1.0); }});
    checks.push_back(full_grid_check(
        [](Kernel k, double a, double b, double zeta, const SeriesControl& ctl) {
            return radical_pole::assemble(k, {a, b, zeta}, radical_pole::HeadMethod::Series, ctl).value;
        },
        [](double a, double b) { return oracle::RadicalPole{a, b}; }));
    checks.push_back({"zeta-derivative", [](Check& c, const SeriesControl& ctl) {
                          // d/dzeta of the cos transform is -s0(a, zeta) + b times the sin transform.
                          const double h = 1e-4;
                          for (double a : {0.5, 1.0})
                              for (double b : {1.5, 4.0})
                                  for (double zeta : {0.5, 2.0}) {
                                      const double d = (radical_pole::pole_cos_transform({a, b, zeta + h}, ctl) -
                                                        radical_pole::pole_cos_transform({a, b, zeta - h}, ctl)) /
                                                       (2.0 * h);
                                      const double rhs = -half_power::s0(a, zeta) +
                                                         b * radical_pole::pole_sin_transform({a, b, zeta}, ctl);
                                      c.close(d, rhs, 0.0, 1e-6, "at " + at({{"a", a}, {"b", b}, {"zeta", zeta}}));
                                  }
                      }});
    return checks;
}

struct ApproxCurve {
    const char* errata_id;
    std::function<double(double, double, const SeriesControl&)> approx;
    std::function<double(double, double, const SeriesControl&)> reference;
};

std::vector<ApproxCurve> approximation_curves()
{
    return {
        {"two-radical-sin-approx",
         [](double c, double g, const SeriesControl&) { return two_radical::head_sin_approx(c, g); },
         two_radical::head_sin_series},
        {"two-radical-cos-approx-monotonicity",
         [](double c, double g, const SeriesControl&) { return two_radical::head_cos_approx(c, g); },
         two_radical::head_cos_series},
        {"radical-pole-sin-approx",
         [](double c, double g, const SeriesControl&) { return radical_pole::pole_head_approx(Kernel::Sin, c, g); },
         radical_pole::pole_head_sin_series},
        {"radical-pole-cos-approx",
         [](double c, double g, const SeriesControl&) { return radical_pole::pole_head_approx(Kernel::Cos, c, g); },
         radical_pole::pole_head_cos_series},
    };
}

std::vector<NamedCheck> approximation_checks()
{
    return {
        {"monotone-or-documented",
         [](Check& c, const SeriesControl& ctl) {
             constexpr double g = 0.5;
             for (const auto& curve : approximation_curves()) {
                 double previous = std::numeric_limits<double>::infinity();
                 bool monotone = true;
                 for (double cc : {5.0, 10.0, 20.0, 40.0}) {
                     const double ref = curve.reference(cc, g, ctl);
                     const double err = std::abs(curve.approx(cc, g, ctl) - ref) / std::abs(ref);
                     monotone = monotone && err <= previous;
                     previous = err;
                 }
                 const errata::Entry* entry = errata::find(curve.errata_id);
                 c.require(entry != nullptr && entry->monotone_in_c == monotone,
                           std::string(curve.errata_id) + ": measured monotone=" + (monotone ? "yes" : "no") +
                               " does not match the errata registry");
             }
         }},
        {"approximation-accuracy",
         [](Check& c, const SeriesControl& ctl) {
             for (const auto& curve : approximation_curves())
                 for (double cc : {5.0, 10.0, 20.0, 40.0}) {
                     const double ref = curve.reference(cc, 0.5, ctl);
                     c.close(curve.approx(cc, 0.5, ctl), ref, 0.05, 0.0,
                             std::string(curve.errata_id) + " at " + at({{"c", cc}}));
                 }
         }},
        {"corrected-cos-beats-printed",
         [](Check& c, const SeriesControl& ctl) {
             for (double cc : {5.0, 10.0, 20.0, 40.0}) {
                 const double ref = two_radical::head_cos_series(cc, 0.5, ctl);
                 const double fixed = std::abs(two_radical::head_cos_approx(cc, 0.5) - ref);
                 const double printed = std::abs(two_radical::head_cos_approx(cc, 0.5, Formula::AsPrinted) - ref);
                 c.require(fixed < printed, "corrected cos approximation is not better at " + at({{"c", cc}}));
             }
         }},
    };
}

std::vector<NamedCheck> lommel_checks()
{
    return {
        {"lommel-recurrence",
         [](Check& c, const SeriesControl& ctl) {
             for (double mu : {-2.5, -1.5, -0.5, 0.0})
                 for (double z : {0.5, 1.0, 2.0, 5.0}) {
                     // relative to the largest term; the right side vanishes at mu = -1.5, -0.5
                     const double power = std::pow(z, mu + 1.5);
                     const double shifted = lommel::sqrt_z_lommel(mu + 2.0, z, ctl);
                     const double rhs = ((mu + 1.0) * (mu + 1.0) - 0.25) * lommel::sqrt_z_lommel(mu, z, ctl);
                     const double scale = std::max({std::abs(power), std::abs(shifted), std::abs(rhs)});
                     c.close(power - shifted, rhs, 0.0, 1e-9 * scale, "at " + at({{"mu", mu}, {"z", z}}));
                 }
         }},
        {"three-way-agreement",
         [](Check& c, const SeriesControl& ctl) {
             for (int n : {0, 1})
                 for (int m : {1, 2, 3})
                     for (bool plus_one : {false, true})
                         for (double x : {0.5, 1.0, 2.0})
                             for (double zeta : {0.5, 1.0})
                                 for (Kernel k : {Kernel::Sin, Kernel::Cos}) {
                                     const lommel::GeneralExponent g{n, m};
                                     const double p = g.exponent(plus_one);
                                     const double via_gamma = lommel::power_transform(k, p, x, zeta, ctl);
                                     const double via_sici = lommel::si_ci_representation(g, plus_one, x, zeta, k, ctl);
                                     const double ref = hp_oracle(k, p - 0.5, x, zeta, ctl);
                                     const auto where = std::string(to_string(k)) + " at " +
                                                        at({{"p", p}, {"x", x}, {"zeta", zeta}});
                                     c.close(via_gamma, ref, 1e-8, 0.0, "incomplete gamma " + where);
                                     c.close(via_sici, ref, 1e-8, 0.0, "si/ci " + where);
                                     c.close(via_sici, via_gamma, 1e-8, 0.0, "si/ci vs incomplete gamma " + where);
                                 }
         }},
        {"reduction-consistency",
         [](Check& c, const SeriesControl& ctl) {
             for (int n : {0, 1})
                 for (int m : {1, 2, 3})
                     for (bool plus_one : {false, true})
                         for (Kernel k : {Kernel::Sin, Kernel::Cos}) {
                             const lommel::GeneralExponent g{n, m};
                             // exponent 1 makes the pre-reduction prefactor singular
                             if (g.exponent(false) == 1.0 && (plus_one == (k == Kernel::Sin)))
                                 continue;
                             for (double x : {0.5, 2.0}) {
                                 const double reduced =
                                     lommel::power_transform(k, g.exponent(plus_one), x, 0.7, ctl);
                                 c.close(lommel::unreduced_transform(k, g, plus_one, x, 0.7, ctl), reduced, 1e-10,
                                         0.0,
                                         std::string(to_string(k)) + " at " +
                                             at({{"n", n}, {"m", m}, {"plus_one", plus_one}, {"x", x}}));
                             }
                         }
         }},
        {"fresnel-identity",
         [](Check& c, const SeriesControl& ctl) {
             for (double x : {0.5, 1.0, 2.0})
                 for (double zeta : {0.5, 1.0, 2.0}) {
                     const auto where = at({{"x", x}, {"zeta", zeta}});
                     c.close(lommel::general_sin_transform({0, 2}, false, x, zeta, ctl), half_power::s0(x, zeta),
                             1e-12, 0.0, "sin at " + where);
                     c.close(lommel::general_cos_transform({0, 2}, false, x, zeta, ctl), half_power::c0(x, zeta),
                             1e-12, 0.0, "cos at " + where);
                 }
         }},
        {"log-weighted-integral",
         [](Check& c, const SeriesControl& ctl) {
             for (double x : {0.5, 1.0, 2.0}) {
                 const double closed = lommel::log_weighted_sin_integral(x, ctl);
                 const double ref = oracle_value({oracle::LogHalfPower{x}, Kernel::Sin, 1.0}, ctl);
                 c.close(closed, ref, 0.0, 1e-5, "closed vs oracle at " + at({{"x", x}}));
                 c.close(closed, -lommel::alpha_derivative_fd(x, 1e-4, ctl), 0.0, 1e-5,
                         "closed vs finite difference at " + at({{"x", x}}));
             }
         }},
    };
}

std::vector<NamedCheck> errata_checks()
{
    // Every corrected entry with a printed variant must actually disagree
    // with quadrature, and the shipped form must agree.
    return {
        {"printed-variants-disagree",
         [](Check& c, const SeriesControl& ctl) {
             auto differs = [&](const char* id, double printed, double shipped, double truth) {
                 c.close(shipped, truth, 1e-8, 1e-9, std::string(id) + ": shipped form");
                 c.require(std::abs(printed - truth) > 1e-6 * std::abs(truth),
                           std::string(id) + ": printed form unexpectedly agrees with quadrature");
             };
             const half_power::HalfPowerParams s3{1.0, 1.0, 3};
             differs("half-power-odd-sin-sign", half_power::s_alpha(s3, Formula::AsPrinted), half_power::s_alpha(s3),
                     hp_oracle(Kernel::Sin, 3, 1.0, 1.0, ctl));
             const half_power::HalfPowerParams c1{1.0, 1.0, 1};
             differs("half-power-odd-cos-sign", half_power::c_alpha(c1, Formula::AsPrinted), half_power::c_alpha(c1),
                     hp_oracle(Kernel::Cos, 1, 1.0, 1.0, ctl));
             const oracle::QuadraticPhase pole{oracle::QuadraticPhase::Denominator::Pole, 0.0};
             differs("radical-pole-cos-tail", radical_pole::pole_tail_cos(2.0, Formula::AsPrinted),
                     radical_pole::pole_tail_cos(2.0), oracle_value({pole, Kernel::Cos, 2.0}, ctl));
             differs("lommel-incomplete-gamma-order",
                     lommel::power_transform(Kernel::Sin, 1.0 / 3.0, 1.0, 1.0, ctl, Formula::AsPrinted),
                     lommel::power_transform(Kernel::Sin, 1.0 / 3.0, 1.0, 1.0, ctl),
                     hp_oracle(Kernel::Sin, 1.0 / 3.0 - 0.5, 1.0, 1.0, ctl));
             differs("lommel-sici-sin-argument",
                     lommel::si_ci_representation({0, 3}, false, 1.0, 2.0, Kernel::Sin, ctl, Formula::AsPrinted),
                     lommel::si_ci_representation({0, 3}, false, 1.0, 2.0, Kernel::Sin, ctl),
                     hp_oracle(Kernel::Sin, 1.0 / 3.0 - 0.5, 1.0, 2.0, ctl));
         }},
        {"registry-well-formed",
         [](Check& c, const SeriesControl&) {
             for (const auto& e : errata::registry()) {
                 c.require(!e.id.empty() && !e.printed.empty() && !e.shipped.empty(),
                           std::string(e.id) + ": incomplete entry");
                 c.require(e.status == errata::Status::Corrected || !e.as_printed_available,
                           std::string(e.id) + ": only corrected entries carry a printed variant");
             }
         }},
    };
}

struct Group {
    const char* name;
    std::function<std::vector<NamedCheck>()> checks;
};

const std::vector<Group>& groups()
{
    static const std::vector<Group> kGroups = {
        {"special-functions", special_function_checks},
        {"oracle", oracle_checks},
        {"base-closed-forms", base_closed_form_checks},
        {"integer-families", integer_family_checks},
        {"difference-equations", difference_equation_checks},
        {"interrelations", interrelation_checks},
        {"two-radical", two_radical_checks},
        {"radical-pole", radical_pole_checks},
        {"approximations", approximation_checks},
        {"lommel", lommel_checks},
        {"errata", errata_checks},
    };
    return kGroups;
}

} // namespace

bool GroupResult::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool Report::passed() const
{
    return std::all_of(groups.begin(), groups.end(), [](const GroupResult& g) { return g.passed(); });
}

std::vector<std::string> group_names()
{
    std::vector<std::string> out;
    for (const auto& g : groups())
        out.emplace_back(g.name);
    return out;
}

Report run(const std::vector<std::string>& only, const SeriesControl& ctl)
{
    const auto names = group_names();
    for (const auto& want : only)
        if (std::find(names.begin(), names.end(), want) == names.end())
            throw DomainError("selfcheck: unknown group '" + want + "'");

    Report report;
    for (const auto& g : groups()) {
        if (!only.empty() && std::find(only.begin(), only.end(), g.name) == only.end())
            continue;
        const auto start = std::chrono::steady_clock::now();
        GroupResult result;
        result.name = g.name;
        for (const auto& nc : g.checks())
            result.checks.push_back(run_check(nc, ctl));
        result.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report.groups.push_back(std::move(result));
    }
    return report;
}

} // namespace oscint::selfcheck
