#include "goldens.hpp"
#include "helpers.hpp"
#include "oscint/errors.hpp"
#include "oscint/oracle.hpp"
#include "oscint/quadrature.hpp"

using namespace oscint;
using namespace oscint::oracle;

TEST_CASE("gauss-kronrod integrates polynomials exactly")
{
    const auto e = quad::gauss_kronrod15([](double t) { return t * t * t * t * t - 2.0 * t; }, 0.0, 2.0);
    CHECK_NEAR(e.value, 64.0 / 6.0 - 4.0, 1e-14);
}

TEST_CASE("adaptive quadrature with an integrable singularity")
{
    const auto e = quad::integrate_adaptive([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0, {});
    CHECK_NEAR(e.value, 2.0, 1e-9);
    quad::AdaptiveOptions tight;
    tight.max_subdivisions = 3;
    tight.rel_tol = 1e-15;
    CHECK_THROWS_AS(quad::integrate_adaptive([](double t) { return std::log(t); }, 0.0, 1.0, tight),
                    ConvergenceFailure);
}

TEST_CASE("half-power integrals against reference values")
{
    for (const auto& g : goldens::kHalfPower) {
        CAPTURE(g.alpha);
        CAPTURE(g.x);
        const auto s = integrate_semi_infinite({HalfPower{double(g.alpha), g.x}, Kernel::Sin, 1.0});
        const auto c = integrate_semi_infinite({HalfPower{double(g.alpha), g.x}, Kernel::Cos, 1.0});
        CHECK_NEAR(s.value, g.sin, 1e-10);
        CHECK_NEAR(c.value, g.cos, 1e-10);
        CHECK(std::abs(s.value - g.sin) <= s.abs_err_est);
        CHECK(s.zero_intervals_used > 0);
    }
}

TEST_CASE("oracle weights")
{
    for (const auto& g : goldens::kFull) {
        CHECK_NEAR(integrate_semi_infinite({TwoRadical{g.a, g.b}, Kernel::Sin, g.zeta}).value, g.radical_sin, 1e-10);
        CHECK_NEAR(integrate_semi_infinite({TwoRadical{g.a, g.b}, Kernel::Cos, g.zeta}).value, g.radical_cos, 1e-10);
        CHECK_NEAR(integrate_semi_infinite({RadicalPole{g.a, g.b}, Kernel::Sin, g.zeta}).value, g.pole_sin, 1e-10);
        CHECK_NEAR(integrate_semi_infinite({RadicalPole{g.a, g.b}, Kernel::Cos, g.zeta}).value, g.pole_cos, 1e-10);
    }
    CHECK_NEAR(integrate_semi_infinite({ThreeRadical{0.5, 1.0, 2.0}, Kernel::Sin, 1.0}).value, goldens::kThreeRadical,
               1e-10);
    for (const auto& g : goldens::kLogIntegral)
        CHECK_NEAR(integrate_semi_infinite({LogHalfPower{g.x}, Kernel::Sin, 1.0}).value, g.value, 1e-10);
    for (const auto& g : goldens::kRadicalTail) {
        const QuadraticPhase qp{QuadraticPhase::Denominator::Radical, 0.0};
        CHECK_NEAR(integrate_semi_infinite({qp, Kernel::Sin, g.c}).value, g.sin, 1e-10);
        CHECK_NEAR(integrate_semi_infinite({qp, Kernel::Cos, g.c}).value, g.cos, 1e-10);
    }
    const ShiftedPowers same{{{1.0, 0.5}, {2.0, 0.5}}};
    CHECK_NEAR(integrate_semi_infinite({same, Kernel::Sin, 1.0}).value, goldens::kFull[0].radical_sin, 1e-10);
}

TEST_CASE("singular weight at the origin")
{
    // x = 0: int_0^inf sin t / sqrt(t) dt = sqrt(pi/2)
    const auto r = integrate_semi_infinite({HalfPower{0.0, 0.0}, Kernel::Sin, 1.0});
    CHECK_NEAR(r.value, std::sqrt(M_PI / 2.0), 1e-10);
    const auto c = integrate_semi_infinite({HalfPower{0.0, 0.0}, Kernel::Cos, 1.0});
    CHECK_NEAR(c.value, std::sqrt(M_PI / 2.0), 1e-10);
}

TEST_CASE("divergent and invalid integrals are rejected")
{
    CHECK_THROWS_AS(integrate_semi_infinite({HalfPower{-0.5, 1.0}, Kernel::Sin, 1.0}), DivergentIntegral);
    CHECK_THROWS_AS(integrate_semi_infinite({HalfPower{1.0, 0.0}, Kernel::Cos, 1.0}), DivergentIntegral);
    CHECK_THROWS_AS(integrate_semi_infinite({HalfPower{2.0, 0.0}, Kernel::Sin, 1.0}), DivergentIntegral);
    CHECK_THROWS_AS(integrate_semi_infinite({HalfPower{0.0, 1.0}, Kernel::Sin, -1.0}), DomainError);
    CHECK_THROWS_AS(integrate_semi_infinite({TwoRadical{-1.0, 2.0}, Kernel::Sin, 1.0}), DomainError);
    CHECK_THROWS_AS(integrate_finite([](double t) { return t; }, 1.0, 0.0), DomainError);
}

TEST_CASE("oracle by-parts identities")
{
    for (int alpha : {0, 1, 2})
        for (double x : {0.5, 1.0, 2.0}) {
            const double k = alpha + 0.5;
            auto hp = [&](Kernel kk, int al) { return integrate_semi_infinite({HalfPower{double(al), x}, kk, 1.0}).value; };
            CHECK_NEAR(hp(Kernel::Sin, alpha), std::pow(x, -k) - k * hp(Kernel::Cos, alpha + 1), 1e-8);
            CHECK_NEAR(hp(Kernel::Cos, alpha), k * hp(Kernel::Sin, alpha + 1), 1e-8);
        }
}

TEST_CASE("halving the tolerance stays within the error estimate")
{
    SeriesControl tight;
    tight.rel_tol = 0.5e-12;
    for (const auto& g : goldens::kFull) {
        const IntegrandSpec spec{RadicalPole{g.a, g.b}, Kernel::Cos, g.zeta};
        const auto base = integrate_semi_infinite(spec);
        const auto fine = integrate_semi_infinite(spec, tight);
        CHECK(std::abs(base.value - fine.value) <= base.abs_err_est);
    }
}

TEST_CASE("results are bit-reproducible")
{
    const IntegrandSpec spec{TwoRadical{0.5, 4.0}, Kernel::Sin, 2.0};
    CHECK(integrate_semi_infinite(spec).value == integrate_semi_infinite(spec).value);
}
