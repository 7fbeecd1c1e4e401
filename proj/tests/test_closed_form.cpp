#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "quartix/closed_form.hpp"
#include "quartix/errors.hpp"
#include "quartix/poly.hpp"

using namespace quartix;

namespace {
const Quintic kQ1 = Quintic::from_coeffs({1.0, -10.0, 37.0, -64.0, 52.0, -16.0});
const Quintic kQ2 = Quintic::from_coeffs({0.2, -2.75, 41.0 / 3.0, -30.5, 30.0, -10.0});
const double kSqrt105 = std::sqrt(105.0);
}  // namespace

TEST_CASE("resolvent of the double-double-single quintic") {
    const ResolventData rd = resolvent(kQ1);
    CHECK(rd.p == doctest::Approx(-9.0 / 5.0).epsilon(1e-13));
    CHECK(rd.q == doctest::Approx(-4.0 / 5.0).epsilon(1e-13));
    CHECK(rd.r == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(std::abs(rd.r) <= 1e-13);
    CHECK(rd.a == doctest::Approx(-27.0 / 100.0).epsilon(1e-13));
    CHECK(rd.b == doctest::Approx(-13.0 / 500.0).epsilon(1e-13));
    CHECK(rd.Q == doctest::Approx(-7.0 / 12500.0).epsilon(1e-12));
    REQUIRE(rd.z0.has_value());
    CHECK(*rd.z0 == doctest::Approx((13.0 - kSqrt105) / 20.0).epsilon(1e-12));
    REQUIRE(rd.alpha.has_value());
    CHECK(*rd.alpha >= 0.0);
    CHECK(*rd.alpha <= 3.14159265358979324);
    CHECK_FALSE(rd.degenerate_cubic);
}

TEST_CASE("resolvent of the five-simple-roots quintic") {
    const ResolventData rd = resolvent(kQ2);
    CHECK(rd.p == doctest::Approx(-35.0 / 8.0).epsilon(1e-13));
    CHECK(rd.q == doctest::Approx(-15.0 / 8.0).epsilon(1e-13));
    CHECK(rd.r == doctest::Approx(189.0 / 256.0).epsilon(1e-13));
    CHECK(rd.a == doctest::Approx(-7.0 / 3.0).epsilon(1e-13));
    CHECK(rd.b == doctest::Approx(-20.0 / 27.0).epsilon(1e-13));
    CHECK(rd.Q == doctest::Approx(-1.0 / 3.0).epsilon(1e-13));
    REQUIRE(rd.z0.has_value());
    CHECK(*rd.z0 == doctest::Approx(1.0 / 8.0).epsilon(1e-12));
}

TEST_CASE("resolvent rejects a nonpositive leading coefficient") {
    Quintic bad = kQ1;
    bad.mu[0] = 0.0;
    CHECK_THROWS_AS(resolvent(bad), std::invalid_argument);
    bad.mu[0] = -1.0;
    CHECK_THROWS_AS(resolvent(bad), std::invalid_argument);
}

TEST_CASE("cardano roots are ordered eta3 < eta1 < eta2 with small residuals") {
    const ResolventData rd = resolvent(kQ1);
    const CardanoRoots eta = cardano_real_roots(rd.a, rd.b);
    CHECK(eta.eta3 < eta.eta1);
    CHECK(eta.eta1 < eta.eta2);
    for (double e : {eta.eta1, eta.eta2, eta.eta3}) {
        const double resid = e * e * e + rd.a * e + rd.b;
        const double scale = std::abs(e * e * e) + std::abs(rd.a * e) + std::abs(rd.b) + 1.0;
        CHECK(std::abs(resid) <= 1e-10 * scale);
    }
    // least root of the resolvent cubic in z
    CHECK(eta.eta3 - rd.p / 3.0 == doctest::Approx((13.0 - kSqrt105) / 20.0).epsilon(1e-12));
}

TEST_CASE("cardano rejects Q >= 0 and degenerate cubics") {
    CHECK_THROWS_AS(cardano_real_roots(1.0, 1.0), std::domain_error);    // Q > 0
    CHECK_THROWS_AS(cardano_real_roots(0.0, 0.0), std::domain_error);    // Q = 0
    CHECK_THROWS_AS(cardano_real_roots(-1e-14, 1e-22), std::domain_error);
}

TEST_CASE("near-coincident extrema are rejected as closed-form degenerate") {
    // P5' = (xi-1)^3 (xi-1-h): a near-quadruple critical point
    const double h = 1e-4;
    const Quintic q5{{0.2, -(4.0 + h) / 4.0, 2.0 + h, -(4.0 + 3.0 * h) / 2.0, 1.0 + h, 1.0}};
    const ResolventData rd = resolvent(q5);
    CHECK_THROWS_AS(ferrari_extrema(q5, rd), ClosedFormUnavailable);
}

TEST_CASE("ferrari extrema of the double-double-single quintic") {
    const ResolventData rd = resolvent(kQ1);
    const ExtremaSet ext = ferrari_extrema(kQ1, rd);
    CHECK(ext.lambda[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(ext.lambda[1] == doctest::Approx((25.0 - kSqrt105) / 10.0).epsilon(1e-10));
    CHECK(ext.lambda[2] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(ext.lambda[3] == doctest::Approx((25.0 + kSqrt105) / 10.0).epsilon(1e-10));
    CHECK(ext.xi_min() == ext.lambda[0]);
    CHECK(ext.xi_max() == ext.lambda[3]);
}

TEST_CASE("ferrari extrema of the five-simple-roots quintic, branch order") {
    const ResolventData rd = resolvent(kQ2);
    const ExtremaSet ext = ferrari_extrema(kQ2, rd);
    CHECK(ext.xi_ext[0] == doctest::Approx(5.0).epsilon(1e-10));
    CHECK(ext.xi_ext[1] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(ext.xi_ext[2] == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(ext.xi_ext[3] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(ext.lambda[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(ext.lambda[1] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(ext.lambda[2] == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(ext.lambda[3] == doctest::Approx(5.0).epsilon(1e-10));
}

TEST_CASE("ferrari takes the biquadratic route when q vanishes") {
    // P5' = (xi^2 - 1)(xi^2 - 4), extrema (-2, -1, 1, 2)
    const Quintic q5{{0.2, 0.0, -5.0 / 3.0, 0.0, 4.0, 1.0}};
    const ResolventData rd = resolvent(q5);
    CHECK(std::abs(rd.q) <= 1e-14);
    const ExtremaSet ext = ferrari_extrema(q5, rd);
    CHECK(ext.lambda[0] == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(ext.lambda[1] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(ext.lambda[2] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ext.lambda[3] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("ferrari reports complex extrema as unavailable") {
    // P5' = (xi^2 + 1)(xi - 1)(xi + 2): only two real critical points
    const Quintic q5{{0.2, 0.25, -1.0 / 3.0, 0.5, -2.0, 1.0}};
    const ResolventData rd = resolvent(q5);
    CHECK_THROWS_AS(ferrari_extrema(q5, rd), ClosedFormUnavailable);
}

TEST_CASE("ferrari lambdas match the oracle's critical points") {
    std::mt19937_64 rng(404);
    int exercised = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Quintic q5 = testutil::random_signed_quintic(rng);
        const ResolventData rd = resolvent(q5);
        if (!(rd.Q < 0.0) || !rd.z0 || !(*rd.z0 > 0.0)) continue;
        ExtremaSet ext;
        try {
            ext = ferrari_extrema(q5, rd);
        } catch (const ClosedFormUnavailable&) {
            continue;
        }
        ++exercised;
        const Poly dp = q5.poly().derivative();
        const Poly ddp = dp.derivative();
        const double bound = cauchy_root_bound(dp);
        const RootSet crit = isolate_real_roots(dp, -bound, bound, 1e-12);
        REQUIRE(crit.distinct_count() == 4);
        for (int i = 0; i < 4; ++i) {
            const double li = ext.lambda[static_cast<std::size_t>(i)];
            const double cv = crit.roots[static_cast<std::size_t>(i)].value;
            // certified residual over curvature bounds the attainable accuracy
            const double cond = 1e-9 * eval_scale(dp, cv) / std::max(std::abs(ddp(cv)), 1e-300);
            const double allowed = 1e-8 * std::max(1.0, std::abs(cv)) + 4.0 * cond;
            CHECK(std::abs(li - cv) <= allowed);
        }
    }
    CHECK(exercised > 50);  // the property must actually fire
}
