#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "oracles.hpp"
#include "ptosc/errors.hpp"
#include "ptosc/parameters.hpp"

using namespace ptosc;
using ptosc::testing::relative_error;

namespace {
constexpr double kPi = std::numbers::pi;

PTParameters make(double v0, double L, double m = 1.0, double hbar = 1.0) {
    return PTParameters{m, v0, L, hbar};
}
} // namespace

TEST_CASE("zero-depth well degenerates to the box") {
    const DerivedScales s = derive_scales(make(0.0, kPi / 2));
    CHECK(s.alpha == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.kineticScale == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s.lambdaExact == 0.0);
    CHECK(s.oscillatorQuantum == 0.0);
    CHECK(s.psiFactor == 0.0);
    CHECK(std::isinf(s.nCritical));
    CHECK(std::isinf(s.zetaSquared));
}

TEST_CASE("4 V0 / T = 3 gives lambda = 1") {
    const DerivedScales s = derive_scales(make(0.375, kPi / 2));
    CHECK(s.coupling == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(s.lambdaExact == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.oscillatorQuantum == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s.psiFactor == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(s.nCritical == doctest::Approx(1.0).epsilon(1e-15));
    // Literal bracket of the defining formula with (2 / pi zeta)^2.
    const double literal = std::sqrt(4.0 / (kPi * kPi * s.zetaSquared) + 1.0) - 1.0;
    CHECK(relative_error(s.lambdaExact, literal) < 1e-14);
}

TEST_CASE("oscillator regime scales at L = 50 pi") {
    const DerivedScales s = derive_scales(make(0.5, 50 * kPi));
    CHECK(s.alpha == doctest::Approx(0.01).epsilon(1e-15));
    CHECK(s.kineticScale == doctest::Approx(5e-5).epsilon(1e-14));
    // 50-digit values of sqrt(40001) - 1 and 5e-5 (sqrt(40001) - 1).
    CHECK(relative_error(s.lambdaExact, 199.00249998437519531) < 1e-14);
    CHECK(relative_error(s.oscillatorQuantum, 0.0099501249992187597655) < 1e-14);
}

TEST_CASE("invalid parameters are rejected") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS((void)derive_scales(make(0.1, 1.0, 0.0)), InvalidParameter);
    CHECK_THROWS_AS((void)derive_scales(make(0.1, 1.0, -1.0)), InvalidParameter);
    CHECK_THROWS_AS((void)derive_scales(make(-0.1, 1.0)), InvalidParameter);
    CHECK_THROWS_AS((void)derive_scales(make(0.1, 0.0)), InvalidParameter);
    CHECK_THROWS_AS((void)derive_scales(make(0.1, 1.0, 1.0, 0.0)), InvalidParameter);
    CHECK_THROWS_AS((void)derive_scales(make(nan, 1.0)), InvalidParameter);
    CHECK_THROWS_AS((void)derive_scales(make(0.1, inf)), InvalidParameter);
}

TEST_CASE("well depth is reconstructed from T and lambda") {
    for (double v0 : testing::log_uniform_samples(1e-8, 1e6, 200, 11))
        for (double L : {0.1, 1.0, 37.0, 1e3}) {
            const DerivedScales s = derive_scales(make(v0, L));
            const double rebuilt = s.kineticScale * s.lambdaExact * (s.lambdaExact + 2.0) / 4.0;
            CHECK(relative_error(rebuilt, v0) < 1e-12);
            CHECK(s.kineticScale > 0.0);
            CHECK(s.lambdaExact > 0.0);
        }
}

TEST_CASE("alpha and T are homogeneous in L") {
    const PTParameters base = make(0.7, 2.3, 1.9, 0.6);
    const DerivedScales s = derive_scales(base);
    for (double c : {0.125, 0.3, 2.0, 7.5, 1e3}) {
        const DerivedScales sc = derive_scales(base.withHalfWidth(base.halfWidth * c));
        CHECK(relative_error(sc.alpha, s.alpha / c) < 4e-16);
        CHECK(relative_error(sc.kineticScale, s.kineticScale / (c * c)) < 1e-15);
    }
}

TEST_CASE("lambda increases with well depth and with width") {
    auto depths = testing::log_uniform_samples(1e-6, 1e4, 100, 3);
    std::sort(depths.begin(), depths.end());
    double previous = -1.0;
    for (double v0 : depths) {
        const double lam = derive_scales(make(v0, 1.3)).lambdaExact;
        CHECK(lam > previous);
        previous = lam;
    }
    auto widths = testing::log_uniform_samples(1e-2, 1e4, 100, 4);
    std::sort(widths.begin(), widths.end());
    previous = -1.0;
    for (double L : widths) {
        const double lam = derive_scales(make(0.25, L)).lambdaExact;
        CHECK(lam > previous);
        previous = lam;
    }
}

TEST_CASE("stable lambda agrees with the literal form evaluated at 50 digits") {
    for (double x : testing::log_uniform_samples(1e-12, 1e12, 400, 5))
        CHECK(relative_error(lambda_from_coupling(x), testing::wide_lambda(x)) < 1e-13);
}

TEST_CASE("literal lambda in double agrees once cancellation is mild") {
    for (double x : testing::log_uniform_samples(1e-2, 1e12, 200, 6))
        CHECK(relative_error(lambda_from_coupling_literal(x), lambda_from_coupling(x)) < 1e-13);
    // And loses digits near the box limit, which is why it is not used.
    CHECK(relative_error(lambda_from_coupling_literal(1e-12), lambda_from_coupling(1e-12)) > 1e-8);
}

TEST_CASE("psi in product form matches the quotient form") {
    // The product form cancels as lambda -> 0; compare only where lambda is not tiny.
    for (double v0 : testing::log_uniform_samples(1e-2, 1e6, 200, 7)) {
        const DerivedScales s = derive_scales(make(v0, 1.0));
        CHECK(relative_error(psi_factor_literal(s.lambdaExact), s.psiFactor) < 1e-13);
    }
}
