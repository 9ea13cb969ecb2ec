#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "ptosc/errors.hpp"
#include "ptosc/oracle.hpp"
#include "ptosc/spectra.hpp"

using namespace ptosc;
using ptosc::testing::relative_error;

namespace {
constexpr double kPi = std::numbers::pi;
const PTParameters kUnitLambda{1.0, 0.375, kPi / 2, 1.0};
const PTParameters kOscillator{1.0, 0.5, 50 * kPi, 1.0};
} // namespace

TEST_CASE("energy levels of the lambda = 1 well") {
    const EnergyLevel e1 = energy_level(kUnitLambda, 1);
    CHECK(e1.fp == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(e1.ho == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(e1.total == doctest::Approx(0.75).epsilon(1e-15));
    const EnergyLevel e3 = energy_level(kUnitLambda, 3);
    CHECK(e3.fp == doctest::Approx(4.5).epsilon(1e-15));
    CHECK(e3.ho == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(e3.total == doctest::Approx(5.75).epsilon(1e-15));
    CHECK(e3.total == e3.fp + e3.ho);
}

TEST_CASE("box levels are T n^2") {
    for (double L : {0.3, 1.0, 12.0}) {
        const PTParameters box{1.0, 0.0, L, 1.0};
        const double T = derive_scales(box).kineticScale;
        const EnergyLevel e2 = energy_level(box, 2);
        CHECK(e2.ho == 0.0);
        CHECK(e2.total == 4.0 * T);
    }
}

TEST_CASE("quantum numbers below one are rejected") {
    CHECK_THROWS_AS((void)energy_level(kUnitLambda, 0), InvalidParameter);
    CHECK_THROWS_AS((void)pressure_level(kUnitLambda, -3), InvalidParameter);
    CHECK_THROWS_AS((void)regime_ratio(kUnitLambda, 0), InvalidParameter);
}

TEST_CASE("pressure levels") {
    const double twoOverPi = 2.0 / kPi;
    const PressureLevel p = pressure_level(kUnitLambda, 1);
    CHECK(relative_error(p.fp, twoOverPi) < 1e-15);
    CHECK(relative_error(p.ho, 0.125 * twoOverPi) < 1e-14);
    CHECK(relative_error(p.total, 2.25 / kPi) < 1e-15);
    CHECK(p.total == p.fp + p.ho);

    const PressureLevel box = pressure_level(PTParameters{1.0, 0.0, 1.0, 1.0}, 1);
    CHECK(relative_error(box.total, kPi * kPi / 4.0) < 1e-15);

    // Oscillator regime: P_1 ~ E_1 / L.
    const double e1 = energy_level(kOscillator, 1).total;
    const double p1 = pressure_level(kOscillator, 1).total;
    CHECK(relative_error(p1, e1 / kOscillator.halfWidth) < 2e-2);
    CHECK(relative_error(p1, 0.000032150492154202284702) < 1e-13);
}

TEST_CASE("regime ratio and labels") {
    const RegimeRatio r1 = regime_ratio(kUnitLambda, 1);
    CHECK(r1.eta == 2.0);
    CHECK(r1.label == Regime::FPDominated);

    const RegimeRatio r10 = regime_ratio(kUnitLambda, 10);
    CHECK(r10.eta == doctest::Approx(100.0 / 9.5).epsilon(1e-15));
    CHECK(r10.label == Regime::FPDominated);

    const RegimeRatio ho = regime_ratio(kOscillator, 1);
    CHECK(ho.eta == doctest::Approx(1.0 / (199.00249998437519531 * 0.5)).epsilon(1e-13));
    CHECK(ho.label == Regime::HODominated);

    // eta equals the ratio of the energy components.
    const EnergyLevel e = energy_level(kOscillator, 7);
    CHECK(relative_error(regime_ratio(kOscillator, 7).eta, e.fp / e.ho) < 1e-14);

    const RegimeRatio box = regime_ratio(PTParameters{1.0, 0.0, 1.0, 1.0}, 4);
    CHECK(std::isinf(box.eta));
    CHECK(box.label == Regime::FPDominated);

    // lambda = 1, n = 1 sits at eta = 2; a shallower well gives crossover at n = 1.
    const PTParameters mid{1.0, 1.0, kPi / 2, 1.0};
    CHECK(regime_ratio(mid, 1).label == Regime::Crossover);
    CHECK(to_string(Regime::Crossover) == "crossover");
    CHECK(to_string(Regime::HODominated) == "HO-dominated");
}

TEST_CASE("spectrum table") {
    const SpectrumTable one = spectrum_table(kUnitLambda, 1);
    REQUIRE(one.rows.size() == 1);
    CHECK(one.rows[0].energyTotal == energy_level(kUnitLambda, 1).total);
    CHECK(one.rows[0].pressureTotal == pressure_level(kUnitLambda, 1).total);

    const SpectrumTable three = spectrum_table(kUnitLambda, 3);
    REQUIRE(three.rows.size() == 3);
    CHECK(three.rows[0].energyTotal == doctest::Approx(0.75));
    CHECK(three.rows[1].energyTotal == doctest::Approx(2.75));
    CHECK(three.rows[2].energyTotal == doctest::Approx(5.75));
    CHECK(three.rows[2].n == 3);
    CHECK(three.rows[2].approximateRatio == doctest::Approx(3.0));

    CHECK_THROWS_AS((void)spectrum_table(kUnitLambda, 0), InvalidParameter);
    CHECK_THROWS_AS((void)spectrum_table(kUnitLambda, kMaxTableLevels + 1), InvalidParameter);
}

TEST_CASE("levels increase strictly with n") {
    for (double v0 : testing::log_uniform_samples(1e-6, 1e6, 40, 21))
        for (double L : {0.01, 1.0, 300.0}) {
            const SpectrumTable t = spectrum_table(PTParameters{1.0, v0, L, 1.0}, 200);
            for (std::size_t i = 1; i < t.rows.size(); ++i) {
                CHECK(t.rows[i].energyTotal > t.rows[i - 1].energyTotal);
                CHECK(t.rows[i].pressureFP > 0.0);
            }
            CHECK(t.rows[0].energyTotal > 0.0);
        }
}

TEST_CASE("closed-form pressure equals -dE/dL") {
    const double depths[] = {0.0, 0.005, 0.375, 0.5, 40.0};
    const double widths[] = {kPi / 2, 1.0, 7.0, 50 * kPi};
    for (double v0 : depths)
        for (double L : widths) {
            const PTParameters p{1.0, v0, L, 1.0};
            for (long n = 1; n <= 20; ++n) {
                const double numeric = numerical_pressure(p, n);
                CHECK(relative_error(numeric, pressure_level(p, n).total) < 1e-8);
            }
        }
}

TEST_CASE("box equation of state has exponent exactly 2") {
    for (double L : {0.2, 1.0, 3.7, 1e4})
        for (long n = 1; n <= 30; ++n) CHECK(effective_exponent(PTParameters{1.3, 0.0, L, 0.8}, n) == 2.0);
}

TEST_CASE("eta lambda / n approaches one as 1 / (2n - 1)") {
    const DerivedScales s = derive_scales(kOscillator);
    for (long n = 1; n <= 1000; n += 37) {
        const double eta = regime_ratio(kOscillator, n).eta;
        const double gap = eta * s.lambdaExact / static_cast<double>(n) - 1.0;
        CHECK(gap == doctest::Approx(1.0 / (2.0 * static_cast<double>(n) - 1.0)).epsilon(1e-12));
    }
}

TEST_CASE("FP and HO parts cross over at most once, near n_cr") {
    for (double v0 : testing::log_uniform_samples(1e-3, 1e5, 30, 22)) {
        const PTParameters p{1.0, v0, 1.0, 1.0};
        const SpectrumTable t = spectrum_table(p, 2000);
        int changes = 0;
        long where = 0;
        for (std::size_t i = 1; i < t.rows.size(); ++i) {
            const bool before = t.rows[i - 1].energyFP > t.rows[i - 1].energyHO;
            const bool after = t.rows[i].energyFP > t.rows[i].energyHO;
            if (before != after) {
                ++changes;
                where = t.rows[i].n;
            }
        }
        CHECK(changes <= 1);
        if (changes == 1) {
            // Crossing where n^2 = lambda (n - 1/2), i.e. n close to lambda = 1 / n_cr.
            CHECK(std::abs(static_cast<double>(where) - t.scales.lambdaExact) < 2.0);
        }
    }
}
