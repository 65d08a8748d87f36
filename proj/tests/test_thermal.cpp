#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "rxlimit/landauer.hpp"
#include "rxlimit/thermal.hpp"

using namespace rxlimit;

namespace {

const PhysicalConstants kConstants;
const Temperature kT300 = Temperature::kelvin(300.0);

// Frozen by independent arbitrary-precision evaluation of the heat chain at
// 4 Gbps on the 5 nm node with beta = 0.1 and the default RF configuration.
constexpr double kHChip = 4.1708340497880142;
constexpr double kHTotal = 4.1827896497880142;
constexpr double kExcess = 1.1827896497880142;
constexpr double kDuration = 3.9719657682513542;

HeatReport hot_report() {
    const ChipProfile chip = ChipProfile::typical(node_5nm(), 0.1);
    return heat_report(chip, RfChainConfig(), Rate::gbps(4.0), kT300, kConstants);
}

}  // namespace

TEST_CASE("lna heat") {
    CHECK(lna_heat(RfChainConfig()).value() == doctest::Approx(0.039852).epsilon(1e-12));
    CHECK(lna_heat(RfChainConfig(1, Power::milliwatts(24.3), 0.59, 0.3)).value() ==
          doctest::Approx(0.009963).epsilon(1e-12));
    // A perfect amplifier emits no heat; only the unchecked constructor
    // admits eta = 1.
    CHECK(lna_heat(RfChainConfig::unchecked(4, Power::milliwatts(24.3), 1.0, 0.3)).value() == 0.0);
}

TEST_CASE("heat report at 4 Gbps, beta = 0.1") {
    const HeatReport report = hot_report();
    CHECK(report.h_lna.value() == doctest::Approx(0.039852).epsilon(1e-12));
    CHECK(report.h_chip.value() == doctest::Approx(kHChip).epsilon(1e-12));
    CHECK(report.h_total.value() == doctest::Approx(kHTotal).epsilon(1e-12));
    CHECK(report.excess.value() == doctest::Approx(kExcess).epsilon(1e-12));
    CHECK(report.h_total.value() ==
          report.h_chip.value() + 0.3 * report.h_lna.value());
}

TEST_CASE("heat report for an idle chip") {
    const ChipProfile chip = ChipProfile::typical(node_5nm(), 0.1);
    const RfChainConfig rf;
    const HeatReport report = heat_report(chip, rf, Rate::bps(0.0), kT300, kConstants);
    CHECK(report.h_chip.value() == 0.0);
    CHECK(report.h_total.value() == doctest::Approx(0.3 * 0.039852).epsilon(1e-12));
    CHECK(report.excess.value() == 0.0);
}

TEST_CASE("operating exactly at the ceiling leaves no excess") {
    const RfChainConfig rf;
    std::mt19937 gen(8201);
    std::uniform_real_distribution<double> beta(0.01, 0.34);
    for (int i = 0; i < 200; ++i) {
        const ChipProfile chip = ChipProfile::typical(node_5nm(), beta(gen));
        const Rate rmax = max_receiving_rate(chip, rf, kT300, kConstants);
        const HeatReport report = heat_report(chip, rf, rmax, kT300, kConstants);
        CHECK(report.excess.value() <= 1e-10 * chip.p_td().value());
    }
}

TEST_CASE("stable duration closed form") {
    const SurfacePlate plate;
    const HeatReport report = hot_report();
    CHECK(stable_duration(report, plate) == doctest::Approx(kDuration).epsilon(1e-12));

    const HeatReport cool{Power::watts(0.04), Power::watts(1.0), Power::watts(1.012),
                          Power::watts(0.0)};
    CHECK(std::isinf(stable_duration(cool, plate)));

    const HeatReport doubled{report.h_lna, report.h_chip, report.h_total,
                             Power::watts(2.0 * report.excess.value())};
    CHECK(stable_duration(doubled, plate) ==
          doctest::Approx(stable_duration(report, plate) / 2.0).epsilon(1e-12));
}

TEST_CASE("energy conservation: excess times duration equals plate energy") {
    const SurfacePlate plate;
    std::mt19937 gen(8202);
    std::uniform_real_distribution<double> excess(1e-6, 50.0);
    const double plate_energy =
        plate.heat_capacity_j_per_k() * (plate.t_safe().value() - plate.t_envir().value());
    for (int i = 0; i < 500; ++i) {
        const HeatReport report{Power::watts(0.0), Power::watts(0.0), Power::watts(0.0),
                                Power::watts(excess(gen))};
        const double duration = stable_duration(report, plate);
        CHECK(report.excess.value() * duration == doctest::Approx(plate_energy).epsilon(1e-12));
    }
}

TEST_CASE("surface temperature reaches the bound exactly at the stable duration") {
    const SurfacePlate plate;
    const HeatReport report = hot_report();
    const double duration = stable_duration(report, plate);

    CHECK(surface_temperature(report, plate, duration).value() ==
          doctest::Approx(318.15).epsilon(1e-12));
    CHECK(surface_temperature(report, plate, duration).in_celsius() ==
          doctest::Approx(45.0).epsilon(1e-10));
    CHECK(surface_temperature(report, plate, 0.0).value() == plate.t_envir().value());
    // Lumped model is linear: midpoint in time is the midpoint in temperature.
    CHECK(surface_temperature(report, plate, duration / 2.0).in_celsius() ==
          doctest::Approx(36.0).epsilon(1e-10));
}

TEST_CASE("surface temperature is pinned at ambient without excess") {
    const SurfacePlate plate;
    const HeatReport cool{Power::watts(0.04), Power::watts(0.5), Power::watts(0.512),
                          Power::watts(0.0)};
    for (double elapsed : {0.0, 1.0, 3600.0, 1e6}) {
        CHECK(surface_temperature(cool, plate, elapsed).value() == plate.t_envir().value());
    }
}

TEST_CASE("surface temperature is monotone in time and clamped") {
    const SurfacePlate plate;
    std::mt19937 gen(8203);
    std::uniform_real_distribution<double> excess(0.0, 20.0);
    std::uniform_real_distribution<double> time(0.0, 100.0);
    for (int i = 0; i < 500; ++i) {
        const HeatReport report{Power::watts(0.0), Power::watts(0.0), Power::watts(0.0),
                                Power::watts(excess(gen))};
        const double t1 = time(gen);
        const double t2 = time(gen);
        const double lo = std::min(t1, t2);
        const double hi = std::max(t1, t2);
        const double temp_lo = surface_temperature(report, plate, lo).value();
        const double temp_hi = surface_temperature(report, plate, hi).value();
        CHECK(temp_lo <= temp_hi);
        CHECK(temp_hi <= plate.t_safe().value());
    }

    CHECK_THROWS_AS(surface_temperature(hot_report(), plate, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(
        surface_temperature(hot_report(), plate, std::numeric_limits<double>::infinity()),
        std::invalid_argument);
}

TEST_CASE("thermal state bundles temperature and elapsed time") {
    const SurfacePlate plate;
    const HeatReport report = hot_report();
    const ThermalState state = thermal_state_after(report, plate, 1.0);
    CHECK(state.elapsed_s == 1.0);
    CHECK(state.t_sur.value() == surface_temperature(report, plate, 1.0).value());
    CHECK(state.t_sur.value() >= plate.t_envir().value());
    CHECK(state.t_sur.value() <= plate.t_safe().value());
}

TEST_CASE("stable duration is strictly decreasing in rate above the ceiling") {
    const ChipProfile chip = ChipProfile::typical(node_5nm(), 0.1);
    const RfChainConfig rf;
    const SurfacePlate plate;
    const Rate rmax = max_receiving_rate(chip, rf, kT300, kConstants);

    std::mt19937 gen(8204);
    std::uniform_real_distribution<double> above(1.01, 5.0);
    for (int i = 0; i < 500; ++i) {
        const double m1 = above(gen);
        const double m2 = above(gen);
        if (m1 == m2) continue;
        const double lo = std::min(m1, m2) * rmax.value();
        const double hi = std::max(m1, m2) * rmax.value();
        const double d_lo =
            stable_duration(heat_report(chip, rf, Rate::bps(lo), kT300, kConstants), plate);
        const double d_hi =
            stable_duration(heat_report(chip, rf, Rate::bps(hi), kT300, kConstants), plate);
        CHECK(d_hi < d_lo);
    }
}

TEST_CASE("plate leakage stretches the duration") {
    const HeatReport report = hot_report();
    const SurfacePlate sealed;
    const SurfacePlate leaky(870, 3000, 1e-4, 1e-3, Temperature::kelvin(300.15),
                             Temperature::kelvin(318.15), 0.5);
    CHECK(stable_duration(report, leaky) ==
          doctest::Approx(2.0 * stable_duration(report, sealed)).epsilon(1e-12));
}
