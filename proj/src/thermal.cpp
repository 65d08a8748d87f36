#include "rxlimit/thermal.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "rxlimit/landauer.hpp"

namespace rxlimit {

Power lna_heat(const RfChainConfig& rf) {
    return Power::watts(rf.n_trx() * rf.p_lna().value() * (1.0 - rf.pae_eta()));
}

HeatReport heat_report(const ChipProfile& chip, const RfChainConfig& rf, Rate rate,
                       Temperature temp, const PhysicalConstants& constants) {
    const Power h_lna = lna_heat(rf);
    const double h_chip = bp_power(chip, rate, temp, constants).p_chip.value();
    const double h_total = h_chip + rf.lambda_coupling() * h_lna.value();
    return HeatReport{
        .h_lna = h_lna,
        .h_chip = Power::watts(h_chip),
        .h_total = Power::watts(h_total),
        .excess = Power::watts(std::max(0.0, h_total - chip.p_td().value())),
    };
}

double stable_duration(const HeatReport& report, const SurfacePlate& plate) {
    const double absorbed = report.excess.value() * (1.0 - plate.leak_fraction());
    if (absorbed <= 0.0) return std::numeric_limits<double>::infinity();
    const double delta_t = plate.t_safe().value() - plate.t_envir().value();
    return plate.heat_capacity_j_per_k() * delta_t / absorbed;
}

Temperature surface_temperature(const HeatReport& report, const SurfacePlate& plate,
                                double elapsed_s) {
    if (!std::isfinite(elapsed_s) || elapsed_s < 0.0) {
        throw std::invalid_argument("elapsed time must be finite and >= 0 s");
    }
    const double absorbed = report.excess.value() * (1.0 - plate.leak_fraction());
    const double rise = absorbed * elapsed_s / plate.heat_capacity_j_per_k();
    return Temperature::kelvin(
        std::min(plate.t_safe().value(), plate.t_envir().value() + rise));
}

ThermalState thermal_state_after(const HeatReport& report, const SurfacePlate& plate,
                                 double elapsed_s) {
    return ThermalState{surface_temperature(report, plate, elapsed_s), elapsed_s};
}

}  // namespace rxlimit
