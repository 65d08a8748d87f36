#include "rxlimit/landauer.hpp"

#include "rxlimit/errors.hpp"
#include "rxlimit/thermal.hpp"

namespace rxlimit {

namespace {

// Compute power budget left for the chip once the coupled LNA heat is paid.
double chip_power_budget(const ChipProfile& chip, const RfChainConfig& rf) {
    const double coupled_lna = rf.lambda_coupling() * lna_heat(rf).value();
    const double budget = chip.p_td().value() - coupled_lna;
    if (budget <= 0.0) {
        throw BudgetExhausted("coupled LNA heat (" + std::to_string(coupled_lna) +
                              " W) meets or exceeds the thermal design power (" +
                              std::to_string(chip.p_td().value()) + " W)");
    }
    return budget;
}

// Joules the BP spends per received bit, without the gap factor.
double per_bit_energy_unit_gap(const ChipProfile& chip, Temperature temp,
                               const PhysicalConstants& constants) {
    return chip.k_bp() * chip.fanout_f0() * chip.activity_alpha() *
           landauer_bit_energy(constants, temp);
}

}  // namespace

double baseband_ops(const ChipProfile& chip, Rate rate) {
    return chip.k_bp() * rate.value();
}

ComputePowerBreakdown bp_power(const ChipProfile& chip, Rate rate, Temperature temp,
                               const PhysicalConstants& constants) {
    const double per_bit =
        per_bit_energy_unit_gap(chip, temp, constants) * chip.node().gap_factor();
    const double p_bp = rate.value() * per_bit;
    return ComputePowerBreakdown{
        .p_bp = Power::watts(p_bp),
        .p_chip = Power::watts(p_bp / chip.beta()),
        .per_bit_energy_j = per_bit,
    };
}

Rate max_receiving_rate(const ChipProfile& chip, const RfChainConfig& rf, Temperature temp,
                        const PhysicalConstants& constants) {
    const double budget = chip_power_budget(chip, rf);
    const double per_bit =
        per_bit_energy_unit_gap(chip, temp, constants) * chip.node().gap_factor();
    return Rate::bps(chip.beta() * budget / per_bit);
}

double gap_from_rmax(Rate target_rmax, const ChipProfile& chip, const RfChainConfig& rf,
                     Temperature temp, const PhysicalConstants& constants) {
    if (target_rmax.value() <= 0.0) {
        throw std::invalid_argument("target rate must be > 0");
    }
    const double budget = chip_power_budget(chip, rf);
    return chip.beta() * budget /
           (per_bit_energy_unit_gap(chip, temp, constants) * target_rmax.value());
}

}  // namespace rxlimit
