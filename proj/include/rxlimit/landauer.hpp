#pragma once

// Baseband computation load, chip compute power, and the closed-form maximum
// receiving rate. The model chain is:
//
//   ops/s        = k_bp * rate
//   P_bp         = ops/s * F0 * alpha * G * k * T * ln 2
//   P_chip       = P_bp / beta
//   R_max        = beta * (P_td - lambda * H_lna) / (k_bp * F0 * alpha * G * k * T * ln2)
//
// R_max is the largest rate whose chip heat, plus the coupled LNA heat, still
// fits inside the thermal design power.

#include "rxlimit/core.hpp"

namespace rxlimit {

/// Chip compute power split induced by a receiving rate.
struct ComputePowerBreakdown {
    Power p_bp;                // baseband processor power
    Power p_chip;              // whole-chip compute power, p_bp / beta
    double per_bit_energy_j;   // joules consumed by the BP per received bit
};

/// Logic operations per second the baseband performs at the given rate.
double baseband_ops(const ChipProfile& chip, Rate rate);

/// Baseband and chip compute power at the given rate and Landauer temperature.
ComputePowerBreakdown bp_power(const ChipProfile& chip, Rate rate, Temperature temp,
                               const PhysicalConstants& constants);

/// Closed-form maximum sustainable receiving rate under the thermal design
/// power. Throws BudgetExhausted when the coupled LNA heat alone meets or
/// exceeds p_td.
Rate max_receiving_rate(const ChipProfile& chip, const RfChainConfig& rf, Temperature temp,
                        const PhysicalConstants& constants);

/// Inverts the rate ceiling: the gap factor a process node would need for
/// max_receiving_rate to equal target_rmax with this chip/RF configuration.
/// The gap factor of chip's own node is ignored. Throws BudgetExhausted under
/// the same condition as max_receiving_rate.
double gap_from_rmax(Rate target_rmax, const ChipProfile& chip, const RfChainConfig& rf,
                     Temperature temp, const PhysicalConstants& constants);

}  // namespace rxlimit
