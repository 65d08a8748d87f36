#pragma once

// Heat generation and the lumped surface-plate energy balance. All chip
// compute power turns into heat; a lambda fraction of LNA heat couples into
// the same hotspot. Whatever exceeds the thermal design power accumulates in
// the plate and drives its temperature linearly from ambient toward the safe
// bound:
//
//   excess * t = C * M * (T_sur - T_envir)
//
// Below the threshold the surface is pinned at ambient; no cooling transient
// is modeled.

#include "rxlimit/core.hpp"

namespace rxlimit {

struct HeatReport {
    Power h_lna;    // raw LNA heat, before coupling
    Power h_chip;   // chip heat = chip compute power
    Power h_total;  // h_chip + lambda * h_lna
    Power excess;   // max(0, h_total - p_td)
};

/// Surface condition at a point in time.
struct ThermalState {
    Temperature t_sur;
    double elapsed_s = 0.0;
};

/// Heat generated by the receive LNAs: n_trx * p_lna * (1 - eta).
Power lna_heat(const RfChainConfig& rf);

/// Full heat ledger for a chip receiving at the given rate.
HeatReport heat_report(const ChipProfile& chip, const RfChainConfig& rf, Rate rate,
                       Temperature temp, const PhysicalConstants& constants);

/// Seconds until the plate reaches the safe temperature bound, or +infinity
/// when there is no excess heat.
double stable_duration(const HeatReport& report, const SurfacePlate& plate);

/// Plate temperature after `elapsed_s` seconds of constant operation, clamped
/// at the safe bound.
Temperature surface_temperature(const HeatReport& report, const SurfacePlate& plate,
                                double elapsed_s);

/// Surface condition after `elapsed_s` seconds of constant operation.
ThermalState thermal_state_after(const HeatReport& report, const SurfacePlate& plate,
                                 double elapsed_s);

}  // namespace rxlimit
