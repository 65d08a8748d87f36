#pragma once

// Time-stepped receive session. Each step the handset receives at the offered
// downlink rate, capped by whatever the throttle policy has imposed so far;
// excess heat accumulates in the surface plate by forward Euler. When a step
// would push the plate past the safe bound, the policy is applied before that
// step commits, so no trace sample ever exceeds t_safe.
//
// Throttle mechanics are deliberately simple model choices, not physics:
// HardShutoff kills the radio, StepDown multiplies the rate by a fixed
// fraction per violation. A step_fraction of 1 keeps the offered rate and
// pins the plate at the bound. Cooling below the dissipation threshold is off
// by default (the plate holds its temperature); LinearCooldown removes heat
// at a fixed power while the chip is under budget.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rxlimit/core.hpp"
#include "rxlimit/link.hpp"
#include "rxlimit/thermal.hpp"

namespace rxlimit {

enum class ThrottleMode { HardShutoff, StepDown };
enum class RecoveryMode { None, LinearCooldown };

struct ThrottlePolicy {
    ThrottleMode mode = ThrottleMode::HardShutoff;
    double step_fraction = 0.5;  // (0, 1], StepDown only
    RecoveryMode recovery = RecoveryMode::None;
    // Heat removal rate while under budget; empty means "use the dissipation
    // headroom p_td - h_total". LinearCooldown only.
    std::optional<Power> cooldown_power;

    void validate() const {
        detail::require(detail::finite(step_fraction) && step_fraction > 0.0 && step_fraction <= 1.0,
                        "step fraction must be in (0, 1]");
    }
};

struct TraceSample {
    double elapsed_s;
    Rate r_phone;
    Temperature t_sur;
    Power h_total;
    bool throttled;
};

class SessionTrace {
public:
    SessionTrace(std::vector<TraceSample> samples, double step_s,
                 std::optional<double> first_throttle_s)
        : samples_(std::move(samples)), step_s_(step_s), first_throttle_s_(first_throttle_s) {}

    const std::vector<TraceSample>& samples() const noexcept { return samples_; }
    double step_s() const noexcept { return step_s_; }

    /// Elapsed time of the first throttle event, if any occurred.
    std::optional<double> first_throttle_s() const noexcept { return first_throttle_s_; }

    /// CSV with the fixed header elapsed_s,rate_bps,t_sur_k,h_total_w,throttled.
    std::string to_csv() const;

    /// JSON array of records, full float precision.
    std::string to_json() const;

private:
    std::vector<TraceSample> samples_;
    double step_s_;
    std::optional<double> first_throttle_s_;
};

/// Runs a session at a constant offered rate. Throws InvalidStep unless
/// 0 < step_s <= duration_s.
SessionTrace simulate_session(const ChipProfile& chip, const RfChainConfig& rf,
                              const SurfacePlate& plate, Rate offered,
                              const ThrottlePolicy& policy, double duration_s, double step_s,
                              Temperature temp = landauer_reference_temperature(),
                              const PhysicalConstants& constants = {});

/// Same, with the offered rate taken from the link's downlink capacity.
SessionTrace simulate_session(const ChipProfile& chip, const RfChainConfig& rf,
                              const SurfacePlate& plate, const LinkConfig& link,
                              const ThrottlePolicy& policy, double duration_s, double step_s,
                              Temperature temp = landauer_reference_temperature(),
                              const PhysicalConstants& constants = {});

/// One grid point of the rate/duration table.
struct RateDurationRow {
    double beta;
    Rate rate;
    Rate r_max;
    double duration_s;  // +infinity marks an indefinitely sustainable rate
};

/// Closed-form stable duration over a (beta, rate) grid for one chip family.
/// Rows at or below the rate ceiling carry an infinite duration. Throws
/// std::invalid_argument on an empty grid.
std::vector<RateDurationRow> rate_duration_table(const ChipProfile& chip_template,
                                                 std::span<const double> betas,
                                                 std::span<const Rate> rates,
                                                 const RfChainConfig& rf,
                                                 const SurfacePlate& plate,
                                                 Temperature temp = landauer_reference_temperature(),
                                                 const PhysicalConstants& constants = {});

}  // namespace rxlimit
