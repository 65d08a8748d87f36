#include "rxlimit/session.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "rxlimit/errors.hpp"
#include "rxlimit/landauer.hpp"

namespace rxlimit {

namespace {

// Trace timestamps must stay distinct even for very long sessions, so the
// trace carries more digits than the 6-significant-digit experiment tables.
void append_csv_number(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    out += buf;
}

}  // namespace

std::string SessionTrace::to_csv() const {
    std::string out = "elapsed_s,rate_bps,t_sur_k,h_total_w,throttled\n";
    for (const TraceSample& s : samples_) {
        append_csv_number(out, s.elapsed_s);
        out += ',';
        append_csv_number(out, s.r_phone.value());
        out += ',';
        append_csv_number(out, s.t_sur.value());
        out += ',';
        append_csv_number(out, s.h_total.value());
        out += ',';
        out += s.throttled ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string SessionTrace::to_json() const {
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const TraceSample& s : samples_) {
        records.push_back({{"elapsed_s", s.elapsed_s},
                           {"rate_bps", s.r_phone.value()},
                           {"t_sur_k", s.t_sur.value()},
                           {"h_total_w", s.h_total.value()},
                           {"throttled", s.throttled}});
    }
    return records.dump(2) + "\n";
}

SessionTrace simulate_session(const ChipProfile& chip, const RfChainConfig& rf,
                              const SurfacePlate& plate, Rate offered,
                              const ThrottlePolicy& policy, double duration_s, double step_s,
                              Temperature temp, const PhysicalConstants& constants) {
    policy.validate();
    if (!std::isfinite(step_s) || step_s <= 0.0) {
        throw InvalidStep("step must be finite and > 0 s");
    }
    if (!std::isfinite(duration_s) || step_s > duration_s) {
        throw InvalidStep("step must not exceed the session duration");
    }

    const double capacity = plate.heat_capacity_j_per_k();
    const double energy_cap = capacity * (plate.t_safe().value() - plate.t_envir().value());
    const double keep = 1.0 - plate.leak_fraction();

    const auto n_steps = static_cast<std::size_t>(std::floor(duration_s / step_s + 1e-9));

    std::vector<TraceSample> samples;
    samples.reserve(n_steps + 1);

    double rate = offered.value();
    double energy = 0.0;  // joules stored in the plate above ambient
    bool throttled = false;
    std::optional<double> first_throttle;

    auto temp_of = [&](double e) { return Temperature::kelvin(plate.t_envir().value() + e / capacity); };

    HeatReport report = heat_report(chip, rf, Rate::bps(rate), temp, constants);
    samples.push_back({0.0, Rate::bps(rate), temp_of(energy), report.h_total, throttled});

    for (std::size_t i = 1; i <= n_steps; ++i) {
        const double elapsed = static_cast<double>(i) * step_s;

        auto advance = [&](double e) {
            const double gain = report.excess.value() * keep;
            if (gain > 0.0) return e + gain * step_s;
            if (policy.recovery == RecoveryMode::LinearCooldown) {
                const double headroom = chip.p_td().value() - report.h_total.value();
                const double removal =
                    policy.cooldown_power ? policy.cooldown_power->value() : headroom;
                return std::max(0.0, e - std::max(0.0, removal) * step_s);
            }
            return e;
        };

        double next = advance(energy);
        if (next > energy_cap) {
            // Policy applies before the step commits. Repeated application
            // within one step handles large step factors; a stalled StepDown
            // (fraction == 1) keeps the rate and pins the plate at the cap.
            if (!first_throttle) first_throttle = elapsed;
            throttled = true;
            int guard = 0;
            while (next > energy_cap && rate > 0.0) {
                if (policy.mode == ThrottleMode::HardShutoff) {
                    rate = 0.0;
                } else {
                    rate *= policy.step_fraction;
                }
                report = heat_report(chip, rf, Rate::bps(rate), temp, constants);
                next = advance(energy);
                if (policy.step_fraction >= 1.0 || ++guard > 2048) {
                    next = std::min(next, energy_cap);
                    break;
                }
            }
            next = std::min(next, energy_cap);
        }

        energy = next;
        samples.push_back({elapsed, Rate::bps(rate), temp_of(energy), report.h_total, throttled});
    }

    return SessionTrace(std::move(samples), step_s, first_throttle);
}

SessionTrace simulate_session(const ChipProfile& chip, const RfChainConfig& rf,
                              const SurfacePlate& plate, const LinkConfig& link,
                              const ThrottlePolicy& policy, double duration_s, double step_s,
                              Temperature temp, const PhysicalConstants& constants) {
    return simulate_session(chip, rf, plate, downlink_rate(link), policy, duration_s, step_s,
                            temp, constants);
}

std::vector<RateDurationRow> rate_duration_table(const ChipProfile& chip_template,
                                                 std::span<const double> betas,
                                                 std::span<const Rate> rates,
                                                 const RfChainConfig& rf,
                                                 const SurfacePlate& plate,
                                                 Temperature temp,
                                                 const PhysicalConstants& constants) {
    if (betas.empty() || rates.empty()) {
        throw std::invalid_argument("beta and rate grids must be non-empty");
    }

    std::vector<RateDurationRow> rows;
    rows.reserve(betas.size() * rates.size());

    for (double beta : betas) {
        const ChipProfile chip = chip_template.with_beta(beta);
        const Rate r_max = max_receiving_rate(chip, rf, temp, constants);
        for (Rate rate : rates) {
            double duration = std::numeric_limits<double>::infinity();
            if (rate.value() > r_max.value()) {
                duration = stable_duration(heat_report(chip, rf, rate, temp, constants), plate);
            }
            rows.push_back({beta, rate, r_max, duration});
        }
    }
    return rows;
}

}  // namespace rxlimit
