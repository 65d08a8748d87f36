#pragma once

// Experiment runner behind the CLI: named scenario presets that sweep the
// model and emit deterministic tables (CSV or JSON) plus a summary of the
// headline numbers. A scenario is described by an ExperimentConfig: a preset
// kind, optional field overrides, and sweep axes. Overrides are validated
// against the target field's range when they are applied, before anything is
// computed.
//
// Preset catalog (names are part of the CLI surface):
//   fig3a  rate ceiling as a function of the baseband power share, for the
//          built-in 5/10/14 nm nodes
//   fig3b  stable duration over a (beta, offered rate) grid, 5 nm node
//   fig4a  SNR sweep at 20 MHz against the 14 nm ceiling
//   fig4b  SNR sweep at 500 MHz against the 10 nm ceiling
//   fig4c  SNR sweep at 500 MHz against the 5 nm ceiling
//   custom sweep any numeric field, from a config file

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rxlimit/core.hpp"
#include "rxlimit/link.hpp"
#include "rxlimit/session.hpp"

namespace rxlimit {

/// Every tunable model input as plain numbers, defaulting to the standard
/// simulation parameter set. Strong types are built on demand; overrides are
/// range-checked per field first.
struct ModelParams {
    // chip
    std::string node = "5nm";
    double gap_factor_override = 0.0;  // 0 means "use the node preset's gap"
    double k_bp = 1e8;
    double f0 = 4.0;
    double alpha = 0.2;
    double beta = 0.34;
    double p_td_w = 3.0;
    // rf chains
    int n_trx = 4;
    double p_lna_w = 24.3e-3;
    double pae_eta = 0.59;
    double lambda = 0.30;
    // surface plate
    double plate_specific_heat = 870.0;
    double plate_density = 3000.0;
    double plate_area_m2 = 1e-4;
    double plate_thickness_m = 1e-3;
    double t_envir_k = 300.15;
    double t_safe_k = 318.15;
    double leak_fraction = 0.0;
    // link
    double bandwidth_hz = kBandwidth500MHz;
    int streams = 4;
    double snr_db = 10.0;
    // base-station budget (snr_from_budget convenience)
    double tx_power_w = 5.0;
    int bs_antennas = 256;
    double carrier_hz = kCarrier3p7GHz;
    double distance_m = 100.0;
    double noise_psd_w_hz = 3.9810717055349725e-21;  // -174 dBm/Hz
    double cell_radius_m = 100.0;
    // session / misc
    double offered_rate_bps = 4e9;
    double temp_k = 300.0;
    double step_s = 0.01;
    double duration_s = 10.0;
    ThrottleMode policy_mode = ThrottleMode::HardShutoff;
    double step_fraction = 0.5;
    RecoveryMode recovery = RecoveryMode::None;
    double cooldown_w = -1.0;  // < 0 means "use the dissipation headroom"

    SemiconductorNode resolve_node() const;
    ChipProfile chip() const;
    RfChainConfig rf() const;
    SurfacePlate plate() const;
    LinkConfig link() const;
    LinkBudget budget() const;
    ThrottlePolicy throttle_policy() const;
    Temperature temperature() const { return Temperature::kelvin(temp_k); }
    PhysicalConstants constants() const { return {}; }
    Rate offered_rate() const { return Rate::bps(offered_rate_bps); }
};

/// Sets one field by dotted path ("chip.beta", "link.snr_db", "rate", ...).
/// Values may carry unit suffixes where the field is a rate or frequency.
/// Throws ConfigError naming the field on unknown keys or out-of-range
/// values.
void apply_override(ModelParams& params, std::string_view key, std::string_view value);

/// Numeric-only variant used by sweep axes.
void apply_override(ModelParams& params, std::string_view key, double value);

enum class ScenarioKind { Fig3a, Fig3b, Fig4a, Fig4b, Fig4c, Custom };
enum class OutputFormat { Csv, Json };

const char* to_string(ScenarioKind k) noexcept;
ScenarioKind scenario_from_string(std::string_view name);  // throws ConfigError
OutputFormat format_from_string(std::string_view name);    // throws ConfigError

struct SweepAxis {
    std::string name;  // a numeric override key
    double start = 0.0;
    double stop = 0.0;
    int points = 0;  // >= 2
};

struct ExperimentConfig {
    ScenarioKind scenario = ScenarioKind::Fig3a;
    OutputFormat format = OutputFormat::Csv;
    std::vector<SweepAxis> sweeps;
    ModelParams params;
};

/// The ready-made configuration for a preset scenario.
ExperimentConfig preset_config(ScenarioKind kind);

/// Parses the key = value config format (# comments, `sweep = name start
/// stop points` lines). Throws ConfigError / ParseError.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// A table cell: number or label.
using Cell = std::variant<double, std::string>;

struct Dataset {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

struct RunResult {
    ScenarioKind scenario;
    Dataset data;
    std::vector<std::pair<std::string, Cell>> summary;
};

/// Runs the scenario. Deterministic: identical configs give identical
/// results. Throws ConfigError on invalid configuration.
RunResult run_scenario(const ExperimentConfig& config);

/// Summary access; throws std::out_of_range when the key is missing.
double summary_number(const RunResult& result, std::string_view key);

/// Data table as CSV, floats at 6 significant digits. Byte-stable.
std::string render_csv(const RunResult& result);

/// Data plus summary as JSON, full float precision.
std::string render_json(const RunResult& result);

/// Human-readable summary block.
std::string render_summary_text(const RunResult& result);

}  // namespace rxlimit
