#include "rxlimit/scenario.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rxlimit/chipdb.hpp"
#include "rxlimit/errors.hpp"
#include "rxlimit/landauer.hpp"
#include "rxlimit/thermal.hpp"
#include "rxlimit/unit_text.hpp"

namespace rxlimit {

namespace {

[[noreturn]] void bad_field(std::string_view key, const std::string& message) {
    throw ConfigError(std::string(key), message);
}

void check(bool ok, std::string_view key, const char* message) {
    if (!ok) bad_field(key, message);
}

int as_int(std::string_view key, double value) {
    const double rounded = std::round(value);
    check(std::isfinite(value) && std::abs(value - rounded) < 1e-9, key, "must be an integer");
    return static_cast<int>(rounded);
}

// Shorthand axis names accepted alongside full dotted paths.
std::string_view normalize_key(std::string_view key) {
    if (key == "beta") return "chip.beta";
    if (key == "snr_db") return "link.snr_db";
    if (key == "bandwidth_hz") return "link.bandwidth_hz";
    if (key == "p_td_w") return "chip.p_td_w";
    if (key == "lambda") return "rf.lambda";
    return key;
}

std::vector<double> linspace(double start, double stop, int points) {
    std::vector<double> values(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        values[static_cast<std::size_t>(i)] =
            start + (stop - start) * (static_cast<double>(i) / (points - 1));
    }
    return values;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

SemiconductorNode ModelParams::resolve_node() const {
    const auto preset = find_node(node);
    if (!preset) bad_field("chip.node", "unknown node '" + node + "' (use 5nm, 10nm or 14nm)");
    if (gap_factor_override > 0.0) {
        return SemiconductorNode(preset->feature_size_nm(), gap_factor_override);
    }
    return *preset;
}

ChipProfile ModelParams::chip() const {
    return ChipProfile::unchecked(resolve_node(), beta, k_bp, f0, alpha, Power::watts(p_td_w));
}

RfChainConfig ModelParams::rf() const {
    return RfChainConfig(n_trx, Power::watts(p_lna_w), pae_eta, lambda);
}

SurfacePlate ModelParams::plate() const {
    return SurfacePlate(plate_specific_heat, plate_density, plate_area_m2, plate_thickness_m,
                        Temperature::kelvin(t_envir_k), Temperature::kelvin(t_safe_k),
                        leak_fraction);
}

LinkConfig ModelParams::link() const {
    return LinkConfig::with_snr_db(bandwidth_hz, streams, snr_db);
}

LinkBudget ModelParams::budget() const {
    return LinkBudget(Power::watts(tx_power_w), bs_antennas, carrier_hz, distance_m,
                      noise_psd_w_hz, cell_radius_m);
}

ThrottlePolicy ModelParams::throttle_policy() const {
    ThrottlePolicy policy;
    policy.mode = policy_mode;
    policy.step_fraction = step_fraction;
    policy.recovery = recovery;
    if (cooldown_w >= 0.0) policy.cooldown_power = Power::watts(cooldown_w);
    return policy;
}

void apply_override(ModelParams& p, std::string_view raw_key, double v) {
    const std::string_view key = normalize_key(raw_key);
    check(std::isfinite(v), key, "must be finite");

    if (key == "chip.gap_factor") {
        check(v >= 1.0, key, "gap factor must be >= 1");
        p.gap_factor_override = v;
    } else if (key == "chip.k_bp") {
        check(v > 0.0, key, "must be > 0");
        p.k_bp = v;
    } else if (key == "chip.f0") {
        check(v > 0.0, key, "must be > 0");
        p.f0 = v;
    } else if (key == "chip.alpha") {
        check(v > 0.0, key, "must be > 0");
        p.alpha = v;
    } else if (key == "chip.beta") {
        check(v > 0.0 && v <= ChipProfile::kBetaMax, key, "must be in (0, 0.34]");
        p.beta = v;
    } else if (key == "chip.p_td_w") {
        check(v >= 0.0, key, "must be >= 0 W");
        p.p_td_w = v;
    } else if (key == "rf.n_trx") {
        const int n = as_int(key, v);
        check(n >= 1, key, "must be >= 1");
        p.n_trx = n;
    } else if (key == "rf.p_lna_w") {
        check(v >= 0.0, key, "must be >= 0 W");
        p.p_lna_w = v;
    } else if (key == "rf.pae_eta") {
        check(v >= 0.0 && v < 1.0, key, "must be in [0, 1)");
        p.pae_eta = v;
    } else if (key == "rf.lambda") {
        check(v >= 0.0 && v <= 1.0, key, "must be in [0, 1]");
        p.lambda = v;
    } else if (key == "plate.specific_heat") {
        check(v > 0.0, key, "must be > 0 J/(kg K)");
        p.plate_specific_heat = v;
    } else if (key == "plate.density") {
        check(v > 0.0, key, "must be > 0 kg/m^3");
        p.plate_density = v;
    } else if (key == "plate.area_m2") {
        check(v > 0.0, key, "must be > 0 m^2");
        p.plate_area_m2 = v;
    } else if (key == "plate.thickness_m") {
        check(v > 0.0, key, "must be > 0 m");
        p.plate_thickness_m = v;
    } else if (key == "plate.t_envir_k") {
        check(v > 0.0, key, "must be > 0 K");
        p.t_envir_k = v;
    } else if (key == "plate.t_safe_k") {
        check(v > 0.0, key, "must be > 0 K");
        p.t_safe_k = v;
    } else if (key == "plate.leak_fraction") {
        check(v >= 0.0 && v < 1.0, key, "must be in [0, 1)");
        p.leak_fraction = v;
    } else if (key == "link.bandwidth_hz") {
        check(v > 0.0, key, "must be > 0 Hz");
        p.bandwidth_hz = v;
    } else if (key == "link.streams") {
        const int n = as_int(key, v);
        check(n >= 1, key, "must be >= 1");
        p.streams = n;
    } else if (key == "link.snr_db") {
        p.snr_db = v;
    } else if (key == "budget.tx_power_w") {
        check(v > 0.0, key, "must be > 0 W");
        p.tx_power_w = v;
    } else if (key == "budget.bs_antennas") {
        const int n = as_int(key, v);
        check(n >= 1, key, "must be >= 1");
        p.bs_antennas = n;
    } else if (key == "budget.carrier_hz") {
        check(v > 0.0, key, "must be > 0 Hz");
        p.carrier_hz = v;
    } else if (key == "budget.distance_m") {
        check(v > 0.0, key, "must be > 0 m");
        p.distance_m = v;
    } else if (key == "budget.noise_psd_w_hz") {
        check(v > 0.0, key, "must be > 0 W/Hz");
        p.noise_psd_w_hz = v;
    } else if (key == "budget.cell_radius_m") {
        check(v > 0.0, key, "must be > 0 m");
        p.cell_radius_m = v;
    } else if (key == "rate") {
        check(v >= 0.0, key, "must be >= 0 bits/s");
        p.offered_rate_bps = v;
    } else if (key == "temp_k") {
        check(v > 0.0, key, "must be > 0 K");
        p.temp_k = v;
    } else if (key == "session.step_s") {
        check(v > 0.0, key, "must be > 0 s");
        p.step_s = v;
    } else if (key == "session.duration_s") {
        check(v > 0.0, key, "must be > 0 s");
        p.duration_s = v;
    } else if (key == "session.step_fraction") {
        check(v > 0.0 && v <= 1.0, key, "must be in (0, 1]");
        p.step_fraction = v;
    } else if (key == "session.cooldown_w") {
        p.cooldown_w = v;
    } else {
        bad_field(key, "unknown field");
    }
}

void apply_override(ModelParams& p, std::string_view raw_key, std::string_view raw_value) {
    const std::string_view key = normalize_key(raw_key);
    const std::string value(trim(raw_value));

    try {
        if (key == "chip.node") {
            check(find_node(value).has_value(), key,
                  "unknown node (use 5nm, 10nm or 14nm)");
            p.node = value;
            return;
        }
        if (key == "session.policy") {
            if (value == "hard") {
                p.policy_mode = ThrottleMode::HardShutoff;
            } else if (value == "stepdown") {
                p.policy_mode = ThrottleMode::StepDown;
            } else {
                bad_field(key, "must be 'hard' or 'stepdown'");
            }
            return;
        }
        if (key == "session.recovery") {
            if (value == "none") {
                p.recovery = RecoveryMode::None;
            } else if (value == "cooldown") {
                p.recovery = RecoveryMode::LinearCooldown;
            } else {
                bad_field(key, "must be 'none' or 'cooldown'");
            }
            return;
        }
        if (key == "rate") {
            apply_override(p, key, parse_rate(value).value());
            return;
        }
        if (key == "link.bandwidth_hz" || key == "budget.carrier_hz") {
            apply_override(p, key, parse_frequency_hz(value));
            return;
        }
    } catch (const std::invalid_argument& e) {
        bad_field(key, e.what());
    }

    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end != value.c_str() + value.size() || value.empty()) {
        bad_field(key, "'" + value + "' is not a number");
    }
    apply_override(p, key, v);
}

const char* to_string(ScenarioKind k) noexcept {
    switch (k) {
        case ScenarioKind::Fig3a: return "fig3a";
        case ScenarioKind::Fig3b: return "fig3b";
        case ScenarioKind::Fig4a: return "fig4a";
        case ScenarioKind::Fig4b: return "fig4b";
        case ScenarioKind::Fig4c: return "fig4c";
        case ScenarioKind::Custom: return "custom";
    }
    return "?";
}

ScenarioKind scenario_from_string(std::string_view name) {
    if (name == "fig3a") return ScenarioKind::Fig3a;
    if (name == "fig3b") return ScenarioKind::Fig3b;
    if (name == "fig4a") return ScenarioKind::Fig4a;
    if (name == "fig4b") return ScenarioKind::Fig4b;
    if (name == "fig4c") return ScenarioKind::Fig4c;
    if (name == "custom") return ScenarioKind::Custom;
    throw ConfigError("scenario", "unknown scenario '" + std::string(name) + "'");
}

OutputFormat format_from_string(std::string_view name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw ConfigError("format", "unknown format '" + std::string(name) + "' (use csv or json)");
}

ExperimentConfig preset_config(ScenarioKind kind) {
    ExperimentConfig config;
    config.scenario = kind;
    switch (kind) {
        case ScenarioKind::Fig3a:
            config.params.node = "5nm";
            break;
        case ScenarioKind::Fig3b:
            config.params.node = "5nm";
            config.params.offered_rate_bps = 4e9;
            break;
        case ScenarioKind::Fig4a:
            config.params.node = "14nm";
            config.params.bandwidth_hz = kBandwidth20MHz;
            config.params.carrier_hz = kCarrier3p7GHz;
            break;
        case ScenarioKind::Fig4b:
            config.params.node = "10nm";
            config.params.bandwidth_hz = kBandwidth500MHz;
            config.params.carrier_hz = kCarrier28GHz;
            break;
        case ScenarioKind::Fig4c:
            config.params.node = "5nm";
            config.params.bandwidth_hz = kBandwidth500MHz;
            config.params.carrier_hz = kCarrier28GHz;
            break;
        case ScenarioKind::Custom:
            break;
    }
    return config;
}

ExperimentConfig parse_config(std::string_view text) {
    ExperimentConfig config;
    bool scenario_set = false;
    std::vector<std::pair<std::string, std::string>> overrides;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config", "expected 'key = value', got '" + std::string(line) + "'");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));

        if (key == "scenario") {
            config.scenario = scenario_from_string(value);
            scenario_set = true;
        } else if (key == "format") {
            config.format = format_from_string(value);
        } else if (key == "sweep") {
            std::istringstream fields{value};
            SweepAxis axis;
            if (!(fields >> axis.name >> axis.start >> axis.stop >> axis.points)) {
                throw ConfigError("sweep", "expected 'sweep = <field> <start> <stop> <points>'");
            }
            std::string extra;
            if (fields >> extra) {
                throw ConfigError("sweep", "unexpected trailing token '" + extra + "'");
            }
            config.sweeps.push_back(std::move(axis));
        } else {
            overrides.emplace_back(key, value);
        }
    }

    // Start from the preset's embedded parameters, then layer the overrides.
    if (scenario_set) {
        const ModelParams base = preset_config(config.scenario).params;
        config.params = base;
    }
    for (const auto& [key, value] : overrides) {
        apply_override(config.params, key, value);
    }
    return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open config file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

namespace {

// Checks a sweep axis and confirms both endpoints satisfy the target field's
// range before anything runs.
void validate_axis(const SweepAxis& axis, const ModelParams& params) {
    if (axis.points < 2) {
        throw ConfigError("sweep.points", "sweep needs at least 2 points, got " +
                                              std::to_string(axis.points));
    }
    if (!std::isfinite(axis.start) || !std::isfinite(axis.stop)) {
        throw ConfigError("sweep", "sweep bounds must be finite");
    }
    ModelParams scratch = params;
    apply_override(scratch, axis.name, axis.start);
    apply_override(scratch, axis.name, axis.stop);
}

SweepAxis resolve_axis(const ExperimentConfig& config, const char* expected_name,
                       SweepAxis fallback) {
    if (config.sweeps.empty()) {
        return fallback;
    }
    if (config.sweeps.size() > 1) {
        throw ConfigError("sweep", "preset scenarios take a single sweep axis");
    }
    SweepAxis axis = config.sweeps.front();
    if (normalize_key(axis.name) != normalize_key(expected_name)) {
        throw ConfigError("sweep", std::string("this scenario sweeps '") + expected_name + "'");
    }
    axis.name = expected_name;
    return axis;
}

void add_summary(RunResult& result, std::string key, Cell value) {
    result.summary.emplace_back(std::move(key), std::move(value));
}

RunResult run_fig3a(const ExperimentConfig& config) {
    const SweepAxis axis =
        resolve_axis(config, "chip.beta", SweepAxis{"chip.beta", 0.01, ChipProfile::kBetaMax, 34});
    validate_axis(axis, config.params);

    const ModelParams& p = config.params;
    const RfChainConfig rf = p.rf();
    const Temperature temp = p.temperature();
    const PhysicalConstants constants = p.constants();

    const SemiconductorNode nodes[] = {node_5nm(), node_10nm(), node_14nm()};

    auto chip_for = [&](const SemiconductorNode& node, double beta) {
        return ChipProfile::unchecked(node, beta, p.k_bp, p.f0, p.alpha, Power::watts(p.p_td_w));
    };

    RunResult result{config.scenario, {}, {}};
    result.data.columns = {"beta", "rmax_bps_5nm", "rmax_bps_10nm", "rmax_bps_14nm"};
    for (double beta : linspace(axis.start, axis.stop, axis.points)) {
        std::vector<Cell> row;
        row.emplace_back(beta);
        for (const SemiconductorNode& node : nodes) {
            row.emplace_back(max_receiving_rate(chip_for(node, beta), rf, temp, constants).value());
        }
        result.data.rows.push_back(std::move(row));
    }

    add_summary(result, "beta_max", ChipProfile::kBetaMax);
    add_summary(result, "rmax_bps_5nm",
                max_receiving_rate(chip_for(nodes[0], ChipProfile::kBetaMax), rf, temp, constants).value());
    add_summary(result, "rmax_bps_10nm",
                max_receiving_rate(chip_for(nodes[1], ChipProfile::kBetaMax), rf, temp, constants).value());
    add_summary(result, "rmax_bps_14nm",
                max_receiving_rate(chip_for(nodes[2], ChipProfile::kBetaMax), rf, temp, constants).value());
    return result;
}

RunResult run_fig3b(const ExperimentConfig& config) {
    const SweepAxis axis = resolve_axis(config, "rate", SweepAxis{"rate", 3e9, 10e9, 29});
    validate_axis(axis, config.params);

    const ModelParams& p = config.params;
    const ChipProfile chip_template = p.chip();
    const RfChainConfig rf = p.rf();
    const SurfacePlate plate = p.plate();
    const Temperature temp = p.temperature();
    const PhysicalConstants constants = p.constants();

    const std::vector<double> betas = {0.10, 0.20, ChipProfile::kBetaMax};
    std::vector<Rate> rates;
    for (double r : linspace(axis.start, axis.stop, axis.points)) rates.push_back(Rate::bps(r));

    RunResult result{config.scenario, {}, {}};
    result.data.columns = {"beta", "rate_bps", "rmax_bps", "duration_s"};
    for (const RateDurationRow& row :
         rate_duration_table(chip_template, betas, rates, rf, plate, temp, constants)) {
        result.data.rows.push_back(
            {Cell{row.beta}, Cell{row.rate.value()}, Cell{row.r_max.value()}, Cell{row.duration_s}});
    }

    const ChipProfile headline_chip = chip_template.with_beta(0.10);
    const Rate headline_rmax = max_receiving_rate(headline_chip, rf, temp, constants);
    const Rate offered = p.offered_rate();
    const double headline_duration =
        offered.value() > headline_rmax.value()
            ? stable_duration(heat_report(headline_chip, rf, offered, temp, constants), plate)
            : std::numeric_limits<double>::infinity();

    add_summary(result, "beta_headline", 0.10);
    add_summary(result, "rmax_bps", headline_rmax.value());
    add_summary(result, "offered_rate_bps", offered.value());
    add_summary(result, "duration_s", headline_duration);
    return result;
}

RunResult run_fig4(const ExperimentConfig& config, double snr_start, double snr_stop) {
    const SweepAxis axis =
        resolve_axis(config, "link.snr_db", SweepAxis{"link.snr_db", snr_start, snr_stop, 61});
    validate_axis(axis, config.params);

    const ModelParams& p = config.params;
    const Rate r_max = max_receiving_rate(p.chip(), p.rf(), p.temperature(), p.constants());

    RunResult result{config.scenario, {}, {}};
    result.data.columns = {"snr_db",     "r_downlink_bps", "r_max_bps",
                           "r_phone_bps", "binding",        "redundancy_bps"};

    std::string binding_first;
    std::string binding_last;
    for (double snr_db : linspace(axis.start, axis.stop, axis.points)) {
        const LinkConfig link = LinkConfig::with_snr_db(p.bandwidth_hz, p.streams, snr_db);
        const AdaptationDecision decision = adapt(r_max, link);
        if (binding_first.empty()) binding_first = to_string(decision.binding);
        binding_last = to_string(decision.binding);
        result.data.rows.push_back({Cell{snr_db}, Cell{decision.r_downlink.value()},
                                    Cell{decision.r_max.value()}, Cell{decision.r_phone.value()},
                                    Cell{std::string(to_string(decision.binding))},
                                    Cell{decision.redundancy.value()}});
    }

    add_summary(result, "rmax_bps", r_max.value());
    try {
        const double crossover = crossover_snr_db(r_max, p.bandwidth_hz, p.streams);
        add_summary(result, "crossover_db", crossover);
        add_summary(result, "terminal_limited_above_db", crossover);
    } catch (const ExponentOverflow&) {
        add_summary(result, "crossover_db", std::string("overflow"));
    }
    add_summary(result, "binding_at_sweep_start", binding_first);
    add_summary(result, "binding_at_sweep_stop", binding_last);
    return result;
}

RunResult run_custom(const ExperimentConfig& config) {
    if (config.sweeps.empty()) {
        throw ConfigError("sweep", "custom scenario needs at least one sweep axis");
    }
    if (config.sweeps.size() > 2) {
        throw ConfigError("sweep", "at most two sweep axes are supported");
    }
    for (const SweepAxis& axis : config.sweeps) validate_axis(axis, config.params);

    const SweepAxis& outer = config.sweeps.front();
    const bool two_axes = config.sweeps.size() == 2;

    RunResult result{config.scenario, {}, {}};
    result.data.columns.push_back(outer.name);
    if (two_axes) result.data.columns.push_back(config.sweeps[1].name);
    for (const char* col : {"rmax_bps", "r_downlink_bps", "r_phone_bps", "binding",
                            "redundancy_bps", "duration_s"}) {
        result.data.columns.emplace_back(col);
    }

    const std::vector<double> outer_values = linspace(outer.start, outer.stop, outer.points);
    const std::vector<double> inner_values =
        two_axes ? linspace(config.sweeps[1].start, config.sweeps[1].stop, config.sweeps[1].points)
                 : std::vector<double>{0.0};

    for (double outer_value : outer_values) {
        for (double inner_value : inner_values) {
            ModelParams point = config.params;
            apply_override(point, outer.name, outer_value);
            if (two_axes) apply_override(point, config.sweeps[1].name, inner_value);

            const ChipProfile chip = point.chip();
            const RfChainConfig rf = point.rf();
            const Temperature temp = point.temperature();
            const PhysicalConstants constants = point.constants();
            const Rate r_max = max_receiving_rate(chip, rf, temp, constants);
            const AdaptationDecision decision = adapt(r_max, point.link());
            const Rate offered = point.offered_rate();
            const double duration =
                offered.value() > r_max.value()
                    ? stable_duration(heat_report(chip, rf, offered, temp, constants), point.plate())
                    : std::numeric_limits<double>::infinity();

            std::vector<Cell> row;
            row.emplace_back(outer_value);
            if (two_axes) row.emplace_back(inner_value);
            row.emplace_back(r_max.value());
            row.emplace_back(decision.r_downlink.value());
            row.emplace_back(decision.r_phone.value());
            row.emplace_back(std::string(to_string(decision.binding)));
            row.emplace_back(decision.redundancy.value());
            row.emplace_back(duration);
            result.data.rows.push_back(std::move(row));
        }
    }

    add_summary(result, "rows", static_cast<double>(result.data.rows.size()));
    add_summary(result, "axis", outer.name);
    if (two_axes) add_summary(result, "axis2", config.sweeps[1].name);
    return result;
}

}  // namespace

RunResult run_scenario(const ExperimentConfig& config) {
    try {
        switch (config.scenario) {
            case ScenarioKind::Fig3a: return run_fig3a(config);
            case ScenarioKind::Fig3b: return run_fig3b(config);
            case ScenarioKind::Fig4a: return run_fig4(config, 0.0, 30.0);
            case ScenarioKind::Fig4b: return run_fig4(config, -10.0, 20.0);
            case ScenarioKind::Fig4c: return run_fig4(config, 0.0, 30.0);
            case ScenarioKind::Custom: return run_custom(config);
        }
    } catch (const BudgetExhausted& e) {
        throw BudgetExhausted(std::string("scenario ") + to_string(config.scenario) + ": " +
                              e.what());
    }
    throw ConfigError("scenario", "unhandled scenario kind");
}

double summary_number(const RunResult& result, std::string_view key) {
    for (const auto& [name, cell] : result.summary) {
        if (name == key) {
            if (const double* value = std::get_if<double>(&cell)) return *value;
            throw std::out_of_range("summary key '" + std::string(key) + "' is not numeric");
        }
    }
    throw std::out_of_range("summary key '" + std::string(key) + "' not found");
}

namespace {

void append_cell_csv(std::string& out, const Cell& cell) {
    if (const double* value = std::get_if<double>(&cell)) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.6g", *value);
        out += buf;
    } else {
        out += std::get<std::string>(cell);
    }
}

nlohmann::ordered_json cell_json(const Cell& cell) {
    if (const double* value = std::get_if<double>(&cell)) return *value;
    return std::get<std::string>(cell);
}

}  // namespace

std::string render_csv(const RunResult& result) {
    std::string out;
    for (std::size_t i = 0; i < result.data.columns.size(); ++i) {
        if (i) out += ',';
        out += result.data.columns[i];
    }
    out += '\n';
    for (const std::vector<Cell>& row : result.data.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            append_cell_csv(out, row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const RunResult& result) {
    nlohmann::ordered_json doc;
    doc["scenario"] = to_string(result.scenario);
    doc["columns"] = result.data.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const std::vector<Cell>& row : result.data.rows) {
        nlohmann::ordered_json json_row = nlohmann::ordered_json::array();
        for (const Cell& cell : row) json_row.push_back(cell_json(cell));
        rows.push_back(std::move(json_row));
    }
    doc["rows"] = std::move(rows);
    nlohmann::ordered_json summary;
    for (const auto& [key, cell] : result.summary) summary[key] = cell_json(cell);
    doc["summary"] = std::move(summary);
    return doc.dump(2) + "\n";
}

std::string render_summary_text(const RunResult& result) {
    std::string out = "scenario: ";
    out += to_string(result.scenario);
    out += '\n';
    for (const auto& [key, cell] : result.summary) {
        out += "  ";
        out += key;
        out += ": ";
        if (const double* value = std::get_if<double>(&cell)) {
            if (key.find("_bps") != std::string::npos) {
                out += format_rate(Rate::bps(*value));
            } else if (key.ends_with("_db")) {
                out += format_db(*value);
            } else if (key.ends_with("_s")) {
                out += format_seconds(*value);
            } else {
                char buf[40];
                std::snprintf(buf, sizeof(buf), "%.6g", *value);
                out += buf;
            }
        } else {
            out += std::get<std::string>(cell);
        }
        out += '\n';
    }
    return out;
}

}  // namespace rxlimit
