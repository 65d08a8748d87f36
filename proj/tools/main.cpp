// Command-line front end: ad-hoc calculators (calc), experiment presets and
// config-driven sweeps (scenario), catalog queries (chipdb), and the
// time-stepped session simulator (simulate).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "rxlimit/chipdb.hpp"
#include "rxlimit/errors.hpp"
#include "rxlimit/landauer.hpp"
#include "rxlimit/scenario.hpp"
#include "rxlimit/session.hpp"
#include "rxlimit/thermal.hpp"
#include "rxlimit/unit_text.hpp"

namespace {

using namespace rxlimit;

// CLI flags funnel through the same override paths as config files, so every
// value is range-checked once, in one place.
struct ParamCapture {
    std::vector<std::pair<std::string, std::string>> overrides;

    ModelParams build(ModelParams base = {}) const {
        for (const auto& [key, value] : overrides) apply_override(base, key, value);
        return base;
    }
};

void add_override_option(CLI::App* cmd, ParamCapture& capture, const std::string& flag,
                         std::string key, const std::string& description) {
    cmd->add_option_function<std::string>(
        flag,
        [&capture, key = std::move(key)](const std::string& value) {
            capture.overrides.emplace_back(key, value);
        },
        description);
}

void add_chip_rf_options(CLI::App* cmd, ParamCapture& capture) {
    add_override_option(cmd, capture, "--node", "chip.node", "process node: 5nm, 10nm or 14nm");
    add_override_option(cmd, capture, "--gap", "chip.gap_factor", "override the node's gap factor");
    add_override_option(cmd, capture, "--kbp", "chip.k_bp", "logic operations per received bit");
    add_override_option(cmd, capture, "--f0", "chip.f0", "fanout");
    add_override_option(cmd, capture, "--alpha", "chip.alpha", "activity factor");
    add_override_option(cmd, capture, "--beta", "chip.beta", "baseband share of chip power, (0, 0.34]");
    add_override_option(cmd, capture, "--ptd", "chip.p_td_w", "thermal design power [W]");
    add_override_option(cmd, capture, "--ntrx", "rf.n_trx", "receive antenna count");
    add_override_option(cmd, capture, "--plna", "rf.p_lna_w", "power per LNA [W]");
    add_override_option(cmd, capture, "--eta", "rf.pae_eta", "LNA power-added efficiency [0, 1)");
    add_override_option(cmd, capture, "--lambda", "rf.lambda", "LNA-to-chip heat coupling [0, 1]");
    add_override_option(cmd, capture, "--temp-k", "temp_k", "per-bit energy temperature [K]");
}

void add_plate_options(CLI::App* cmd, ParamCapture& capture) {
    add_override_option(cmd, capture, "--t-envir-k", "plate.t_envir_k", "ambient temperature [K]");
    add_override_option(cmd, capture, "--t-safe-k", "plate.t_safe_k", "safe surface bound [K]");
    add_override_option(cmd, capture, "--leak", "plate.leak_fraction",
                        "excess heat fraction that bypasses the plate");
}

void add_link_options(CLI::App* cmd, ParamCapture& capture) {
    add_override_option(cmd, capture, "--bw", "link.bandwidth_hz", "bandwidth (Hz/kHz/MHz/GHz)");
    add_override_option(cmd, capture, "--streams", "link.streams", "spatial streams");
    add_override_option(cmd, capture, "--snr", "link.snr_db", "SNR [dB]");
}

void write_or_print(const std::string& data, const std::string& summary,
                    const std::string& output_path) {
    if (!output_path.empty()) {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) throw Error("cannot open output file: " + output_path);
        out << data;
        if (!summary.empty()) std::cout << summary;
    } else {
        std::cout << data;
        if (!summary.empty()) std::cerr << summary;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"receiving-rate capability model: compute-energy floor, thermal budget, link adaptation"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string config_path;
    std::string output_path;
    std::string format_name = "csv";
    unsigned long long seed = 0;
    app.add_option("--config", config_path, "experiment config file (key = value lines)");
    app.add_option("--output", output_path, "write the data table to this file");
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--seed", seed, "reserved; every model here is deterministic");

    // ---- calc ------------------------------------------------------------
    CLI::App* calc = app.add_subcommand("calc", "single-value calculators");
    calc->require_subcommand(1);

    ParamCapture rmax_params;
    CLI::App* calc_rmax = calc->add_subcommand("rmax", "maximum sustainable receiving rate");
    add_chip_rf_options(calc_rmax, rmax_params);
    calc_rmax->callback([&] {
        const ModelParams p = rmax_params.build();
        const Rate rmax = max_receiving_rate(p.chip(), p.rf(), p.temperature(), p.constants());
        std::cout << format_rate(rmax) << "\n";
    });

    ParamCapture duration_params;
    CLI::App* calc_duration =
        calc->add_subcommand("duration", "time a rate above the ceiling can be sustained");
    add_chip_rf_options(calc_duration, duration_params);
    add_plate_options(calc_duration, duration_params);
    add_override_option(calc_duration, duration_params, "--rate", "rate",
                        "offered rate (bps/kbps/Mbps/Gbps)");
    calc_duration->callback([&] {
        const ModelParams p = duration_params.build();
        const ChipProfile chip = p.chip();
        const RfChainConfig rf = p.rf();
        const Rate rmax = max_receiving_rate(chip, rf, p.temperature(), p.constants());
        if (p.offered_rate().value() <= rmax.value()) {
            std::cout << "unbounded (offered rate " << format_rate(p.offered_rate())
                      << " is within the " << format_rate(rmax) << " ceiling)\n";
            return;
        }
        const HeatReport report =
            heat_report(chip, rf, p.offered_rate(), p.temperature(), p.constants());
        std::cout << format_seconds(stable_duration(report, p.plate()))
                  << "  (closed-form lumped-plate estimate; real handsets may throttle sooner)\n";
    });

    std::string crossover_rmax;
    std::string crossover_bw = "500MHz";
    int crossover_streams = 4;
    CLI::App* calc_crossover =
        calc->add_subcommand("crossover", "SNR where the downlink rate meets the ceiling");
    calc_crossover->add_option("--rmax", crossover_rmax, "rate ceiling (bps/kbps/Mbps/Gbps)")
        ->required();
    calc_crossover->add_option("--bw", crossover_bw, "bandwidth (Hz/kHz/MHz/GHz)");
    calc_crossover->add_option("--streams", crossover_streams, "spatial streams")
        ->check(CLI::PositiveNumber);
    calc_crossover->callback([&] {
        const double db = crossover_snr_db(parse_rate(crossover_rmax),
                                           parse_frequency_hz(crossover_bw), crossover_streams);
        std::cout << format_db(db) << "\n";
    });

    ParamCapture downlink_params;
    bool downlink_from_budget = false;
    CLI::App* calc_downlink = calc->add_subcommand("downlink", "channel-side downlink rate");
    add_link_options(calc_downlink, downlink_params);
    calc_downlink->add_flag("--from-budget", downlink_from_budget,
                            "derive the SNR from the link budget instead of --snr");
    add_override_option(calc_downlink, downlink_params, "--tx-w", "budget.tx_power_w",
                        "base-station transmit power [W]");
    add_override_option(calc_downlink, downlink_params, "--bs-antennas", "budget.bs_antennas",
                        "base-station antenna count");
    add_override_option(calc_downlink, downlink_params, "--carrier", "budget.carrier_hz",
                        "carrier frequency (Hz/kHz/MHz/GHz)");
    add_override_option(calc_downlink, downlink_params, "--distance", "budget.distance_m",
                        "link distance [m]");
    calc_downlink->callback([&] {
        const ModelParams p = downlink_params.build();
        LinkConfig link = p.link();
        if (downlink_from_budget) {
            const LinkBudget budget = p.budget();
            if (budget.beyond_cell_edge()) {
                std::cerr << "warning: distance " << budget.distance_m()
                          << " m is beyond the nominal cell radius " << budget.cell_radius_m()
                          << " m\n";
            }
            link = link.with_snr_linear(snr_from_budget(budget, link));
            std::cout << format_rate(downlink_rate(link)) << "  (SNR "
                      << format_db(link.snr_db()) << ")\n";
            return;
        }
        std::cout << format_rate(downlink_rate(link)) << "\n";
    });

    std::string hd_product;
    double hd_power = 0.0;
    double hd_area = 0.0;
    std::string hd_catalog;
    CLI::App* calc_hd = calc->add_subcommand("heatdensity", "chip heat density in W/cm^2");
    calc_hd->add_option("--product", hd_product, "look up a catalog product by name");
    calc_hd->add_option("--power", hd_power, "full-load power [W]");
    calc_hd->add_option("--area", hd_area, "package size [cm^2]");
    calc_hd->add_option("--catalog", hd_catalog, "catalog file (with --product)");
    calc_hd->callback([&] {
        char buf[64];
        if (!hd_product.empty()) {
            const auto path = hd_catalog.empty() ? default_catalog_path()
                                                 : std::filesystem::path(hd_catalog);
            for (const ChipSpec& spec : load_catalog(path)) {
                if (spec.product == hd_product) {
                    std::snprintf(buf, sizeof(buf), "%.2f W/cm^2\n", heat_density(spec));
                    std::cout << buf;
                    return;
                }
            }
            throw Error("product '" + hd_product + "' not found in " + path.string());
        }
        const ChipSpec spec{DeviceClass::Smartphone, "", "ad-hoc", 1.0, hd_power, hd_area, 0.0};
        if (spec.power_w <= 0.0) throw Error("--power must be > 0 (or use --product)");
        std::snprintf(buf, sizeof(buf), "%.2f W/cm^2\n", heat_density(spec));
        std::cout << buf;
    });

    // ---- scenario ----------------------------------------------------------
    std::string preset_name;
    ParamCapture scenario_params;
    CLI::App* scenario = app.add_subcommand("scenario", "run an experiment preset or config");
    scenario->add_option("--preset", preset_name, "fig3a, fig3b, fig4a, fig4b, fig4c")
        ->check(CLI::IsMember({"fig3a", "fig3b", "fig4a", "fig4b", "fig4c"}));
    add_chip_rf_options(scenario, scenario_params);
    add_link_options(scenario, scenario_params);
    scenario->callback([&] {
        ExperimentConfig config;
        if (!config_path.empty() && !preset_name.empty()) {
            throw ConfigError("scenario", "--preset and --config are mutually exclusive");
        }
        if (!config_path.empty()) {
            config = load_config(config_path);
        } else if (!preset_name.empty()) {
            config = preset_config(scenario_from_string(preset_name));
        } else {
            throw ConfigError("scenario", "give --preset or a --config file");
        }
        config.params = scenario_params.build(config.params);
        if (app.count("--format") != 0 || config_path.empty()) {
            config.format = format_from_string(format_name);
        }

        const RunResult result = run_scenario(config);
        const std::string data =
            config.format == OutputFormat::Csv ? render_csv(result) : render_json(result);
        write_or_print(data, render_summary_text(result), output_path);
    });

    // ---- chipdb ------------------------------------------------------------
    std::string chipdb_catalog;
    CLI::App* chipdb = app.add_subcommand("chipdb", "chip catalog queries");
    chipdb->add_option("--catalog", chipdb_catalog, "catalog file (default: bundled)");
    CLI::App* chipdb_list = chipdb->add_subcommand("list", "print the validated catalog");
    CLI::App* chipdb_validate = chipdb->add_subcommand("validate", "check every row");
    chipdb->require_subcommand(1);

    auto catalog_path = [&] {
        return chipdb_catalog.empty() ? default_catalog_path()
                                      : std::filesystem::path(chipdb_catalog);
    };
    chipdb_list->callback([&] {
        const std::vector<ChipSpec> specs = load_catalog(catalog_path());
        if (format_name == "json") {
            std::string out = "[\n";
            char buf[192];
            for (std::size_t i = 0; i < specs.size(); ++i) {
                const ChipSpec& s = specs[i];
                std::snprintf(buf, sizeof(buf),
                              "  {\"device\": \"%s\", \"company\": \"%s\", \"product\": \"%s\", "
                              "\"node_nm\": %g, \"power_w\": %g, \"package_cm2\": %.2f, "
                              "\"heat_density_w_cm2\": %.2f}%s\n",
                              to_string(s.device), s.company.c_str(), s.product.c_str(), s.node_nm,
                              s.power_w, s.package_cm2, s.stated_heat_density_w_cm2,
                              i + 1 < specs.size() ? "," : "");
                out += buf;
            }
            out += "]\n";
            write_or_print(out, "", output_path);
        } else {
            write_or_print(serialize_catalog(specs), "", output_path);
        }
    });
    chipdb_validate->callback([&] {
        const std::vector<ChipSpec> specs = load_catalog(catalog_path());
        std::cout << "catalog OK: " << specs.size() << " rows, stated heat densities within "
                  << kHeatDensityToleranceWPerCm2 << " W/cm^2 of power/area\n";
    });

    // ---- simulate ------------------------------------------------------------
    ParamCapture sim_params;
    CLI::App* simulate = app.add_subcommand("simulate", "time-stepped receive session");
    add_chip_rf_options(simulate, sim_params);
    add_plate_options(simulate, sim_params);
    add_override_option(simulate, sim_params, "--rate", "rate", "offered rate (bps/kbps/Mbps/Gbps)");
    add_override_option(simulate, sim_params, "--step", "session.step_s", "integration step [s]");
    add_override_option(simulate, sim_params, "--duration", "session.duration_s",
                        "session length [s]");
    add_override_option(simulate, sim_params, "--policy", "session.policy", "hard or stepdown");
    add_override_option(simulate, sim_params, "--step-fraction", "session.step_fraction",
                        "StepDown rate multiplier per violation");
    add_override_option(simulate, sim_params, "--recovery", "session.recovery",
                        "none or cooldown");
    add_override_option(simulate, sim_params, "--cooldown-w", "session.cooldown_w",
                        "heat removal rate while under budget [W]");
    simulate->callback([&] {
        const ModelParams p = sim_params.build();
        const SessionTrace trace =
            simulate_session(p.chip(), p.rf(), p.plate(), p.offered_rate(), p.throttle_policy(),
                             p.duration_s, p.step_s, p.temperature(), p.constants());

        std::string summary = "samples: " + std::to_string(trace.samples().size()) + "\n";
        if (trace.first_throttle_s()) {
            summary += "first throttle: " + format_seconds(*trace.first_throttle_s()) + "\n";
        } else {
            summary += "first throttle: none\n";
        }
        summary += "final surface temperature: " +
                   std::to_string(trace.samples().back().t_sur.in_celsius()) + " C\n";

        write_or_print(format_name == "json" ? trace.to_json() : trace.to_csv(), summary,
                       output_path);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
