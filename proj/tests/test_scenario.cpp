#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include <json.hpp>

#include "rxlimit/errors.hpp"
#include "rxlimit/scenario.hpp"

using namespace rxlimit;

namespace {

std::string cell_text(const Cell& cell) { return std::get<std::string>(cell); }
double cell_num(const Cell& cell) { return std::get<double>(cell); }

}  // namespace

TEST_CASE("preset parameters are the standard simulation set, literally") {
    for (ScenarioKind kind : {ScenarioKind::Fig3a, ScenarioKind::Fig3b, ScenarioKind::Fig4a,
                              ScenarioKind::Fig4b, ScenarioKind::Fig4c}) {
        const ModelParams p = preset_config(kind).params;
        CHECK(p.bs_antennas == 256);
        CHECK(p.tx_power_w == 5.0);
        CHECK(p.n_trx == 4);
        CHECK(p.noise_psd_w_hz == doctest::Approx(std::pow(10.0, -174.0 / 10.0) * 1e-3)
                                      .epsilon(1e-15));
        CHECK(p.cell_radius_m == 100.0);
        CHECK(p.pae_eta == 0.59);
        CHECK(p.p_lna_w == 24.3e-3);
        CHECK(p.lambda == 0.30);
        CHECK(p.p_td_w == 3.0);
        CHECK(p.k_bp == 1e8);
        CHECK(p.f0 == 4.0);
        CHECK(p.alpha == 0.2);
        CHECK(p.beta == 0.34);
        CHECK(p.temp_k == 300.0);
        CHECK((p.carrier_hz == 3.7e9 || p.carrier_hz == 28e9));
        CHECK((p.bandwidth_hz == 20e6 || p.bandwidth_hz == 500e6));
    }

    CHECK(preset_config(ScenarioKind::Fig4a).params.bandwidth_hz == 20e6);
    CHECK(preset_config(ScenarioKind::Fig4a).params.carrier_hz == 3.7e9);
    CHECK(preset_config(ScenarioKind::Fig4a).params.node == "14nm");
    CHECK(preset_config(ScenarioKind::Fig4b).params.bandwidth_hz == 500e6);
    CHECK(preset_config(ScenarioKind::Fig4b).params.carrier_hz == 28e9);
    CHECK(preset_config(ScenarioKind::Fig4b).params.node == "10nm");
    CHECK(preset_config(ScenarioKind::Fig4c).params.node == "5nm");
}

TEST_CASE("beta sweep reports the rate ceilings per node") {
    const RunResult result = run_scenario(preset_config(ScenarioKind::Fig3a));
    CHECK(result.data.columns ==
          std::vector<std::string>{"beta", "rmax_bps_5nm", "rmax_bps_10nm", "rmax_bps_14nm"});
    CHECK(result.data.rows.size() == 34);
    CHECK(cell_num(result.data.rows.front()[0]) == doctest::Approx(0.01));
    CHECK(cell_num(result.data.rows.back()[0]) == doctest::Approx(0.34));

    CHECK(summary_number(result, "rmax_bps_5nm") == doctest::Approx(9.7432320142455504e9));
    CHECK(summary_number(result, "rmax_bps_10nm") == doctest::Approx(2.17e9));
    CHECK(summary_number(result, "rmax_bps_14nm") == doctest::Approx(1.55e9));
}

TEST_CASE("duration grid headline numbers") {
    const RunResult result = run_scenario(preset_config(ScenarioKind::Fig3b));
    CHECK(result.data.columns ==
          std::vector<std::string>{"beta", "rate_bps", "rmax_bps", "duration_s"});
    CHECK(result.data.rows.size() == 3 * 29);

    CHECK(summary_number(result, "rmax_bps") == doctest::Approx(2.8656564747781031e9));
    CHECK(summary_number(result, "duration_s") == doctest::Approx(3.9719657682513542));

    // Rates below the ceiling are marked unbounded.
    bool saw_unbounded = false;
    for (const auto& row : result.data.rows) {
        if (std::isinf(cell_num(row[3]))) saw_unbounded = true;
    }
    CHECK(saw_unbounded);
}

TEST_CASE("snr sweeps locate the crossover") {
    const RunResult b = run_scenario(preset_config(ScenarioKind::Fig4b));
    CHECK(summary_number(b, "rmax_bps") == doctest::Approx(2.17e9));
    CHECK(summary_number(b, "crossover_db") == doctest::Approx(0.4975).epsilon(1e-3));
    CHECK(cell_text(b.data.rows.front()[4]) == "channel-limited");
    CHECK(cell_text(b.data.rows.back()[4]) == "terminal-limited");

    const RunResult c = run_scenario(preset_config(ScenarioKind::Fig4c));
    CHECK(summary_number(c, "crossover_db") == doctest::Approx(14.514).epsilon(1e-3));

    // At 20 MHz the ceiling exceeds the channel over the whole sweep.
    const RunResult a = run_scenario(preset_config(ScenarioKind::Fig4a));
    CHECK(summary_number(a, "rmax_bps") == doctest::Approx(1.55e9));
    for (const auto& row : a.data.rows) {
        CHECK(cell_text(row[4]) == "channel-limited");
        CHECK(cell_num(row[3]) <= cell_num(row[2]));  // r_phone <= r_max
        CHECK(cell_num(row[3]) <= cell_num(row[1]));  // r_phone <= r_downlink
    }
}

TEST_CASE("identical configs produce byte-identical csv") {
    for (ScenarioKind kind : {ScenarioKind::Fig3a, ScenarioKind::Fig3b, ScenarioKind::Fig4a,
                              ScenarioKind::Fig4b, ScenarioKind::Fig4c}) {
        const std::string first = render_csv(run_scenario(preset_config(kind)));
        const std::string second = render_csv(run_scenario(preset_config(kind)));
        CHECK(first == second);
        CHECK(!first.empty());
    }
}

TEST_CASE("json rendering carries full precision and the summary") {
    const RunResult result = run_scenario(preset_config(ScenarioKind::Fig3a));
    const auto doc = nlohmann::json::parse(render_json(result));
    CHECK(doc["scenario"] == "fig3a");
    CHECK(doc["columns"].size() == 4);
    CHECK(doc["rows"].size() == 34);
    CHECK(doc["summary"]["rmax_bps_5nm"].get<double>() ==
          doctest::Approx(9.7432320142455504e9).epsilon(1e-15));
}

TEST_CASE("overrides are validated with their field path") {
    ModelParams p;

    apply_override(p, "chip.beta", "0.2");
    CHECK(p.beta == 0.2);
    apply_override(p, "rate", "4Gbps");
    CHECK(p.offered_rate_bps == 4e9);
    apply_override(p, "link.bandwidth_hz", "500MHz");
    CHECK(p.bandwidth_hz == 5e8);
    apply_override(p, "beta", 0.1);  // shorthand
    CHECK(p.beta == 0.1);

    try {
        apply_override(p, "chip.beta", "0.5");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.field_path() == "chip.beta");
    }

    CHECK_THROWS_AS(apply_override(p, "chip.nonsense", "1"), ConfigError);
    CHECK_THROWS_AS(apply_override(p, "rf.pae_eta", "1.0"), ConfigError);
    CHECK_THROWS_AS(apply_override(p, "link.streams", "2.5"), ConfigError);
    CHECK_THROWS_AS(apply_override(p, "chip.node", "7nm"), ConfigError);
    CHECK_THROWS_AS(apply_override(p, "rate", "4 parsecs"), ConfigError);
}

TEST_CASE("config text parsing") {
    const ExperimentConfig config = parse_config(
        "# sweep beta for a fixed offered rate\n"
        "scenario = custom\n"
        "format = json\n"
        "sweep = beta 0.05 0.34 30\n"
        "chip.node = 5nm\n"
        "rate = 4Gbps\n"
        "link.snr_db = 10 # inline comment\n");
    CHECK(config.scenario == ScenarioKind::Custom);
    CHECK(config.format == OutputFormat::Json);
    REQUIRE(config.sweeps.size() == 1);
    CHECK(config.sweeps[0].name == "beta");
    CHECK(config.sweeps[0].points == 30);
    CHECK(config.params.offered_rate_bps == 4e9);
    CHECK(config.params.snr_db == 10.0);

    CHECK_THROWS_AS(parse_config("scenario\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("sweep = beta 0 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("scenario = fig9z\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("format = yaml\n"), ConfigError);
}

TEST_CASE("custom scenario sweeps and validates before running") {
    ExperimentConfig config;
    config.scenario = ScenarioKind::Custom;
    config.params.beta = 0.1;

    // No sweep axis.
    CHECK_THROWS_AS(run_scenario(config), ConfigError);

    // Degenerate sweep.
    config.sweeps = {SweepAxis{"beta", 0.1, 0.3, 1}};
    CHECK_THROWS_AS(run_scenario(config), ConfigError);

    // Out-of-range endpoint is rejected before any computation.
    config.sweeps = {SweepAxis{"beta", 0.1, 0.5, 5}};
    CHECK_THROWS_AS(run_scenario(config), ConfigError);

    config.sweeps = {SweepAxis{"beta", 0.05, 0.30, 6}};
    const RunResult result = run_scenario(config);
    CHECK(result.data.rows.size() == 6);
    CHECK(result.data.columns.front() == "beta");

    // Offered 4 Gbps: sustainable at high beta, bounded at low beta.
    const auto& first = result.data.rows.front();
    const auto& last = result.data.rows.back();
    const std::size_t duration_col = result.data.columns.size() - 1;
    CHECK(std::isfinite(cell_num(first[duration_col])));
    CHECK(std::isinf(cell_num(last[duration_col])));
}

TEST_CASE("two-axis custom sweep forms the cartesian product") {
    ExperimentConfig config;
    config.scenario = ScenarioKind::Custom;
    config.sweeps = {SweepAxis{"beta", 0.1, 0.3, 3}, SweepAxis{"snr_db", 0.0, 10.0, 2}};
    const RunResult result = run_scenario(config);
    CHECK(result.data.rows.size() == 6);
    CHECK(result.data.columns[0] == "beta");
    CHECK(result.data.columns[1] == "snr_db");

    config.sweeps.push_back(SweepAxis{"rate", 1e9, 2e9, 2});
    CHECK_THROWS_AS(run_scenario(config), ConfigError);
}

TEST_CASE("preset sweep axis can be adjusted but not replaced") {
    ExperimentConfig config = preset_config(ScenarioKind::Fig3a);
    config.sweeps = {SweepAxis{"chip.beta", 0.1, 0.3, 5}};
    CHECK(run_scenario(config).data.rows.size() == 5);

    config.sweeps = {SweepAxis{"rate", 1e9, 2e9, 5}};
    CHECK_THROWS_AS(run_scenario(config), ConfigError);
}
