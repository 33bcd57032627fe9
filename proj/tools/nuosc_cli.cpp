// Command-line front end for the oscillation scenario engine.
//
//   nuosc <scenario> [--config file.json] [--set key.path=value ...]
//                    --out data.csv [--format csv|json]
//
// Scenarios: vacuum-sweep, matter-sweep, dune-cp-scan, dune-matter-compare,
// circuit-validate, readout-demo. Exit codes: 0 success, 1 config error,
// 2 numerical validation failure.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "nuosc/scenario.hpp"

namespace {

struct SubcommandArgs {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_path;
    std::string format = "csv";
};

int run_scenario_command(nuosc::ScenarioKind kind, const SubcommandArgs& args) {
    using namespace nuosc;
    try {
        if (args.format != "csv" && args.format != "json")
            throw ConfigError("--format must be csv or json");
        const ScenarioConfig cfg = load_config(kind, args.config_path, args.overrides);

        if (kind == ScenarioKind::CircuitValidate) {
            if (args.format == "csv")
                throw ConfigError("circuit-validate emits a JSON report; use --format json");
            write_file_atomic(args.out_path, circuit_validate_report(cfg));
            return 0;
        }

        const std::vector<SweepRecord> records = run_scenario(cfg);
        validate_records(records, cfg.noise_sigma);
        const std::string payload =
            args.format == "csv" ? records_to_csv(records) : records_to_json(records);
        write_file_atomic(args.out_path, payload);
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Three-flavor neutrino oscillation simulator"};
    app.require_subcommand(1);

    const std::vector<std::string> scenarios = {
        "vacuum-sweep",     "matter-sweep",     "dune-cp-scan",
        "dune-matter-compare", "circuit-validate", "readout-demo"};
    const std::vector<std::string> descriptions = {
        "Vacuum oscillation probabilities over an L/E grid",
        "Oscillations at fixed energy for several matter potentials",
        "nu_mu -> nu_e appearance vs energy for a set of CP phases",
        "Matter vs vacuum appearance curves at the long-baseline setup",
        "Circuit-synthesis validation report (JSON)",
        "Density-matrix readout emulation vs ground truth"};

    std::vector<SubcommandArgs> args(scenarios.size());
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
        CLI::App* sub = app.add_subcommand(scenarios[i], descriptions[i]);
        sub->add_option("--config", args[i].config_path, "JSON config file");
        sub->add_option("--set", args[i].overrides,
                        "Override a config entry, e.g. --set axis.steps=400");
        sub->add_option("--out", args[i].out_path, "Output path")->required();
        sub->add_option("--format", args[i].format, "csv or json (default csv)");
    }

    CLI11_PARSE(app, argc, argv);

    for (std::size_t i = 0; i < scenarios.size(); ++i) {
        if (app.get_subcommand(scenarios[i])->parsed())
            return run_scenario_command(nuosc::scenario_from_name(scenarios[i]), args[i]);
    }
    std::cerr << "no scenario selected\n";
    return 1;
}
