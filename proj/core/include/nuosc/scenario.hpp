#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "nuosc/matter.hpp"
#include "nuosc/osc_params.hpp"
#include "nuosc/pipeline.hpp"

namespace nuosc {

/// Raised for malformed or inconsistent configuration (CLI exit code 1).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when emitted records violate a numerical invariant (CLI exit code 2).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ScenarioKind {
    VacuumSweep,
    MatterSweep,
    DuneCpScan,
    DuneMatterCompare,
    CircuitValidate,
    ReadoutDemo,
};

ScenarioKind scenario_from_name(const std::string& name);  // throws ConfigError
const char* scenario_name(ScenarioKind kind);

enum class Backend { ClosedForm, Matrix4, Circuit };
enum class OutputFormat { Csv, Json };

struct SweepAxis {
    std::string kind = "L_over_E";  // "L_over_E" (km/GeV) or "E" (GeV)
    double min = 0.0;
    double max = 1.0;
    int steps = 2;
};

/// Fully resolved scenario description. Angles are radians here; the config
/// file and CLI accept degrees and convert at the boundary.
struct ScenarioConfig {
    ScenarioKind kind = ScenarioKind::VacuumSweep;
    OscParams params;
    SweepAxis axis;
    double L_km = 1285.0;
    double E_GeV = 0.5;
    std::vector<double> V_eV = {0.0};
    std::vector<double> delta_rad = {0.0};
    Backend backend = Backend::ClosedForm;
    std::vector<MatterMode> matter_modes = {MatterMode::Approx};
    AConvention a_convention = AConvention::PaperOperative;
    std::vector<Flavor> initials = {Flavor::e, Flavor::mu, Flavor::tau};
    double noise_sigma = 0.0;
    std::uint64_t seed = 1;
    int workers = 0;  // 0 = hardware concurrency
    int random_targets = 1000;  // circuit-validate sample count
};

/// One output row. `mode` is "vacuum", "approx" or "exact" for sweeps and
/// "truth"/"readout" for the readout demo.
struct SweepRecord {
    std::string scenario;
    std::string backend;
    std::string mode;
    std::string initial;
    std::string x_kind;
    double x = 0.0;
    double V_eV = 0.0;
    double delta_rad = 0.0;
    double P_e = 0.0;
    double P_mu = 0.0;
    double P_tau = 0.0;
};

/// Paper-figure defaults for each scenario.
ScenarioConfig default_config(ScenarioKind kind);

/// Defaults, overlaid with an optional JSON config file, overlaid with
/// `--set dotted.path=value` overrides (later entries win). Validates grid
/// and enum fields; throws ConfigError.
ScenarioConfig load_config(ScenarioKind kind, const std::string& config_path,
                           const std::vector<std::string>& overrides);

/// Runs a sweep scenario and returns records in deterministic order,
/// independent of worker count. Not valid for CircuitValidate.
std::vector<SweepRecord> run_scenario(const ScenarioConfig& cfg);

/// Synthesis validation report (JSON text): reconstruction errors and CNOT
/// counts for seeded random unitaries plus the default-parameter evolution
/// unitaries, and the circuit-vs-matrix backend agreement.
std::string circuit_validate_report(const ScenarioConfig& cfg);

/// Checks probability conservation on every noiseless record
/// (P_e+P_mu+P_tau = 1 ± 1e-9); throws ValidationError.
void validate_records(const std::vector<SweepRecord>& records, double noise_sigma);

std::string records_to_csv(const std::vector<SweepRecord>& records);
std::string records_to_json(const std::vector<SweepRecord>& records);

/// Atomic write: temp file in the destination directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace nuosc
