#include "nuosc/scenario.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <numbers>
#include <thread>

#include "nuosc/random.hpp"
#include "nuosc/synthesis.hpp"

namespace nuosc {

using nlohmann::ordered_json;

namespace {

constexpr double kPi = std::numbers::pi;

std::string shortest_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::runtime_error("float formatting failed");
    return std::string(buf, ptr);
}

std::uint64_t record_seed(std::uint64_t base, std::size_t index) {
    // splitmix-style stream so noise draws do not depend on worker layout
    std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
    int w = workers > 0 ? workers : static_cast<int>(std::thread::hardware_concurrency());
    if (w < 1) w = 1;
    if (n < static_cast<std::size_t>(w)) w = static_cast<int>(n);
    if (w <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto body = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(n);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (int t = 0; t < w; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

ScenarioKind scenario_from_name(const std::string& name) {
    if (name == "vacuum-sweep") return ScenarioKind::VacuumSweep;
    if (name == "matter-sweep") return ScenarioKind::MatterSweep;
    if (name == "dune-cp-scan") return ScenarioKind::DuneCpScan;
    if (name == "dune-matter-compare") return ScenarioKind::DuneMatterCompare;
    if (name == "circuit-validate") return ScenarioKind::CircuitValidate;
    if (name == "readout-demo") return ScenarioKind::ReadoutDemo;
    throw ConfigError("unknown scenario '" + name + "'");
}

const char* scenario_name(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::VacuumSweep: return "vacuum-sweep";
        case ScenarioKind::MatterSweep: return "matter-sweep";
        case ScenarioKind::DuneCpScan: return "dune-cp-scan";
        case ScenarioKind::DuneMatterCompare: return "dune-matter-compare";
        case ScenarioKind::CircuitValidate: return "circuit-validate";
        case ScenarioKind::ReadoutDemo: return "readout-demo";
    }
    return "?";
}

namespace {

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::ClosedForm: return "closed-form";
        case Backend::Matrix4: return "matrix4";
        case Backend::Circuit: return "circuit";
    }
    return "?";
}

Backend backend_from_name(const std::string& s) {
    if (s == "closed-form") return Backend::ClosedForm;
    if (s == "matrix4") return Backend::Matrix4;
    if (s == "circuit") return Backend::Circuit;
    throw ConfigError("unknown backend '" + s + "'");
}

Flavor flavor_from_name(const std::string& s) {
    if (s == "e") return Flavor::e;
    if (s == "mu") return Flavor::mu;
    if (s == "tau") return Flavor::tau;
    throw ConfigError("unknown initial flavor '" + s + "'");
}

}  // namespace

ScenarioConfig default_config(ScenarioKind kind) {
    ScenarioConfig cfg;
    cfg.kind = kind;
    switch (kind) {
        case ScenarioKind::VacuumSweep:
            cfg.axis = {"L_over_E", 0.0, 1600.0, 200};
            cfg.E_GeV = 1.0;
            break;
        case ScenarioKind::MatterSweep:
            cfg.axis = {"L_over_E", 0.0, 1600.0, 200};
            cfg.E_GeV = 0.5;
            cfg.V_eV = {0.0, 5e-5, 1e-4};
            break;
        case ScenarioKind::DuneCpScan:
            cfg.axis = {"E", 0.5, 8.0, 200};
            cfg.L_km = 1285.0;
            cfg.delta_rad = {0.0, kPi / 2.0, kPi, -kPi / 2.0};
            cfg.initials = {Flavor::mu};
            break;
        case ScenarioKind::DuneMatterCompare:
            cfg.axis = {"E", 0.5, 8.0, 200};
            cfg.L_km = 1285.0;
            cfg.V_eV = {0.0, 1e-4};
            cfg.delta_rad = {0.0, -kPi / 2.0};
            cfg.initials = {Flavor::mu};
            break;
        case ScenarioKind::CircuitValidate:
            cfg.random_targets = 1000;
            break;
        case ScenarioKind::ReadoutDemo:
            cfg.axis = {"L_over_E", 0.0, 1600.0, 200};
            cfg.E_GeV = 1.0;
            cfg.backend = Backend::Matrix4;
            break;
    }
    return cfg;
}

namespace {

ordered_json config_to_json(const ScenarioConfig& cfg) {
    ordered_json j;
    j["scenario"] = scenario_name(cfg.kind);
    j["params"] = {
        {"theta12_deg", cfg.params.theta12 * 180.0 / kPi},
        {"theta13_deg", cfg.params.theta13 * 180.0 / kPi},
        {"theta23_deg", cfg.params.theta23 * 180.0 / kPi},
        {"delta_deg", cfg.params.delta * 180.0 / kPi},
        {"dm2_21", cfg.params.dm2_21},
        {"dm2_31", cfg.params.dm2_31},
        {"antineutrino", cfg.params.antineutrino},
    };
    j["axis"] = {{"kind", cfg.axis.kind}, {"min", cfg.axis.min}, {"max", cfg.axis.max},
                 {"steps", cfg.axis.steps}};
    j["L_km"] = cfg.L_km;
    j["E_GeV"] = cfg.E_GeV;
    j["V_eV"] = cfg.V_eV;
    ordered_json deltas = ordered_json::array();
    for (double d : cfg.delta_rad) deltas.push_back(d * 180.0 / kPi);
    j["delta_deg"] = deltas;
    j["backend"] = backend_name(cfg.backend);
    j["matter_mode"] = cfg.matter_modes.size() == 2      ? "both"
                       : cfg.matter_modes[0] == MatterMode::Exact ? "exact"
                                                                  : "approx";
    j["a_convention"] = cfg.a_convention == AConvention::PaperOperative ? "paper-operative"
                                                                        : "literal-2ev";
    ordered_json inits = ordered_json::array();
    for (Flavor f : cfg.initials) inits.push_back(flavor_name(f));
    j["initials"] = inits;
    j["noise_sigma"] = cfg.noise_sigma;
    j["seed"] = cfg.seed;
    j["workers"] = cfg.workers;
    j["random_targets"] = cfg.random_targets;
    return j;
}

double require_number(const ordered_json& j, const std::string& where) {
    if (!j.is_number()) throw ConfigError(where + " must be a number");
    return j.get<double>();
}

ScenarioConfig config_from_json(ScenarioKind kind, const ordered_json& j) {
    ScenarioConfig cfg;
    cfg.kind = kind;
    try {
        if (j.contains("scenario") && scenario_from_name(j["scenario"]) != kind)
            throw ConfigError("config is for scenario '" + j["scenario"].get<std::string>() +
                              "', requested '" + scenario_name(kind) + "'");
        const auto& p = j.at("params");
        if (p.contains("theta12_deg")) cfg.params.theta12 = deg_to_rad(require_number(p["theta12_deg"], "theta12_deg"));
        if (p.contains("theta13_deg")) cfg.params.theta13 = deg_to_rad(require_number(p["theta13_deg"], "theta13_deg"));
        if (p.contains("theta23_deg")) cfg.params.theta23 = deg_to_rad(require_number(p["theta23_deg"], "theta23_deg"));
        if (p.contains("delta_deg")) cfg.params.delta = deg_to_rad(require_number(p["delta_deg"], "delta_deg"));
        if (p.contains("delta_rad")) cfg.params.delta = require_number(p["delta_rad"], "delta_rad");
        if (p.contains("dm2_21")) cfg.params.dm2_21 = require_number(p["dm2_21"], "dm2_21");
        if (p.contains("dm2_31")) cfg.params.dm2_31 = require_number(p["dm2_31"], "dm2_31");
        if (p.contains("antineutrino")) cfg.params.antineutrino = p["antineutrino"].get<bool>();

        const auto& ax = j.at("axis");
        cfg.axis.kind = ax.at("kind").get<std::string>();
        cfg.axis.min = require_number(ax.at("min"), "axis.min");
        cfg.axis.max = require_number(ax.at("max"), "axis.max");
        cfg.axis.steps = ax.at("steps").get<int>();

        cfg.L_km = require_number(j.at("L_km"), "L_km");
        cfg.E_GeV = require_number(j.at("E_GeV"), "E_GeV");
        cfg.V_eV = j.at("V_eV").get<std::vector<double>>();
        cfg.delta_rad.clear();
        if (j.contains("delta_rad")) {
            cfg.delta_rad = j["delta_rad"].get<std::vector<double>>();
        } else {
            for (double d : j.at("delta_deg").get<std::vector<double>>())
                cfg.delta_rad.push_back(deg_to_rad(d));
        }
        cfg.backend = backend_from_name(j.at("backend").get<std::string>());
        const std::string mode = j.at("matter_mode").get<std::string>();
        if (mode == "approx") cfg.matter_modes = {MatterMode::Approx};
        else if (mode == "exact") cfg.matter_modes = {MatterMode::Exact};
        else if (mode == "both") cfg.matter_modes = {MatterMode::Approx, MatterMode::Exact};
        else throw ConfigError("unknown matter_mode '" + mode + "'");
        const std::string conv = j.at("a_convention").get<std::string>();
        if (conv == "paper-operative") cfg.a_convention = AConvention::PaperOperative;
        else if (conv == "literal-2ev") cfg.a_convention = AConvention::Literal2EV;
        else throw ConfigError("unknown a_convention '" + conv + "'");
        cfg.initials.clear();
        for (const auto& name : j.at("initials").get<std::vector<std::string>>())
            cfg.initials.push_back(flavor_from_name(name));
        cfg.noise_sigma = require_number(j.at("noise_sigma"), "noise_sigma");
        cfg.seed = j.at("seed").get<std::uint64_t>();
        cfg.workers = j.at("workers").get<int>();
        cfg.random_targets = j.at("random_targets").get<int>();
    } catch (const ordered_json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }

    if (cfg.axis.kind != "L_over_E" && cfg.axis.kind != "E")
        throw ConfigError("axis.kind must be 'L_over_E' or 'E'");
    if (!(cfg.axis.min < cfg.axis.max)) throw ConfigError("axis.min must be < axis.max");
    if (cfg.axis.steps < 2) throw ConfigError("axis.steps must be >= 2");
    if (cfg.axis.kind == "E" && !(cfg.axis.min > 0.0))
        throw ConfigError("energy axis must start above 0");
    if (!(cfg.E_GeV > 0.0)) throw ConfigError("E_GeV must be > 0");
    if (cfg.L_km < 0.0) throw ConfigError("L_km must be >= 0");
    if (cfg.V_eV.empty()) throw ConfigError("V_eV must be non-empty");
    for (double v : cfg.V_eV)
        if (v < 0.0) throw ConfigError("V_eV entries must be >= 0");
    if (cfg.delta_rad.empty()) throw ConfigError("delta list must be non-empty");
    if (cfg.initials.empty()) throw ConfigError("initials must be non-empty");
    if (cfg.noise_sigma < 0.0) throw ConfigError("noise_sigma must be >= 0");
    if (cfg.workers < 0) throw ConfigError("workers must be >= 0");
    if (cfg.random_targets < 1) throw ConfigError("random_targets must be >= 1");
    return cfg;
}

void apply_override(ordered_json& j, const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ConfigError("override must look like key.path=value: '" + spec + "'");
    std::string path = spec.substr(0, eq);
    const std::string value = spec.substr(eq + 1);
    for (auto& ch : path)
        if (ch == '.') ch = '/';
    ordered_json parsed;
    try {
        parsed = ordered_json::parse(value);
    } catch (const ordered_json::exception&) {
        parsed = value;  // bare strings stay strings
    }
    try {
        j[ordered_json::json_pointer("/" + path)] = parsed;
    } catch (const ordered_json::exception& e) {
        throw ConfigError("cannot apply override '" + spec + "': " + e.what());
    }
}

}  // namespace

ScenarioConfig load_config(ScenarioKind kind, const std::string& config_path,
                           const std::vector<std::string>& overrides) {
    ordered_json merged = config_to_json(default_config(kind));
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw ConfigError("cannot open config file '" + config_path + "'");
        ordered_json file;
        try {
            in >> file;
        } catch (const ordered_json::exception& e) {
            throw ConfigError("config parse error in '" + config_path + "': " + e.what());
        }
        if (!file.is_object()) throw ConfigError("config root must be an object");
        // "delta_deg"/"delta_rad" and the params angle keys are alternatives;
        // drop the default spelling when the file uses the other one
        if (file.contains("delta_rad")) merged.erase("delta_deg");
        merged.update(file, true);
    }
    for (const auto& spec : overrides) {
        if (spec.rfind("delta_rad=", 0) == 0) merged.erase("delta_deg");
        apply_override(merged, spec);
    }
    return config_from_json(kind, merged);
}

namespace {

struct Job {
    Flavor initial;
    double V = 0.0;
    MatterMode mode = MatterMode::Approx;
    double delta = 0.0;
    double x = 0.0;
};

double axis_value(const SweepAxis& axis, int i) {
    return axis.min + (axis.max - axis.min) * static_cast<double>(i) /
                          static_cast<double>(axis.steps - 1);
}

Baseline job_baseline(const ScenarioConfig& cfg, double x) {
    if (cfg.axis.kind == "E") return Baseline(cfg.L_km, x);
    return Baseline(x * cfg.E_GeV, cfg.E_GeV);
}

Eigen::Vector3d backend_probabilities(const ScenarioConfig& cfg, const OscParams& p,
                                      const Baseline& b, Flavor initial) {
    switch (cfg.backend) {
        case Backend::ClosedForm: return probabilities_closed_form(p, b, initial);
        case Backend::Matrix4:
            return run_pipeline(p, b, initial, PipelineBackend::Matrix).head<3>();
        case Backend::Circuit:
            return run_pipeline(p, b, initial, PipelineBackend::Circuit).head<3>();
    }
    throw std::logic_error("unreachable backend");
}

SweepRecord make_record(const ScenarioConfig& cfg, const Job& job) {
    const Baseline b = job_baseline(cfg, job.x);
    const OscParams p = cfg.params.with_delta(job.delta);
    Eigen::Vector3d probs;
    std::string mode;
    if (job.V == 0.0) {
        probs = backend_probabilities(cfg, p, b, job.initial);
        mode = "vacuum";
    } else if (job.mode == MatterMode::Approx) {
        const MatterContext ctx(b.E_GeV, job.V, cfg.a_convention);
        const OscParams eff = approx_effective_params(p, ctx).as_osc_params(p);
        probs = backend_probabilities(cfg, eff, b, job.initial);
        mode = "approx";
    } else {
        const MatterContext ctx(b.E_GeV, job.V, cfg.a_convention);
        probs = matter_probabilities(p, ctx, b.L_km, job.initial, MatterMode::Exact);
        mode = "exact";
    }
    SweepRecord rec;
    rec.scenario = scenario_name(cfg.kind);
    rec.backend = backend_name(cfg.backend);
    rec.mode = mode;
    rec.initial = flavor_name(job.initial);
    rec.x_kind = cfg.axis.kind;
    rec.x = job.x;
    rec.V_eV = job.V;
    rec.delta_rad = job.delta;
    rec.P_e = probs(0);
    rec.P_mu = probs(1);
    rec.P_tau = probs(2);
    return rec;
}

std::vector<SweepRecord> run_sweep(const ScenarioConfig& cfg) {
    std::vector<Job> jobs;
    for (Flavor initial : cfg.initials)
        for (double V : cfg.V_eV) {
            const std::vector<MatterMode> modes =
                V == 0.0 ? std::vector<MatterMode>{MatterMode::Approx} : cfg.matter_modes;
            for (MatterMode mode : modes)
                for (double delta : cfg.delta_rad)
                    for (int i = 0; i < cfg.axis.steps; ++i)
                        jobs.push_back({initial, V, mode, delta, axis_value(cfg.axis, i)});
        }

    std::vector<SweepRecord> records(jobs.size());
    parallel_for(jobs.size(), cfg.workers,
                 [&](std::size_t i) { records[i] = make_record(cfg, jobs[i]); });
    return records;
}

std::vector<SweepRecord> run_readout_demo(const ScenarioConfig& cfg) {
    struct RJob {
        Flavor initial;
        double x;
        std::size_t index;
    };
    std::vector<RJob> jobs;
    for (Flavor initial : cfg.initials)
        for (int i = 0; i < cfg.axis.steps; ++i)
            jobs.push_back({initial, axis_value(cfg.axis, i), jobs.size()});

    std::vector<SweepRecord> records(2 * jobs.size());
    parallel_for(jobs.size(), cfg.workers, [&](std::size_t i) {
        const RJob& job = jobs[i];
        const Baseline b = job_baseline(cfg, job.x);
        OscParams p = cfg.params;
        double V = cfg.V_eV.front();
        if (V > 0.0)
            p = approx_effective_params(p, MatterContext(b.E_GeV, V, cfg.a_convention))
                    .as_osc_params(p);
        Vector4 state = Vector4::Zero();
        state(static_cast<int>(job.initial)) = 1.0;
        state = pipeline_unitary(p, b) * state;
        const DensityMatrix rho = DensityMatrix::from_state(state);

        SweepRecord truth;
        truth.scenario = scenario_name(cfg.kind);
        truth.backend = backend_name(cfg.backend);
        truth.mode = "truth";
        truth.initial = flavor_name(job.initial);
        truth.x_kind = cfg.axis.kind;
        truth.x = job.x;
        truth.V_eV = V;
        truth.delta_rad = cfg.params.delta;
        truth.P_e = rho.rho(0, 0).real();
        truth.P_mu = rho.rho(1, 1).real();
        truth.P_tau = rho.rho(2, 2).real();

        const SpectralReadout r =
            noisy_readout(rho, cfg.noise_sigma, record_seed(cfg.seed, job.index));
        const ExtractedProbabilities ex = extract_probabilities(r);
        SweepRecord measured = truth;
        measured.mode = "readout";
        measured.P_e = ex.p_e;
        measured.P_mu = ex.p_mu;
        measured.P_tau = ex.p_tau;

        records[2 * i] = truth;
        records[2 * i + 1] = measured;
    });
    return records;
}

}  // namespace

std::vector<SweepRecord> run_scenario(const ScenarioConfig& cfg) {
    switch (cfg.kind) {
        case ScenarioKind::VacuumSweep:
        case ScenarioKind::MatterSweep:
        case ScenarioKind::DuneCpScan:
        case ScenarioKind::DuneMatterCompare:
            return run_sweep(cfg);
        case ScenarioKind::ReadoutDemo:
            return run_readout_demo(cfg);
        case ScenarioKind::CircuitValidate:
            throw ConfigError("circuit-validate produces a report, not a record stream");
    }
    throw std::logic_error("unreachable scenario kind");
}

std::string circuit_validate_report(const ScenarioConfig& cfg) {
    std::mt19937_64 gen(cfg.seed);
    double max_err = 0.0;
    int max_cnots = 0;
    for (int i = 0; i < cfg.random_targets; ++i) {
        const Matrix4 u = random_unitary4(gen);
        const Circuit circ = synthesize(u);
        max_err = std::max(max_err, phase_aligned_distance(u, circuit_unitary(circ)));
        max_cnots = std::max(max_cnots, circ.cnot_count());
    }

    ordered_json cases = ordered_json::array();
    double max_pipeline_err = 0.0;
    for (double delta : {0.0, kPi / 2.0, kPi, -kPi / 2.0}) {
        for (double loe : {250.0, 500.0, 1000.0, 1285.0}) {
            const OscParams p = cfg.params.with_delta(delta);
            const Baseline b = Baseline::from_l_over_e(loe);
            const Matrix4 u = pipeline_unitary(p, b);
            const Circuit circ = synthesize(u);
            const double err = phase_aligned_distance(u, circuit_unitary(circ));
            max_pipeline_err = std::max(max_pipeline_err, err);
            cases.push_back({{"delta_rad", delta},
                             {"L_over_E", loe},
                             {"reconstruction_error", err},
                             {"cnot_count", circ.cnot_count()},
                             {"rotation_count", circ.rotation_count()}});
        }
    }

    double backend_gap = 0.0;
    std::uniform_real_distribution<double> loe_dist(0.0, 1600.0);
    std::uniform_real_distribution<double> delta_dist(-kPi, kPi);
    for (int i = 0; i < 50; ++i) {
        const OscParams p = cfg.params.with_delta(delta_dist(gen));
        const Baseline b = Baseline::from_l_over_e(loe_dist(gen));
        for (Flavor initial : {Flavor::e, Flavor::mu, Flavor::tau}) {
            const Eigen::Vector4d pm = run_pipeline(p, b, initial, PipelineBackend::Matrix);
            const Eigen::Vector4d pc = run_pipeline(p, b, initial, PipelineBackend::Circuit);
            backend_gap = std::max(backend_gap, (pm - pc).cwiseAbs().maxCoeff());
        }
    }

    ordered_json rep;
    rep["scenario"] = scenario_name(cfg.kind);
    rep["seed"] = cfg.seed;
    rep["random_targets"] = cfg.random_targets;
    rep["max_reconstruction_error"] = max_err;
    rep["max_cnot_count"] = max_cnots;
    rep["pipeline_cases"] = cases;
    rep["max_pipeline_reconstruction_error"] = max_pipeline_err;
    rep["backend_agreement_max_abs_diff"] = backend_gap;
    return rep.dump(2) + "\n";
}

void validate_records(const std::vector<SweepRecord>& records, double noise_sigma) {
    for (const SweepRecord& r : records) {
        if (noise_sigma > 0.0 && r.mode == "readout") continue;
        const double sum = r.P_e + r.P_mu + r.P_tau;
        if (std::abs(sum - 1.0) > 1e-9)
            throw ValidationError("probability conservation violated at x = " +
                                  shortest_double(r.x) + " (sum = " + shortest_double(sum) + ")");
        for (double p : {r.P_e, r.P_mu, r.P_tau})
            if (p < 0.0 || p > 1.0)
                throw ValidationError("probability outside [0,1] at x = " + shortest_double(r.x));
    }
}

std::string records_to_csv(const std::vector<SweepRecord>& records) {
    std::string out = "scenario,backend,mode,initial,x_kind,x,V_eV,delta_rad,P_e,P_mu,P_tau\n";
    for (const SweepRecord& r : records) {
        out += r.scenario + ',' + r.backend + ',' + r.mode + ',' + r.initial + ',' + r.x_kind +
               ',' + shortest_double(r.x) + ',' + shortest_double(r.V_eV) + ',' +
               shortest_double(r.delta_rad) + ',' + shortest_double(r.P_e) + ',' +
               shortest_double(r.P_mu) + ',' + shortest_double(r.P_tau) + '\n';
    }
    return out;
}

std::string records_to_json(const std::vector<SweepRecord>& records) {
    ordered_json arr = ordered_json::array();
    for (const SweepRecord& r : records) {
        arr.push_back({{"scenario", r.scenario},
                       {"backend", r.backend},
                       {"mode", r.mode},
                       {"initial", r.initial},
                       {"x_kind", r.x_kind},
                       {"x", r.x},
                       {"V_eV", r.V_eV},
                       {"delta_rad", r.delta_rad},
                       {"P_e", r.P_e},
                       {"P_mu", r.P_mu},
                       {"P_tau", r.P_tau}});
    }
    return arr.dump(2) + "\n";
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write to '" + tmp.string() + "'");
        out << content;
        if (!out.good()) throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
    fs::rename(tmp, target);
}

}  // namespace nuosc
