// qme: four-stroke measurement-engine cycles on a single spin-1/2.
// Subcommands: run (single cycle), sweep (2-D grid over the measurement
// angles), slice (1-D cut), verify (invariant suite).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qme/verify.hpp"

namespace {

using qme::PropagatorChoice;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadConfig = 2;
constexpr int kExitIoError = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Mode { Single, Sweep, SliceAlpha, SlicePhi, Verify };

struct RunConfig {
    std::optional<Mode> mode;
    double omega_tau = qme::kDefaultOmegaTau;
    double beta_hw = 1.0;
    std::optional<double> alpha;
    std::optional<double> phi;
    int alpha_steps = 181;
    int phi_steps = 360;
    PropagatorChoice method{};
    std::string out_path = "-";  // "-" = stdout
    std::string format = "csv";
    unsigned workers = 1;
};

Mode parse_mode(const std::string& s) {
    if (s == "single") return Mode::Single;
    if (s == "sweep") return Mode::Sweep;
    if (s == "slice_alpha") return Mode::SliceAlpha;
    if (s == "slice_phi") return Mode::SlicePhi;
    if (s == "verify") return Mode::Verify;
    throw ConfigError("unknown mode '" + s + "'");
}

PropagatorChoice parse_method(const std::string& s) {
    if (s == "exact") return {PropagatorChoice::Kind::Exact, 0};
    if (s.rfind("sliced", 0) == 0) {
        PropagatorChoice m{PropagatorChoice::Kind::Sliced, qme::kDefaultSliceCount};
        if (s.size() > 6) {
            if (s[6] != ':') throw ConfigError("bad method '" + s + "'");
            m.slices = std::stoull(s.substr(7));
            if (m.slices == 0) throw ConfigError("method sliced:N needs N >= 1");
        }
        return m;
    }
    throw ConfigError("unknown method '" + s + "' (expected exact or sliced:N)");
}

void reject_unknown_keys(const nlohmann::json& obj, const char* where,
                         std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed)
            if (key == a) known = true;
        if (!known)
            throw ConfigError(std::string("unknown config key '") + key + "' in " +
                              where);
    }
}

void load_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
    reject_unknown_keys(j, "config", {"mode", "omega_tau", "beta_hw", "alpha", "phi",
                                      "grid", "method", "output"});
    if (j.contains("mode")) cfg.mode = parse_mode(j["mode"].get<std::string>());
    if (j.contains("omega_tau")) cfg.omega_tau = j["omega_tau"].get<double>();
    if (j.contains("beta_hw")) cfg.beta_hw = j["beta_hw"].get<double>();
    if (j.contains("alpha")) cfg.alpha = j["alpha"].get<double>();
    if (j.contains("phi")) cfg.phi = j["phi"].get<double>();
    if (j.contains("grid")) {
        const auto& g = j["grid"];
        reject_unknown_keys(g, "config.grid", {"alpha_steps", "phi_steps"});
        if (g.contains("alpha_steps")) cfg.alpha_steps = g["alpha_steps"].get<int>();
        if (g.contains("phi_steps")) cfg.phi_steps = g["phi_steps"].get<int>();
    }
    if (j.contains("method")) {
        const auto& m = j["method"];
        reject_unknown_keys(m, "config.method", {"kind", "slices"});
        const std::string kind = m.value("kind", "exact");
        if (kind == "exact") {
            cfg.method = {PropagatorChoice::Kind::Exact, 0};
        } else if (kind == "sliced") {
            cfg.method = {PropagatorChoice::Kind::Sliced,
                          m.value("slices", qme::kDefaultSliceCount)};
        } else {
            throw ConfigError("unknown method.kind '" + kind + "'");
        }
    }
    if (j.contains("output")) {
        const auto& o = j["output"];
        reject_unknown_keys(o, "config.output", {"path", "format"});
        if (o.contains("path")) cfg.out_path = o["path"].get<std::string>();
        if (o.contains("format")) cfg.format = o["format"].get<std::string>();
    }
}

void emit(const std::string& text, const std::string& path) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    out << text;
    if (!out) throw IoError("write failed: " + path);
}

std::string render(const qme::SweepResult& result, const std::string& format) {
    if (format == "json") return qme::to_json(result);
    if (format != "csv") throw ConfigError("unknown format '" + format + "'");
    std::ostringstream os;
    qme::write_csv(result, os);
    return os.str();
}

int run_single(const RunConfig& cfg) {
    const qme::CycleParams params{
        cfg.omega_tau, cfg.beta_hw,
        qme::MeasurementBasis{cfg.alpha.value_or(0.0), cfg.phi.value_or(0.0)},
        cfg.method};
    const qme::CycleRecord rec = qme::run_cycle(params);
    if (cfg.format == "csv") {
        qme::SweepResult single{cfg.omega_tau, cfg.beta_hw, cfg.method,
                                std::nullopt,  std::nullopt, {qme::row_from_record(rec)},
                                std::nullopt,  std::nullopt, std::nullopt};
        emit(render(single, "csv"), cfg.out_path);
    } else if (cfg.format == "json") {
        emit(qme::to_json(rec), cfg.out_path);
    } else {
        throw ConfigError("unknown format '" + cfg.format + "'");
    }
    return kExitOk;
}

int run_sweep(const RunConfig& cfg) {
    const qme::SweepResult result =
        qme::sweep(cfg.omega_tau, cfg.beta_hw, cfg.method,
                   qme::SweepGrid{cfg.alpha_steps, cfg.phi_steps}, cfg.workers);
    emit(render(result, cfg.format), cfg.out_path);
    return kExitOk;
}

int run_slice(const RunConfig& cfg, Mode mode) {
    qme::SliceSpec spec =
        mode == Mode::SliceAlpha
            // vary alpha at fixed phi
            ? qme::SliceSpec{qme::SliceSpec::Axis::Alpha, cfg.alpha_steps,
                             cfg.phi.value_or(0.0)}
            // vary phi at fixed alpha
            : qme::SliceSpec{qme::SliceSpec::Axis::Phi, cfg.phi_steps,
                             cfg.alpha.value_or(0.0)};
    const qme::SweepResult result =
        qme::slice(cfg.omega_tau, cfg.beta_hw, cfg.method, spec, cfg.workers);
    emit(render(result, cfg.format), cfg.out_path);
    return kExitOk;
}

int run_verify() {
    const qme::VerifyReport report = qme::run_verification();
    for (const auto& check : report.checks) {
        std::cout << (check.passed ? "[PASS] " : "[FAIL] ") << check.name
                  << "  observed=" << qme::format_double(check.observed)
                  << "  bound=" << qme::format_double(check.tolerance) << '\n';
    }
    std::cout << (report.all_passed() ? "verification passed\n"
                                      : "verification FAILED\n");
    return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

int dispatch(const RunConfig& cfg) {
    if (!cfg.mode) throw ConfigError("no mode: give a subcommand or a config 'mode'");
    switch (*cfg.mode) {
        case Mode::Single: return run_single(cfg);
        case Mode::Sweep: return run_sweep(cfg);
        case Mode::SliceAlpha:
        case Mode::SlicePhi: return run_slice(cfg, *cfg.mode);
        case Mode::Verify: return run_verify();
    }
    return kExitBadConfig;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spin-1/2 measurement-engine cycle explorer"};
    app.require_subcommand(0, 1);

    std::string config_path, method_str, grid_str;
    RunConfig flags;  // flag values sit here; merged over the config file
    bool have_alpha = false, have_phi = false, have_method = false;
    bool have_omega_tau = false, have_beta_hw = false, have_grid = false;
    bool have_out = false, have_format = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON config file");
        cmd->add_option("--omega-tau", flags.omega_tau, "dimensionless drive strength")
            ->trigger_on_parse()
            ->each([&](const std::string&) { have_omega_tau = true; });
        cmd->add_option("--beta-hw", flags.beta_hw, "dimensionless inverse temperature")
            ->trigger_on_parse()
            ->each([&](const std::string&) { have_beta_hw = true; });
        cmd->add_option("--alpha", flags.alpha, "measurement colatitude [0, pi]")
            ->each([&](const std::string&) { have_alpha = true; });
        cmd->add_option("--phi", flags.phi, "measurement longitude")
            ->each([&](const std::string&) { have_phi = true; });
        cmd->add_option("--grid", grid_str, "grid size AxP, e.g. 181x360")
            ->each([&](const std::string&) { have_grid = true; });
        cmd->add_option("--method", method_str, "propagator: exact | sliced:N")
            ->each([&](const std::string&) { have_method = true; });
        cmd->add_option("--out", flags.out_path, "output path ('-' = stdout)")
            ->each([&](const std::string&) { have_out = true; });
        cmd->add_option("--format", flags.format, "csv | json")
            ->each([&](const std::string&) { have_format = true; });
        cmd->add_option("--workers", flags.workers, "parallel sweep workers");
    };

    add_common(&app);
    CLI::App* cmd_run = app.add_subcommand("run", "single cycle, record to stdout");
    CLI::App* cmd_sweep = app.add_subcommand("sweep", "2-D grid over (alpha, phi)");
    CLI::App* cmd_slice =
        app.add_subcommand("slice", "1-D cut (--phi fixes phi and varies alpha; "
                                    "--alpha fixes alpha and varies phi)");
    CLI::App* cmd_verify = app.add_subcommand("verify", "run the invariant suite");
    for (CLI::App* c : {cmd_run, cmd_sweep, cmd_slice, cmd_verify}) add_common(c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitBadConfig;
    }

    try {
        RunConfig cfg;
        if (!config_path.empty()) load_config_file(config_path, cfg);

        // Flags override config-file values.
        if (have_omega_tau) cfg.omega_tau = flags.omega_tau;
        if (have_beta_hw) cfg.beta_hw = flags.beta_hw;
        if (have_alpha) cfg.alpha = flags.alpha;
        if (have_phi) cfg.phi = flags.phi;
        if (have_method) cfg.method = parse_method(method_str);
        if (have_out) cfg.out_path = flags.out_path;
        if (have_format) cfg.format = flags.format;
        cfg.workers = flags.workers;
        if (have_grid) {
            const auto x = grid_str.find('x');
            if (x == std::string::npos)
                throw ConfigError("bad --grid '" + grid_str + "' (expected AxP)");
            cfg.alpha_steps = std::stoi(grid_str.substr(0, x));
            cfg.phi_steps = std::stoi(grid_str.substr(x + 1));
        }

        if (cmd_run->parsed()) {
            cfg.mode = Mode::Single;
            if (cfg.format == "csv" && !have_format) cfg.format = "json";
        } else if (cmd_sweep->parsed()) {
            cfg.mode = Mode::Sweep;
        } else if (cmd_slice->parsed()) {
            if (have_alpha == have_phi)
                throw ConfigError("slice needs exactly one of --alpha or --phi");
            cfg.mode = have_phi ? Mode::SliceAlpha : Mode::SlicePhi;
        } else if (cmd_verify->parsed()) {
            cfg.mode = Mode::Verify;
        }
        return dispatch(cfg);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadConfig;
    }
}
