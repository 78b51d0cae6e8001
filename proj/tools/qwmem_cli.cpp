// qwmem command-line front end.
//
// Exit codes: 0 success, 2 usage/config error, 3 simulation error.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qwmem/experiment.hpp"
#include "qwmem/verify.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

struct Flags {
    std::string config_path;
    std::string output = "-";

    CLI::Option* delta = nullptr;
    CLI::Option* eta = nullptr;
    CLI::Option* delta_rad = nullptr;
    CLI::Option* eta_rad = nullptr;
    CLI::Option* alpha = nullptr;
    CLI::Option* beta = nullptr;
    CLI::Option* theta = nullptr;
    CLI::Option* theta_rad = nullptr;
    CLI::Option* seed = nullptr;
    CLI::Option* steps = nullptr;
    CLI::Option* encoding = nullptr;
    CLI::Option* correct = nullptr;
    CLI::Option* axis = nullptr;
    CLI::Option* grid = nullptr;
    CLI::Option* grid_rad = nullptr;
    CLI::Option* fixed = nullptr;
    CLI::Option* fixed_rad = nullptr;
    CLI::Option* windows = nullptr;
    CLI::Option* seeds = nullptr;

    std::string delta_s, eta_s, theta_s, fixed_s, grid_s, encoding_s, axis_s, steps_s, seeds_s;
    double delta_r = 0, eta_r = 0, theta_r = 0, fixed_r = 0;
    std::vector<double> alpha_v, beta_v, grid_r;
    std::uint64_t seed_v = 0;
    bool correct_v = false;
    std::vector<int> windows_v;
};

void add_qubit_flags(CLI::App* cmd, Flags& f) {
    f.delta = cmd->add_option("--delta", f.delta_s, "qubit angle delta, multiple of pi (e.g. 1/6)");
    f.eta = cmd->add_option("--eta", f.eta_s, "qubit phase eta, multiple of pi");
    f.delta_rad = cmd->add_option("--delta-rad", f.delta_r, "qubit angle delta in radians");
    f.eta_rad = cmd->add_option("--eta-rad", f.eta_r, "qubit phase eta in radians");
    f.alpha = cmd->add_option("--alpha", f.alpha_v, "amplitude of |0> as RE IM")->expected(2);
    f.beta = cmd->add_option("--beta", f.beta_v, "amplitude of |1> as RE IM")->expected(2);
}

void add_schedule_flags(CLI::App* cmd, Flags& f, bool with_seed) {
    f.theta = cmd->add_option("--theta", f.theta_s, "constant coin angle, multiple of pi");
    f.theta_rad = cmd->add_option("--theta-rad", f.theta_r, "constant coin angle in radians");
    if (with_seed) {
        f.seed = cmd->add_option("--seed", f.seed_v, "temporal disorder seed");
    }
}

void add_protocol_flags(CLI::App* cmd, Flags& f) {
    f.encoding = cmd->add_option("--encoding", f.encoding_s, "none | hadamard")
                     ->check(CLI::IsMember({"none", "hadamard"}));
    f.correct = cmd->add_flag("--correct,!--no-correct", f.correct_v,
                              "undo the accumulated phase after decoding");
}

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("--config", f.config_path,
                    "JSON config, or an emitted report/CSV to re-run; flags override it");
    cmd->add_option("-o,--output", f.output, "output path, '-' for stdout");
    f.steps = cmd->add_option("--steps", f.steps_s, "step counts, e.g. 6 or 0..12 or 3,6,9");
}

bool given(const CLI::Option* opt) { return opt != nullptr && opt->count() > 0; }

void apply_flags(const Flags& f, qwmem::ExperimentConfig& cfg) {
    using namespace qwmem;
    if (given(f.delta)) cfg.qubit.delta = parse_pi_multiple(f.delta_s);
    if (given(f.eta)) cfg.qubit.eta = parse_pi_multiple(f.eta_s);
    if (given(f.delta_rad)) cfg.qubit.delta = f.delta_r;
    if (given(f.eta_rad)) cfg.qubit.eta = f.eta_r;
    if (given(f.delta) || given(f.eta) || given(f.delta_rad) || given(f.eta_rad)) {
        cfg.qubit.amplitudes.reset();
    }
    if (given(f.alpha) != given(f.beta)) {
        throw ConfigError("--alpha and --beta must be given together");
    }
    if (given(f.alpha)) {
        cfg.qubit.amplitudes =
            std::pair{Complex(f.alpha_v[0], f.alpha_v[1]), Complex(f.beta_v[0], f.beta_v[1])};
    }
    if (given(f.theta) || given(f.theta_rad)) {
        cfg.schedule.kind = ScheduleKind::Constant;
        cfg.schedule.theta = given(f.theta) ? parse_pi_multiple(f.theta_s) : f.theta_r;
    }
    if (given(f.seed)) {
        if (given(f.theta) || given(f.theta_rad)) {
            throw ConfigError("--seed (disorder) and --theta (constant coin) are exclusive");
        }
        cfg.schedule.kind = ScheduleKind::TemporalDisorder;
        cfg.schedule.seed = f.seed_v;
    }
    if (given(f.steps)) {
        cfg.steps.clear();
        for (auto v : parse_index_list(f.steps_s)) {
            cfg.steps.push_back(static_cast<unsigned>(v));
        }
    }
    if (given(f.encoding)) {
        cfg.encoding = f.encoding_s == "hadamard" ? Encoding::Hadamard : Encoding::None;
    }
    if (given(f.correct)) cfg.phase_correction = f.correct_v;
    if (given(f.axis)) cfg.axis = f.axis_s == "eta" ? SweepAxis::Eta : SweepAxis::Delta;
    if (given(f.grid) && given(f.grid_rad)) {
        throw ConfigError("--grid and --grid-rad are exclusive");
    }
    if (given(f.grid)) cfg.grid = parse_pi_grid(f.grid_s);
    if (given(f.grid_rad)) cfg.grid = f.grid_r;
    if (given(f.fixed)) cfg.fixed = parse_pi_multiple(f.fixed_s);
    if (given(f.fixed_rad)) cfg.fixed = f.fixed_r;
    if (given(f.windows)) cfg.windows = f.windows_v;
    if (given(f.seeds)) cfg.seeds = parse_index_list(f.seeds_s);
}

int write_artifacts(const std::vector<qwmem::Artifact>& artifacts, const std::string& output) {
    if (output == "-") {
        if (artifacts.size() > 1) {
            throw qwmem::ConfigError("several output files; pass --output PATH");
        }
        std::cout << artifacts.front().content;
        return 0;
    }
    for (const auto& a : artifacts) {
        const auto path = qwmem::artifact_path(output, a.suffix);
        std::ofstream out(path, std::ios::binary);
        out << a.content;
        if (!out) {
            std::cerr << "error: cannot write " << path << '\n';
            return kExitRuntime;
        }
        std::cerr << "wrote " << path.string() << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum-walk quantum memory simulator"};
    app.set_version_flag("--version", std::string(qwmem::kToolVersion));
    app.require_subcommand(1);

    // One flag set per subcommand; only the parsed one is read.
    std::map<const CLI::App*, Flags> flags;

    auto* evolve = app.add_subcommand("evolve", "position distribution CSV per step count");
    {
        Flags& f = flags[evolve];
        add_common(evolve, f);
        add_qubit_flags(evolve, f);
        add_schedule_flags(evolve, f, true);
        f.encoding = evolve->add_option("--encoding", f.encoding_s, "none | hadamard")
                         ->check(CLI::IsMember({"none", "hadamard"}));
    }

    auto* memory = app.add_subcommand("memory", "store/retrieve report (JSON)");
    {
        Flags& f = flags[memory];
        add_common(memory, f);
        add_qubit_flags(memory, f);
        add_schedule_flags(memory, f, true);
        add_protocol_flags(memory, f);
    }

    auto* sweep = app.add_subcommand("sweep", "P(|0>) of the retrieved state over a grid (CSV)");
    {
        Flags& f = flags[sweep];
        add_common(sweep, f);
        add_schedule_flags(sweep, f, false);
        f.axis = sweep->add_option("--axis", f.axis_s, "delta | eta")
                     ->check(CLI::IsMember({"delta", "eta"}));
        f.grid = sweep->add_option("--grid", f.grid_s, "start:stop:count in multiples of pi");
        f.grid_rad = sweep->add_option("--grid-rad", f.grid_r, "explicit grid in radians");
        f.fixed = sweep->add_option("--fixed", f.fixed_s, "the other angle, multiple of pi");
        f.fixed_rad = sweep->add_option("--fixed-rad", f.fixed_r, "the other angle in radians");
    }

    auto* eaves = app.add_subcommand("eavesdrop", "capture vs window half-width (CSV)");
    {
        Flags& f = flags[eaves];
        add_common(eaves, f);
        add_qubit_flags(eaves, f);
        add_schedule_flags(eaves, f, true);
        add_protocol_flags(eaves, f);
        f.windows =
            eaves->add_option("--windows", f.windows_v, "window half-widths (default 0..t)");
    }

    auto* ensemble = app.add_subcommand("ensemble", "disorder ensemble statistics (JSON)");
    {
        Flags& f = flags[ensemble];
        add_common(ensemble, f);
        add_qubit_flags(ensemble, f);
        add_protocol_flags(ensemble, f);
        f.seeds = ensemble->add_option("--seeds", f.seeds_s, "seeds, e.g. 1..100");
    }

    auto* verify = app.add_subcommand("verify", "run the dense-oracle differential suite");
    int verify_cases = 100;
    verify->add_option("--cases", verify_cases, "number of random disorder schedules");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    if (verify->parsed()) {
        const auto checks = qwmem::run_differential_suite(verify_cases);
        return qwmem::print_checks(checks, std::cout) == 0 ? 0 : kExitRuntime;
    }

    qwmem::ExperimentConfig cfg;
    try {
        const CLI::App* sub = app.get_subcommands().front();
        const Flags& f = flags.at(sub);
        if (!f.config_path.empty()) {
            cfg = qwmem::config_from_json(qwmem::load_config_json(f.config_path));
        }
        cfg.command = qwmem::command_from_string(sub->get_name());
        apply_flags(f, cfg);
        cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        return write_artifacts(qwmem::run_experiment(cfg),
                               flags.at(app.get_subcommands().front()).output);
    } catch (const qwmem::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "simulation error: " << e.what() << '\n';
        return kExitRuntime;
    }
}
