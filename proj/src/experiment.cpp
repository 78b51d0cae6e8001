#include "qwmem/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qwmem/analysis.hpp"
#include "qwmem/walk_engine.hpp"

namespace qwmem {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr std::string_view kConfigPrefix = "# config: ";

ordered_json complex_json(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json qubit_json(const Qubit& q) {
    return ordered_json{{"alpha", complex_json(q.alpha)}, {"beta", complex_json(q.beta)}};
}

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw ConfigError("complex amplitude must be a [re, im] pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

std::string csv_preamble(const ExperimentConfig& cfg) {
    std::string out = "# ";
    out += kToolName;
    out += ' ';
    out += kToolVersion;
    out += '\n';
    out += kConfigPrefix;
    out += to_json(cfg).dump();
    out += '\n';
    return out;
}

std::string json_report(const ExperimentConfig& cfg, ordered_json body) {
    ordered_json report{{"tool", kToolName}, {"version", kToolVersion}, {"config", to_json(cfg)}};
    for (auto& [key, value] : body.items()) {
        report[key] = std::move(value);
    }
    return report.dump(2) + "\n";
}

unsigned single_step_count(const ExperimentConfig& cfg) {
    if (cfg.steps.size() != 1) {
        throw ConfigError(to_string(cfg.command) + " needs exactly one step count");
    }
    return cfg.steps.front();
}

MemoryConfig memory_config(const ExperimentConfig& cfg, unsigned t) {
    return {cfg.schedule.build(t), cfg.encoding, cfg.phase_correction};
}

std::vector<Artifact> run_evolve(const ExperimentConfig& cfg) {
    std::vector<Artifact> out;
    const Qubit stored = encode(cfg.qubit.resolve(), cfg.encoding);
    for (unsigned t : cfg.steps) {
        const WalkState s = evolve(stored, cfg.schedule.build(t));
        std::string csv = csv_preamble(cfg);
        csv += "# steps: " + std::to_string(t) + "\n";
        csv += "j,probability\n";
        for (const auto& [j, p] : position_distribution(s)) {
            csv += std::to_string(j) + "," + format_double(p) + "\n";
        }
        out.push_back({cfg.steps.size() > 1 ? "_t" + std::to_string(t) : "", std::move(csv)});
    }
    return out;
}

std::vector<Artifact> run_memory(const ExperimentConfig& cfg) {
    const unsigned t = single_step_count(cfg);
    const Qubit q = cfg.qubit.resolve();
    const MemoryConfig mc = memory_config(cfg, t);
    const RetrievalRecord r = store_retrieve(q, mc);

    ordered_json schedule{{"kind", to_string(mc.schedule.kind())}, {"steps", t}};
    if (mc.schedule.kind() == ScheduleKind::TemporalDisorder) {
        schedule["seed"] = *mc.schedule.seed();
    } else {
        schedule["theta"] = cfg.schedule.theta;
    }
    auto probs = [](const Qubit& x) {
        return ordered_json::array({std::norm(x.alpha), std::norm(x.beta)});
    };
    ordered_json body{
        {"input", qubit_json(q)},
        {"schedule", schedule},
        {"theta_sum", r.theta_sum},
        {"retrieved", qubit_json(r.retrieved)},
        {"final", qubit_json(r.final_state)},
        {"probabilities",
         {{"input", probs(q)}, {"retrieved", probs(r.retrieved)}, {"final", probs(r.final_state)}}},
        {"fidelity", r.fidelity_to_input},
    };
    return {{"", json_report(cfg, std::move(body))}};
}

std::vector<Artifact> run_sweep(const ExperimentConfig& cfg) {
    SweepRequest request{cfg.schedule.theta, cfg.steps, cfg.axis, cfg.grid, cfg.fixed};
    std::string csv = csv_preamble(cfg);
    csv += "t,delta,eta,p0\n";
    for (const auto& row : probability_sweep(request)) {
        csv += std::to_string(row.t) + "," + format_double(row.delta) + "," +
               format_double(row.eta) + "," + format_double(row.p0) + "\n";
    }
    return {{"", std::move(csv)}};
}

std::vector<Artifact> run_eavesdrop(const ExperimentConfig& cfg) {
    const unsigned t = single_step_count(cfg);
    const Qubit q = cfg.qubit.resolve();
    const MemoryConfig mc = memory_config(cfg, t);
    const WalkState s = evolve(encode(q, cfg.encoding), mc.schedule);
    const LocalizationReport report = localization_report(s);

    std::vector<int> widths = cfg.windows;
    if (widths.empty()) {
        for (int w = 0; w <= static_cast<int>(t); ++w) {
            widths.push_back(w);
        }
    }
    std::sort(widths.begin(), widths.end());
    widths.erase(std::unique(widths.begin(), widths.end()), widths.end());

    std::string csv = csv_preamble(cfg);
    csv += "w,captured_probability,guess_fidelity\n";
    for (int w : widths) {
        std::string captured = format_double(report.capture(w));
        std::string fid = "nan";
        try {
            const auto r = eavesdrop(s, SiteWindow::centered(w), q, mc);
            captured = format_double(r.captured_probability);
            fid = format_double(r.guess_fidelity);
        } catch (const EmptyCapture&) {
            // Nothing readable in this window; probability is still reported.
        }
        csv += std::to_string(w) + "," + captured + "," + fid + "\n";
    }
    return {{"", std::move(csv)}};
}

std::vector<Artifact> run_ensemble(const ExperimentConfig& cfg) {
    const unsigned t = single_step_count(cfg);
    const auto result =
        ensemble_stats(cfg.qubit.resolve(), t, cfg.seeds, cfg.encoding, cfg.phase_correction);
    ordered_json per_seed = ordered_json::array();
    for (const auto& o : result.per_seed) {
        per_seed.push_back({{"seed", o.seed},
                            {"theta_sum", o.theta_sum},
                            {"std_dev", o.report.std_dev},
                            {"participation_ratio", o.report.participation_ratio},
                            {"retrieval_fidelity", o.retrieval_fidelity}});
    }
    auto stat = [](const SampleStat& s) {
        return ordered_json{{"mean", s.mean}, {"std_error", s.std_error}};
    };
    ordered_json body{
        {"per_seed", per_seed},
        {"aggregate",
         {{"std_dev", stat(result.aggregate.std_dev)},
          {"participation_ratio", stat(result.aggregate.participation_ratio)},
          {"retrieval_fidelity", stat(result.aggregate.retrieval_fidelity)},
          {"mean_window_capture", result.aggregate.mean_window_capture}}},
    };
    return {{"", json_report(cfg, std::move(body))}};
}

}  // namespace

std::string to_string(Command c) {
    switch (c) {
        case Command::Evolve: return "evolve";
        case Command::Memory: return "memory";
        case Command::Sweep: return "sweep";
        case Command::Eavesdrop: return "eavesdrop";
        case Command::Ensemble: return "ensemble";
        case Command::Verify: return "verify";
    }
    return "unknown";
}

Command command_from_string(std::string_view s) {
    for (Command c : {Command::Evolve, Command::Memory, Command::Sweep, Command::Eavesdrop,
                      Command::Ensemble, Command::Verify}) {
        if (s == to_string(c)) {
            return c;
        }
    }
    throw ConfigError("unknown command '" + std::string(s) + "'");
}

Qubit QubitSpec::resolve() const {
    if (amplitudes) {
        try {
            return Qubit::normalized(amplitudes->first, amplitudes->second);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    if (!std::isfinite(delta) || !std::isfinite(eta)) {
        throw ConfigError("qubit angles must be finite");
    }
    return Qubit::from_angles(delta, eta);
}

CoinSchedule ScheduleConfig::build(std::size_t length) const {
    if (kind == ScheduleKind::TemporalDisorder) {
        return CoinSchedule::temporal_disorder(seed, length);
    }
    if (!std::isfinite(theta)) {
        throw ConfigError("coin angle must be finite");
    }
    return CoinSchedule::constant(theta, length);
}

void ExperimentConfig::validate() const {
    if (phase_correction && encoding != Encoding::Hadamard) {
        throw ConfigError("phase correction requires Hadamard encoding");
    }
    if (command == Command::Verify) {
        return;
    }
    if (steps.empty()) {
        throw ConfigError("at least one step count is required");
    }
    switch (command) {
        case Command::Memory:
        case Command::Eavesdrop:
        case Command::Ensemble:
            single_step_count(*this);
            break;
        default:
            break;
    }
    if (command == Command::Sweep) {
        if (grid.empty()) {
            throw ConfigError("sweep needs a nonempty grid");
        }
        if (schedule.kind != ScheduleKind::Constant) {
            throw ConfigError("sweep uses a constant coin");
        }
    }
    if (command == Command::Ensemble && seeds.empty()) {
        throw ConfigError("ensemble needs at least one seed");
    }
    if (command == Command::Eavesdrop) {
        for (int w : windows) {
            if (w < 0 || w > static_cast<int>(steps.front())) {
                throw ConfigError("window half-width " + std::to_string(w) + " outside [0, t]");
            }
        }
    }
}

ordered_json to_json(const ExperimentConfig& cfg) {
    ordered_json j{{"command", to_string(cfg.command)}};
    const bool uses_qubit = cfg.command != Command::Sweep && cfg.command != Command::Verify;
    if (uses_qubit) {
        if (cfg.qubit.amplitudes) {
            j["qubit"] = {{"alpha", complex_json(cfg.qubit.amplitudes->first)},
                          {"beta", complex_json(cfg.qubit.amplitudes->second)}};
        } else {
            j["qubit"] = {{"delta", cfg.qubit.delta}, {"eta", cfg.qubit.eta}};
        }
    }
    if (cfg.command != Command::Ensemble && cfg.command != Command::Verify) {
        if (cfg.schedule.kind == ScheduleKind::TemporalDisorder) {
            j["schedule"] = {{"kind", "disorder"}, {"seed", cfg.schedule.seed}};
        } else {
            j["schedule"] = {{"kind", "constant"}, {"theta", cfg.schedule.theta}};
        }
    }
    if (cfg.command == Command::Verify) {
        return j;
    }
    j["steps"] = cfg.steps;
    if (cfg.command != Command::Sweep) {
        j["encoding"] = cfg.encoding == Encoding::Hadamard ? "hadamard" : "none";
    }
    if (cfg.command == Command::Memory || cfg.command == Command::Eavesdrop ||
        cfg.command == Command::Ensemble) {
        j["phase_correction"] = cfg.phase_correction;
    }
    if (cfg.command == Command::Sweep) {
        j["axis"] = cfg.axis == SweepAxis::Delta ? "delta" : "eta";
        j["grid"] = cfg.grid;
        j["fixed"] = cfg.fixed;
    }
    if (cfg.command == Command::Eavesdrop) {
        j["windows"] = cfg.windows;
    }
    if (cfg.command == Command::Ensemble) {
        j["seeds"] = cfg.seeds;
    }
    return j;
}

ExperimentConfig config_from_json(const json& j) {
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    ExperimentConfig cfg;
    try {
        cfg.command = command_from_string(j.value("command", std::string("memory")));
        if (j.contains("qubit")) {
            const auto& q = j.at("qubit");
            if (q.contains("alpha") || q.contains("beta")) {
                cfg.qubit.amplitudes = std::pair{complex_from_json(q.at("alpha")),
                                                 complex_from_json(q.at("beta"))};
            } else {
                cfg.qubit.delta = q.value("delta", 0.0);
                cfg.qubit.eta = q.value("eta", 0.0);
            }
        }
        if (j.contains("schedule")) {
            const auto& s = j.at("schedule");
            const std::string kind = s.value("kind", std::string("constant"));
            if (kind == "disorder") {
                cfg.schedule.kind = ScheduleKind::TemporalDisorder;
                if (!s.contains("seed")) {
                    throw ConfigError("disorder schedule requires a seed");
                }
                cfg.schedule.seed = s.at("seed").get<std::uint64_t>();
            } else if (kind == "constant") {
                cfg.schedule.theta = s.value("theta", 0.0);
            } else {
                throw ConfigError("unknown schedule kind '" + kind + "'");
            }
        }
        cfg.steps = j.value("steps", std::vector<unsigned>{});
        const std::string encoding = j.value("encoding", std::string("none"));
        if (encoding == "hadamard") {
            cfg.encoding = Encoding::Hadamard;
        } else if (encoding != "none") {
            throw ConfigError("unknown encoding '" + encoding + "'");
        }
        cfg.phase_correction = j.value("phase_correction", false);
        const std::string axis = j.value("axis", std::string("delta"));
        if (axis == "eta") {
            cfg.axis = SweepAxis::Eta;
        } else if (axis != "delta") {
            throw ConfigError("unknown sweep axis '" + axis + "'");
        }
        cfg.grid = j.value("grid", std::vector<double>{});
        cfg.fixed = j.value("fixed", 0.0);
        cfg.windows = j.value("windows", std::vector<int>{});
        cfg.seeds = j.value("seeds", std::vector<std::uint64_t>{});
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    return cfg;
}

json load_config_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded()) {
            throw ConfigError("config file " + path.string() + " is not valid JSON");
        }
        if (j.contains("tool") && j.contains("config")) {
            return j.at("config");
        }
        return j;
    }
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
        if (line.starts_with(kConfigPrefix)) {
            json j = json::parse(line.substr(kConfigPrefix.size()), nullptr, false);
            if (j.is_discarded()) {
                throw ConfigError("embedded config in " + path.string() + " is not valid JSON");
            }
            return j;
        }
    }
    throw ConfigError("no config found in " + path.string());
}

std::vector<Artifact> run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    switch (cfg.command) {
        case Command::Evolve: return run_evolve(cfg);
        case Command::Memory: return run_memory(cfg);
        case Command::Sweep: return run_sweep(cfg);
        case Command::Eavesdrop: return run_eavesdrop(cfg);
        case Command::Ensemble: return run_ensemble(cfg);
        case Command::Verify: break;
    }
    throw ConfigError("verify does not produce artifacts");
}

std::filesystem::path artifact_path(const std::filesystem::path& path, const std::string& suffix) {
    if (suffix.empty()) {
        return path;
    }
    auto out = path;
    out.replace_filename(path.stem().string() + suffix + path.extension().string());
    return out;
}

std::string format_double(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

double parse_pi_multiple(std::string_view text) {
    auto parse_number = [&](std::string_view part) {
        double v = 0.0;
        const char* begin = part.data();
        const char* end = part.data() + part.size();
        if (!part.empty() && *begin == '+') {
            ++begin;
        }
        const auto res = std::from_chars(begin, end, v);
        if (res.ec != std::errc{} || res.ptr != end || part.empty()) {
            throw ConfigError("cannot parse angle '" + std::string(text) + "'");
        }
        return v;
    };
    const auto slash = text.find('/');
    double fraction = 0.0;
    if (slash == std::string_view::npos) {
        fraction = parse_number(text);
    } else {
        const double den = parse_number(text.substr(slash + 1));
        if (den == 0.0) {
            throw ConfigError("zero denominator in angle '" + std::string(text) + "'");
        }
        fraction = parse_number(text.substr(0, slash)) / den;
    }
    return fraction * std::numbers::pi;
}

std::vector<double> linspace(double start, double stop, std::size_t count) {
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = start;
        return out;
    }
    for (std::size_t k = 0; k < count; ++k) {
        out[k] = k + 1 == count ? stop
                                : start + (stop - start) * static_cast<double>(k) /
                                              static_cast<double>(count - 1);
    }
    return out;
}

std::vector<double> parse_pi_grid(std::string_view text) {
    const auto a = text.find(':');
    const auto b = a == std::string_view::npos ? a : text.find(':', a + 1);
    if (b == std::string_view::npos) {
        throw ConfigError("grid must look like start:stop:count, got '" + std::string(text) + "'");
    }
    const double start = parse_pi_multiple(text.substr(0, a));
    const double stop = parse_pi_multiple(text.substr(a + 1, b - a - 1));
    std::size_t count = 0;
    const auto tail = text.substr(b + 1);
    const auto res = std::from_chars(tail.data(), tail.data() + tail.size(), count);
    if (res.ec != std::errc{} || res.ptr != tail.data() + tail.size() || count == 0) {
        throw ConfigError("grid point count must be a positive integer");
    }
    return linspace(start, stop, count);
}

std::vector<std::uint64_t> parse_index_list(std::string_view text) {
    auto parse_one = [&](std::string_view part) {
        std::uint64_t v = 0;
        const auto res = std::from_chars(part.data(), part.data() + part.size(), v);
        if (res.ec != std::errc{} || res.ptr != part.data() + part.size() || part.empty()) {
            throw ConfigError("cannot parse index list '" + std::string(text) + "'");
        }
        return v;
    };
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = std::min(text.find(',', pos), text.size());
        const auto item = text.substr(pos, comma - pos);
        const auto range = item.find("..");
        if (range == std::string_view::npos) {
            out.push_back(parse_one(item));
        } else {
            const auto lo = parse_one(item.substr(0, range));
            const auto hi = parse_one(item.substr(range + 2));
            if (hi < lo) {
                throw ConfigError("descending range in '" + std::string(text) + "'");
            }
            for (auto v = lo; v <= hi; ++v) {
                out.push_back(v);
            }
        }
        pos = comma + 1;
    }
    return out;
}

}  // namespace qwmem
