#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qwmem/core_math.hpp"
#include "qwmem/memory_protocol.hpp"
#include "qwmem/schedule.hpp"

namespace qwmem {

inline constexpr std::string_view kToolName = "qwmem";
inline constexpr std::string_view kToolVersion = "0.1.0";

/// Bad command line or config contents (exit code 2).
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Command { Evolve, Memory, Sweep, Eavesdrop, Ensemble, Verify };

std::string to_string(Command c);
Command command_from_string(std::string_view s);

/// Either (delta, eta) angles or explicit amplitudes, normalized on use.
struct QubitSpec {
    double delta = 0.0;
    double eta = 0.0;
    std::optional<std::pair<Complex, Complex>> amplitudes;

    Qubit resolve() const;
};

struct ScheduleConfig {
    ScheduleKind kind = ScheduleKind::Constant;
    double theta = 0.0;
    std::uint64_t seed = 0;

    CoinSchedule build(std::size_t length) const;
};

/// Everything that determines an experiment's output. Output paths are not
/// part of it, so an emitted config reproduces the same bytes anywhere.
struct ExperimentConfig {
    Command command = Command::Memory;
    QubitSpec qubit;
    ScheduleConfig schedule;
    std::vector<unsigned> steps;
    Encoding encoding = Encoding::None;
    bool phase_correction = false;

    // sweep
    SweepAxis axis = SweepAxis::Delta;
    std::vector<double> grid;
    double fixed = 0.0;

    // eavesdrop: window half-widths; empty means 0 .. t
    std::vector<int> windows;

    // ensemble
    std::vector<std::uint64_t> seeds;

    /// Throws ConfigError for inconsistent or missing fields.
    void validate() const;
};

nlohmann::ordered_json to_json(const ExperimentConfig& cfg);

/// Throws ConfigError on malformed input.
ExperimentConfig config_from_json(const nlohmann::json& j);

/// Accepts a plain JSON config, an emitted JSON report (reads its "config"
/// member) or an emitted CSV file (reads its "# config: " header line).
nlohmann::json load_config_json(const std::filesystem::path& path);

/// One output file's contents. `suffix` distinguishes several files emitted
/// by one command (evolve with several step counts), empty otherwise.
struct Artifact {
    std::string suffix;
    std::string content;
};

/// Runs the configured command. Simulation failures propagate as the
/// library's runtime exceptions; config problems as ConfigError.
std::vector<Artifact> run_experiment(const ExperimentConfig& cfg);

/// Inserts `suffix` before the extension of `path`.
std::filesystem::path artifact_path(const std::filesystem::path& path, const std::string& suffix);

/// Shortest decimal string that reads back as the same double.
std::string format_double(double value);

/// Angle given as a multiple of pi: "1/6", "-0.25", "2". Throws ConfigError.
double parse_pi_multiple(std::string_view text);

/// "start:stop:count" in multiples of pi, endpoints included.
std::vector<double> parse_pi_grid(std::string_view text);

/// "1,2,5" or "1..100" or a mix: "1..3,7".
std::vector<std::uint64_t> parse_index_list(std::string_view text);

/// Evenly spaced values, both endpoints included.
std::vector<double> linspace(double start, double stop, std::size_t count);

}  // namespace qwmem
