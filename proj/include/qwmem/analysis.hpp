#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "qwmem/core_math.hpp"
#include "qwmem/memory_protocol.hpp"
#include "qwmem/walk_engine.hpp"

namespace qwmem {

class EmptyCapture : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct LocalizationReport {
    double mean_position = 0.0;
    double std_dev = 0.0;
    double participation_ratio = 1.0;  ///< 1 / sum_j p_j^2
    /// window_capture[w] = probability on |j| <= w, for w = 0 .. steps_elapsed.
    std::vector<double> window_capture;

    /// Probability on |j| <= w; saturates past the last stored width.
    double capture(int w) const;
};

LocalizationReport localization_report(const WalkState& s);

/// Closed interval of lattice sites [lo, hi].
struct SiteWindow {
    int lo = 0;
    int hi = 0;

    static SiteWindow centered(int half_width) { return {-half_width, half_width}; }
    bool contains(int j) const { return lo <= j && j <= hi; }
};

struct EavesdropperResult {
    SiteWindow window;
    double captured_probability = 0.0;
    Qubit best_guess;     ///< renormalized window sum, before decoding
    Qubit decoded_guess;  ///< best_guess after the owner's decode steps
    double guess_fidelity = 0.0;
};

/// Adversary reading the amplitudes on `window` only. It knows the protocol
/// and the schedule, collects what it can see, renormalizes and decodes the
/// same way the owner would.
///
/// Throws std::invalid_argument if the window leaves [-t, t] or is empty,
/// EmptyCapture if the window holds (almost) no probability or its summed
/// amplitudes cancel.
EavesdropperResult eavesdrop(const WalkState& s, SiteWindow window, const Qubit& true_input,
                             const MemoryConfig& cfg);

inline constexpr double kEmptyCaptureLimit = 1e-15;

struct SampleStat {
    double mean = 0.0;
    double std_error = 0.0;
};

SampleStat sample_stat(std::span<const double> values);

struct SeedOutcome {
    std::uint64_t seed = 0;
    double theta_sum = 0.0;
    LocalizationReport report;
    double retrieval_fidelity = 0.0;
};

struct EnsembleAggregate {
    SampleStat std_dev;
    SampleStat participation_ratio;
    SampleStat retrieval_fidelity;
    std::vector<double> mean_window_capture;
};

struct EnsembleResult {
    std::vector<SeedOutcome> per_seed;  ///< same order as the input seeds
    EnsembleAggregate aggregate;
};

/// Temporal-disorder runs of `steps` steps, one per seed. The stored state is
/// the encoded input; retrieval uses the given encoding and correction.
EnsembleResult ensemble_stats(const Qubit& q, unsigned steps, std::span<const std::uint64_t> seeds,
                              Encoding encoding = Encoding::Hadamard,
                              bool phase_correction = true);

}  // namespace qwmem
