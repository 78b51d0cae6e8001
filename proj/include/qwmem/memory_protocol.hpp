#pragma once

#include <stdexcept>
#include <vector>

#include "qwmem/core_math.hpp"
#include "qwmem/schedule.hpp"
#include "qwmem/walk_engine.hpp"

namespace qwmem {

/// Raised by collect when the summed amplitudes are far from unit norm,
/// which only happens for states that were not produced by a walk.
class CollectedNormDeviation : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kCollectNormLimit = 1e-6;

enum class Encoding { None, Hadamard };

struct MemoryConfig {
    CoinSchedule schedule;
    Encoding encoding = Encoding::None;
    bool phase_correction = false;

    /// Throws std::invalid_argument if phase correction is requested without
    /// Hadamard encoding.
    void validate() const;
};

struct RetrievalRecord {
    Qubit retrieved;  ///< state at the read-out vertex, before decoding
    Qubit final_state;
    double theta_sum = 0.0;
    double fidelity_to_input = 0.0;
};

/// Gathers every site's coin amplitudes into the read-out vertex:
/// (sum_j alpha_j, sum_j beta_j).
Qubit collect(const WalkState& s);

/// exp(-i t theta sigma_x) q.
Qubit theorem1_prediction(const Qubit& q, double theta, unsigned steps);

/// diag(e^{-i theta_sum}, e^{i theta_sum}) q.
Qubit theorem2_prediction(const Qubit& q, double theta_sum);

/// encode -> evolve -> collect -> decode -> phase-correct.
RetrievalRecord store_retrieve(const Qubit& q, const MemoryConfig& cfg);

/// Decoding applied to a collected state (H, then diag(e^{i T}, e^{-i T})),
/// shared by the owner and the eavesdropper model.
Qubit decode(const Qubit& collected, const MemoryConfig& cfg);

Qubit encode(const Qubit& q, Encoding encoding);

enum class SweepAxis { Delta, Eta };

struct SweepRequest {
    double theta = 0.0;
    std::vector<unsigned> steps;
    SweepAxis axis = SweepAxis::Delta;
    std::vector<double> grid;
    double fixed = 0.0;  ///< eta when sweeping delta, delta when sweeping eta
};

struct SweepRow {
    unsigned t;
    double delta;
    double eta;
    double p0;
};

/// P(|0>) of the unencoded retrieved state at every (t, grid point) under a
/// constant coin. Rows are ordered by t, then by grid position.
std::vector<SweepRow> probability_sweep(const SweepRequest& request);

}  // namespace qwmem
