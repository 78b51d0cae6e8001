#include "qwmem/memory_protocol.hpp"

#include <cmath>
#include <string>

#include "qwmem/parallel.hpp"

namespace qwmem {

void MemoryConfig::validate() const {
    if (phase_correction && encoding != Encoding::Hadamard) {
        throw std::invalid_argument("phase correction requires Hadamard encoding");
    }
}

Qubit collect(const WalkState& s) {
    Complex alpha_sum{};
    Complex beta_sum{};
    for (const auto& site : s.sites()) {
        alpha_sum += site.alpha;
        beta_sum += site.beta;
    }
    const Qubit out{alpha_sum, beta_sum};
    const double deviation = std::abs(out.norm_squared() - 1.0);
    if (!(deviation <= kCollectNormLimit)) {
        throw CollectedNormDeviation("collected state has norm^2 " +
                                     std::to_string(out.norm_squared()) +
                                     "; input is not a walk-generated state");
    }
    return out;
}

Qubit theorem1_prediction(const Qubit& q, double theta, unsigned steps) {
    return apply(sigma_x_exponential(static_cast<double>(steps) * theta), q);
}

Qubit theorem2_prediction(const Qubit& q, double theta_sum) {
    return apply(phase_diagonal(theta_sum), q);
}

Qubit encode(const Qubit& q, Encoding encoding) {
    return encoding == Encoding::Hadamard ? apply(hadamard(), q) : q;
}

Qubit decode(const Qubit& collected, const MemoryConfig& cfg) {
    Qubit out = collected;
    if (cfg.encoding == Encoding::Hadamard) {
        out = apply(hadamard(), out);
    }
    if (cfg.phase_correction) {
        // Inverse of the diagonal phase left behind by the walk.
        out = apply(phase_diagonal(-cfg.schedule.theta_sum()), out);
    }
    return out;
}

RetrievalRecord store_retrieve(const Qubit& q, const MemoryConfig& cfg) {
    cfg.validate();
    const WalkState walked = evolve(encode(q, cfg.encoding), cfg.schedule);
    RetrievalRecord record;
    record.retrieved = collect(walked);
    record.final_state = decode(record.retrieved, cfg);
    record.theta_sum = cfg.schedule.theta_sum();
    record.fidelity_to_input = fidelity(record.final_state, q);
    return record;
}

std::vector<SweepRow> probability_sweep(const SweepRequest& request) {
    if (request.steps.empty() || request.grid.empty()) {
        throw std::invalid_argument("sweep needs at least one step count and grid point");
    }
    const std::size_t width = request.grid.size();
    std::vector<SweepRow> rows(request.steps.size() * width);
    parallel_for(rows.size(), [&](std::size_t k) {
        const unsigned t = request.steps[k / width];
        const double g = request.grid[k % width];
        const double delta = request.axis == SweepAxis::Delta ? g : request.fixed;
        const double eta = request.axis == SweepAxis::Delta ? request.fixed : g;
        const MemoryConfig cfg{CoinSchedule::constant(request.theta, t), Encoding::None, false};
        const auto record = store_retrieve(Qubit::from_angles(delta, eta), cfg);
        rows[k] = {t, delta, eta, std::norm(record.final_state.alpha)};
    });
    return rows;
}

}  // namespace qwmem
