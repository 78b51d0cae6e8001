#include "qwmem/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "qwmem/memory_protocol.hpp"
#include "qwmem/oracle.hpp"
#include "qwmem/walk_engine.hpp"

namespace qwmem {

namespace {

constexpr double kTol = 1e-12;
constexpr int kMaxSteps = 12;
constexpr int kMaxCollectSteps = 6;

// Largest sitewise deviation between the engine state and the dense state.
double state_deviation(const WalkState& engine, const oracle::DenseGlobalState& dense) {
    double worst = 0.0;
    for (int j = -dense.capacity; j <= dense.capacity; ++j) {
        worst = std::max(worst, std::abs(engine.alpha(j) - dense.at(j, 0)));
        worst = std::max(worst, std::abs(engine.beta(j) - dense.at(j, 1)));
    }
    return worst;
}

// Fixed, non-special test inputs.
std::vector<Qubit> probe_qubits() {
    return {Qubit::zero(), Qubit::one(), Qubit::from_angles(0.3, 1.1),
            Qubit::from_angles(std::numbers::pi / 4, 0.0), Qubit::from_angles(1.2, -2.4)};
}

}  // namespace

std::vector<VerifyCheck> run_differential_suite(int disorder_cases) {
    VerifyCheck engine_vs_dense{"engine state == dense oracle state (constant coins)", 0, kTol};
    VerifyCheck collect_vs_dense{"collect(evolve) == dense evolve+collect (constant coins)", 0, kTol};
    VerifyCheck dense_vs_thm1{"dense evolve+collect == exp(-i t theta sigma_x) q", 0, kTol};
    VerifyCheck disorder_engine{"engine == dense oracle (disorder schedules)", 0, kTol};
    VerifyCheck disorder_thm2{"dense H-encoded retrieval, decoded == diag(e^-iT, e^iT) q", 0, kTol};
    VerifyCheck sequential{"literal C0/C1 collection product == summation", 0, kTol};

    const double pi = std::numbers::pi;
    const auto qubits = probe_qubits();

    for (double theta : {0.0, pi / 6, pi / 4, pi / 3}) {
        for (int t = 0; t <= kMaxSteps; ++t) {
            const auto schedule = CoinSchedule::constant(theta, static_cast<std::size_t>(t));
            for (const auto& q : qubits) {
                const WalkState engine = evolve(q, schedule);
                const auto dense = oracle::oracle_evolve(q, schedule);
                const Qubit dense_collected = oracle::oracle_collect(dense);

                engine_vs_dense.max_deviation =
                    std::max(engine_vs_dense.max_deviation, state_deviation(engine, dense));
                collect_vs_dense.max_deviation = std::max(
                    collect_vs_dense.max_deviation, max_abs_diff(collect(engine), dense_collected));
                dense_vs_thm1.max_deviation = std::max(
                    dense_vs_thm1.max_deviation,
                    max_abs_diff(dense_collected,
                                 theorem1_prediction(q, theta, static_cast<unsigned>(t))));
                ++engine_vs_dense.cases;
                ++collect_vs_dense.cases;
                ++dense_vs_thm1.cases;

                if (t <= kMaxCollectSteps) {
                    double residual = 0.0;
                    const Qubit literal = oracle::sequential_collect(dense, &residual);
                    sequential.max_deviation =
                        std::max({sequential.max_deviation, max_abs_diff(literal, dense_collected),
                                  residual});
                    ++sequential.cases;
                }
            }
        }
    }

    for (int k = 0; k < disorder_cases; ++k) {
        const auto t = static_cast<std::size_t>(1 + k % kMaxSteps);
        const auto schedule = CoinSchedule::temporal_disorder(1000 + static_cast<std::uint64_t>(k), t);
        const Qubit& q = qubits[static_cast<std::size_t>(k) % qubits.size()];
        const Qubit encoded = apply(hadamard(), q);

        const auto dense = oracle::oracle_evolve(encoded, schedule);
        disorder_engine.max_deviation = std::max(disorder_engine.max_deviation,
                                                 state_deviation(evolve(encoded, schedule), dense));
        const Qubit decoded = apply(hadamard(), oracle::oracle_collect(dense));
        disorder_thm2.max_deviation =
            std::max(disorder_thm2.max_deviation,
                     max_abs_diff(decoded, theorem2_prediction(q, schedule.theta_sum())));
        ++disorder_engine.cases;
        ++disorder_thm2.cases;
    }

    return {engine_vs_dense, collect_vs_dense, dense_vs_thm1, disorder_engine, disorder_thm2,
            sequential};
}

int print_checks(const std::vector<VerifyCheck>& checks, std::ostream& os) {
    int failures = 0;
    for (const auto& c : checks) {
        char line[256];
        std::snprintf(line, sizeof line, "[%s] %s (cases=%d, max dev=%.3e, tol=%.0e)",
                      c.passed() ? "PASS" : "FAIL", c.name.c_str(), c.cases, c.max_deviation,
                      c.tolerance);
        os << line << '\n';
        failures += c.passed() ? 0 : 1;
    }
    return failures;
}

}  // namespace qwmem
