#include "qwmem/oracle.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "qwmem/memory_protocol.hpp"
#include "qwmem/verify.hpp"
#include "qwmem/walk_engine.hpp"
#include "test_support.hpp"

namespace qwmem::oracle {
namespace {

using std::numbers::pi;

TEST(WalkUnitary, ZeroAngleIsShiftPermutation) {
    const int cap = 4;
    const DenseMatrix w = build_walk_unitary(0.0, cap);
    for (Eigen::Index c = 0; c < w.cols(); ++c) {
        int ones = 0;
        for (Eigen::Index r = 0; r < w.rows(); ++r) {
            const Complex v = w(r, c);
            ASSERT_TRUE(v == Complex(0.0) || v == Complex(1.0));
            ones += v == Complex(1.0);
        }
        EXPECT_EQ(ones, 1);
    }
    for (int j = -cap + 1; j < cap; ++j) {
        EXPECT_EQ(w(DenseGlobalState::index(j - 1, 0, cap), DenseGlobalState::index(j, 0, cap)),
                  Complex(1.0));
        EXPECT_EQ(w(DenseGlobalState::index(j + 1, 1, cap), DenseGlobalState::index(j, 1, cap)),
                  Complex(1.0));
    }
}

TEST(WalkUnitary, ColumnsOrthonormal) {
    for (double theta : {0.0, 0.4, pi / 6, -1.3}) {
        const DenseMatrix w = build_walk_unitary(theta, 5);
        const DenseMatrix gram = w.adjoint() * w;
        EXPECT_LE((gram - DenseMatrix::Identity(w.rows(), w.cols())).cwiseAbs().maxCoeff(), 1e-12);
    }
    EXPECT_THROW(build_walk_unitary(0.1, 0), std::invalid_argument);
}

TEST(WalkUnitary, OneStepMatchesEngine) {
    std::mt19937_64 gen(1);
    for (double theta : {0.0, pi / 6, pi / 4, pi / 3, 2.0}) {
        const Qubit q = test::random_qubit(gen);
        const auto dense = oracle_evolve(q, CoinSchedule::constant(theta, 1));
        const auto engine = step(initial_state(q, 2), theta);
        for (int j = -2; j <= 2; ++j) {
            EXPECT_NEAR(std::abs(dense.at(j, 0) - engine.alpha(j)), 0.0, 1e-15);
            EXPECT_NEAR(std::abs(dense.at(j, 1) - engine.beta(j)), 0.0, 1e-15);
        }
    }
}

TEST(OracleCollect, AgreesWithEngineAndTheorem) {
    std::mt19937_64 gen(2);
    for (double theta : {0.0, pi / 6, pi / 4, pi / 3}) {
        for (unsigned t = 0; t <= 12; ++t) {
            const Qubit q = test::random_qubit(gen);
            const auto schedule = CoinSchedule::constant(theta, t);
            const Qubit dense = oracle_evolve_and_collect(q, schedule);
            EXPECT_LE(max_abs_diff(dense, collect(evolve(q, schedule))), 1e-12);
            EXPECT_LE(max_abs_diff(dense, theorem1_prediction(q, theta, t)), 1e-12);
        }
    }
}

TEST(CollectionOperator, EqualsSummationMatrix) {
    const int cap = 3;
    const DenseMatrix wt = DenseMatrix(collection_operator(cap));
    const Eigen::Index lattice = 2 * (2 * cap + 1);
    // Every coin-c basis vector, on any site or on R, lands on (R, c).
    for (Eigen::Index col = 0; col < wt.cols(); ++col) {
        for (Eigen::Index row = 0; row < wt.rows(); ++row) {
            const Complex expected = (row == lattice + col % 2) ? 1.0 : 0.0;
            ASSERT_EQ(wt(row, col), expected) << row << "," << col;
        }
    }
}

TEST(CollectionOperator, SingleFactorsMoveOneComponent) {
    const int cap = 2;
    const DenseMatrix c0 = DenseMatrix(collection_c0(1, cap));
    const DenseMatrix c1 = DenseMatrix(collection_c1(1, cap));
    const Eigen::Index r0 = 2 * (2 * cap + 1);
    const auto i0 = static_cast<Eigen::Index>(DenseGlobalState::index(1, 0, cap));
    const auto i1 = static_cast<Eigen::Index>(DenseGlobalState::index(1, 1, cap));
    EXPECT_EQ(c0(r0, i0), Complex(1.0));
    EXPECT_EQ(c0(i1, i1), Complex(1.0));
    EXPECT_EQ(c0.cwiseAbs().sum(), 2.0);
    EXPECT_EQ(c1(i0, i0), Complex(1.0));
    EXPECT_EQ(c1(r0 + 1, i1), Complex(1.0));
    EXPECT_EQ(c1.cwiseAbs().sum(), 2.0);
}

TEST(SequentialCollect, MatchesSummation) {
    std::mt19937_64 gen(3);
    for (unsigned t = 0; t <= 6; ++t) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const Qubit q = test::random_qubit(gen);
            const auto dense = oracle_evolve(q, CoinSchedule::temporal_disorder(seed, t));
            double residual = -1.0;
            const Qubit literal = sequential_collect(dense, &residual);
            EXPECT_LE(max_abs_diff(literal, oracle_collect(dense)), 1e-12);
            EXPECT_EQ(residual, 0.0);
        }
    }
}

TEST(DifferentialSuite, AllChecksPass) {
    const auto checks = run_differential_suite(30);
    ASSERT_EQ(checks.size(), 6u);
    for (const auto& c : checks) {
        EXPECT_TRUE(c.passed()) << c.name << " dev=" << c.max_deviation;
        EXPECT_GT(c.cases, 0);
    }
}

}  // namespace
}  // namespace qwmem::oracle
