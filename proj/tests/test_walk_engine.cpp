#include "qwmem/walk_engine.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qwmem/analysis.hpp"
#include "test_support.hpp"

namespace qwmem {
namespace {

using std::numbers::pi;
constexpr double kH = 1.0 / std::numbers::sqrt2;

// Direct transcription of the amplitude recurrences over every stored site,
// without parity skipping or support bounds.
std::vector<SiteAmplitudes> naive_step(const WalkState& s, double theta) {
    const int cap = s.capacity();
    std::vector<SiteAmplitudes> out(2 * cap + 1);
    const double c = std::cos(theta);
    const double sn = std::sin(theta);
    for (int j = -cap; j <= cap; ++j) {
        const auto right = s.at(j + 1);
        const auto left = s.at(j - 1);
        out[j + cap].alpha = c * right.alpha - kI * sn * right.beta;
        out[j + cap].beta = c * left.beta - kI * sn * left.alpha;
    }
    return out;
}

void expect_structure(const WalkState& s) {
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
    const int t = s.steps_elapsed();
    for (int j = -s.capacity(); j <= s.capacity(); ++j) {
        if (std::abs(j) > t || (j + t) % 2 != 0) {
            ASSERT_EQ(s.alpha(j), Complex{}) << "j=" << j << " t=" << t;
            ASSERT_EQ(s.beta(j), Complex{}) << "j=" << j << " t=" << t;
        }
    }
}

TEST(InitialState, PlacesQubitAtOrigin) {
    const WalkState s = initial_state(Qubit::zero(), 4);
    EXPECT_EQ(s.alpha(0), Complex(1.0));
    EXPECT_EQ(s.steps_elapsed(), 0);
    EXPECT_EQ(s.sites().size(), 9u);
    EXPECT_EQ(position_distribution(s), (PositionDistribution{{0, 1.0}}));

    const Qubit q{kH, Complex(0, kH)};
    const WalkState s1 = initial_state(q, 1);
    EXPECT_EQ(s1.alpha(0), q.alpha);
    EXPECT_EQ(s1.beta(0), q.beta);
    EXPECT_NEAR(s1.norm_squared(), 1.0, 1e-15);
    EXPECT_THROW(initial_state(q, -1), std::invalid_argument);
}

TEST(Step, OneStepQuarterPi) {
    const WalkState s = step(initial_state(Qubit::zero(), 3), pi / 4);
    EXPECT_NEAR(std::abs(s.alpha(-1) - kH), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.beta(1) - Complex(0, -kH)), 0.0, 1e-15);
    EXPECT_EQ(s.beta(-1), Complex{});
    EXPECT_EQ(s.alpha(1), Complex{});
    const auto dist = position_distribution(s);
    ASSERT_EQ(dist.size(), 2u);
    EXPECT_NEAR(dist.at(-1), 0.5, 1e-15);
    EXPECT_NEAR(dist.at(1), 0.5, 1e-15);
}

TEST(Step, ZeroAngleIsPureLeftShift) {
    const WalkState s = step(initial_state(Qubit::zero(), 2), 0.0);
    EXPECT_EQ(s.alpha(-1), Complex(1.0));
    EXPECT_EQ(position_distribution(s), (PositionDistribution{{-1, 1.0}}));
}

TEST(Step, TwoStepsQuarterPi) {
    const WalkState s = evolve(Qubit::zero(), CoinSchedule::constant(pi / 4, 2));
    EXPECT_NEAR(std::abs(s.alpha(-2) - 0.5), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.alpha(0) + 0.5), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.beta(0) - Complex(0, -0.5)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.beta(2) - Complex(0, -0.5)), 0.0, 1e-15);
    const auto dist = position_distribution(s);
    ASSERT_EQ(dist.size(), 3u);
    EXPECT_NEAR(dist.at(-2), 0.25, 1e-15);
    EXPECT_NEAR(dist.at(0), 0.5, 1e-15);
    EXPECT_NEAR(dist.at(2), 0.25, 1e-15);
}

TEST(Step, CapacityExceeded) {
    const WalkState s = step(initial_state(Qubit::zero(), 1), 0.3);
    EXPECT_THROW(step(s, 0.3), CapacityExceeded);
}

TEST(Step, MatchesNaiveSweep) {
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> angle(-pi, pi);
    for (int trial = 0; trial < 20; ++trial) {
        WalkState s = initial_state(test::random_qubit(gen), 30);
        for (int t = 0; t < 30; ++t) {
            const double theta = angle(gen);
            const auto expected = naive_step(s, theta);
            s = step(s, theta);
            for (std::size_t k = 0; k < expected.size(); ++k) {
                ASSERT_EQ(s.sites()[k].alpha, expected[k].alpha);
                ASSERT_EQ(s.sites()[k].beta, expected[k].beta);
            }
        }
    }
}

TEST(Evolve, EmptyScheduleIsInitialState) {
    const Qubit q = Qubit::from_angles(0.7, 0.2);
    const WalkState s = evolve(q, CoinSchedule::constant(0.5, 0));
    EXPECT_EQ(s.steps_elapsed(), 0);
    EXPECT_EQ(s.alpha(0), q.alpha);
    EXPECT_EQ(s.beta(0), q.beta);
}

TEST(Evolve, NormSupportParityAfterEveryStep) {
    std::mt19937_64 gen(17);
    for (int trial = 0; trial < 40; ++trial) {
        const auto schedule = trial % 2 == 0
                                  ? CoinSchedule::temporal_disorder(trial, 150)
                                  : CoinSchedule::constant(0.1 * trial - 2.0, 150);
        int observed = 0;
        evolve(test::random_qubit(gen), schedule, [&](const WalkState& s) {
            expect_structure(s);
            double total = 0.0;
            for (const auto& [j, p] : position_distribution(s)) {
                total += p;
            }
            EXPECT_NEAR(total, 1.0, 1e-12);
            ++observed;
        });
        EXPECT_EQ(observed, 151);
    }
}

TEST(Evolve, Linearity) {
    std::mt19937_64 gen(23);
    std::uniform_real_distribution<double> angle(-pi, pi);
    for (int trial = 0; trial < 20; ++trial) {
        const auto schedule = CoinSchedule::temporal_disorder(500 + trial, 60);
        const Qubit q = test::random_qubit(gen);
        const WalkState sup = evolve(q, schedule);
        const WalkState e0 = evolve(Qubit::zero(), schedule);
        const WalkState e1 = evolve(Qubit::one(), schedule);
        for (int j = -60; j <= 60; ++j) {
            EXPECT_NEAR(std::abs(sup.alpha(j) - (q.alpha * e0.alpha(j) + q.beta * e1.alpha(j))),
                        0.0, 1e-12);
            EXPECT_NEAR(std::abs(sup.beta(j) - (q.alpha * e0.beta(j) + q.beta * e1.beta(j))), 0.0,
                        1e-12);
        }
    }
}

TEST(Schedule, Constant) {
    const auto s = make_schedule(ConstantCoin{pi / 6}, 3);
    ASSERT_EQ(s.size(), 3u);
    for (double a : s.angles()) {
        EXPECT_EQ(a, pi / 6);
    }
    EXPECT_NEAR(s.theta_sum(), pi / 2, 1e-15);
    EXPECT_EQ(s.kind(), ScheduleKind::Constant);
    // Constant coins outside the disorder range are allowed.
    EXPECT_NO_THROW(make_schedule(ConstantCoin{3.0}, 4));
}

TEST(Schedule, DisorderNeedsSeed) {
    EXPECT_THROW(make_schedule(DisorderedCoin{}, 10), std::invalid_argument);
}

TEST(Schedule, DisorderIsDeterministicAndInRange) {
    const auto a = make_schedule(DisorderedCoin{}, 100, 42);
    const auto b = make_schedule(DisorderedCoin{}, 100, 42);
    const auto c = make_schedule(DisorderedCoin{}, 100, 43);
    ASSERT_EQ(a.size(), 100u);
    EXPECT_TRUE(std::equal(a.angles().begin(), a.angles().end(), b.angles().begin()));
    EXPECT_FALSE(std::equal(a.angles().begin(), a.angles().end(), c.angles().begin()));
    for (double x : a.angles()) {
        EXPECT_GE(x, -pi / 2);
        EXPECT_LE(x, pi / 2);
    }
    // Prefixes of a longer draw agree with shorter draws.
    const auto longer = make_schedule(DisorderedCoin{}, 300, 42);
    EXPECT_TRUE(std::equal(a.angles().begin(), a.angles().end(), longer.angles().begin()));
}

TEST(Schedule, DisorderPinnedValues) {
    // Portable generator: these values are frozen so a change of generator or
    // of the bits-to-angle mapping is caught.
    std::mt19937_64 gen(2024);
    const auto s = CoinSchedule::temporal_disorder(2024, 3);
    for (double a : s.angles()) {
        const double u = static_cast<double>(gen() >> 11) / 9007199254740992.0;
        EXPECT_EQ(a, -pi / 2 + pi * u);
    }
    // 10000th output of mt19937_64 with the default seed is fixed by the C++ standard.
    std::mt19937_64 ref;
    ref.discard(9999);
    EXPECT_EQ(ref(), 9981545732273789042ull);
}

TEST(Schedule, DisorderStatistics) {
    const auto s = make_schedule(DisorderedCoin{}, 100000, 99);
    double mean = 0.0;
    for (double x : s.angles()) {
        mean += x;
    }
    mean /= static_cast<double>(s.size());
    double var = 0.0;
    for (double x : s.angles()) {
        var += (x - mean) * (x - mean);
    }
    var /= static_cast<double>(s.size() - 1);
    EXPECT_LT(std::abs(mean), 0.02);
    // Uniform on a width-pi interval has variance pi^2 / 12.
    EXPECT_NEAR(var, pi * pi / 12.0, 0.02);
}

TEST(Schedule, ThetaSumMatchesExtendedSum) {
    const auto s = CoinSchedule::temporal_disorder(8, 100000);
    long double reference = 0.0L;
    for (double a : s.angles()) {
        reference += a;
    }
    EXPECT_NEAR(s.theta_sum(), static_cast<double>(reference), 1e-12);
    const auto p = s.prefix(10);
    EXPECT_EQ(p.size(), 10u);
    EXPECT_EQ(p.seed(), s.seed());
}

// sigma(t) for the ordered walk grows linearly: least-squares line over
// t in [20, 200] with R^2 >= 0.99.
TEST(Spread, OrderedWalkIsBallistic) {
    std::vector<double> ts, sigmas;
    evolve(Qubit::zero(), CoinSchedule::constant(pi / 4, 200), [&](const WalkState& s) {
        if (s.steps_elapsed() >= 20) {
            ts.push_back(s.steps_elapsed());
            sigmas.push_back(localization_report(s).std_dev);
        }
    });
    const double n = static_cast<double>(ts.size());
    double mx = 0, my = 0;
    for (std::size_t k = 0; k < ts.size(); ++k) {
        mx += ts[k];
        my += sigmas[k];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t k = 0; k < ts.size(); ++k) {
        sxy += (ts[k] - mx) * (sigmas[k] - my);
        sxx += (ts[k] - mx) * (ts[k] - mx);
        syy += (sigmas[k] - my) * (sigmas[k] - my);
    }
    const double r2 = sxy * sxy / (sxx * syy);
    EXPECT_GE(r2, 0.99);
    EXPECT_GT(sxy / sxx, 0.4);
}

// The disordered walk spreads diffusively, far slower than the ordered one.
TEST(Spread, DisorderSuppressesBallisticGrowth) {
    double ordered50 = 0, ordered200 = 0;
    evolve(Qubit::zero(), CoinSchedule::constant(pi / 4, 200), [&](const WalkState& s) {
        if (s.steps_elapsed() == 50) ordered50 = localization_report(s).std_dev;
        if (s.steps_elapsed() == 200) ordered200 = localization_report(s).std_dev;
    });
    EXPECT_NEAR(ordered200 / ordered50, 4.0, 0.1);

    double mean50 = 0, mean200 = 0;
    const int seeds = 60;
    for (int seed = 1; seed <= seeds; ++seed) {
        evolve(Qubit::zero(), CoinSchedule::temporal_disorder(seed, 200), [&](const WalkState& s) {
            if (s.steps_elapsed() == 50) mean50 += localization_report(s).std_dev / seeds;
            if (s.steps_elapsed() == 200) mean200 += localization_report(s).std_dev / seeds;
        });
    }
    EXPECT_LT(mean200 / mean50, 2.5);
    EXPECT_LT(mean200, ordered200 / 3.0);
}

}  // namespace
}  // namespace qwmem
