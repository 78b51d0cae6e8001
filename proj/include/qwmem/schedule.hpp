#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace qwmem {

enum class ScheduleKind { Constant, TemporalDisorder, Explicit };

std::string to_string(ScheduleKind kind);

/// Sequence of coin angles theta_1 .. theta_t, applied theta_1 first.
///
/// Temporal disorder draws i.i.d. angles uniformly from [-pi/2, pi/2) using
/// std::mt19937_64 seeded with the schedule seed. Each angle is
/// -pi/2 + pi * u, where u = (next() >> 11) * 2^-53 takes the top 53 bits of
/// the generator output. Both steps are fully specified by the C++ standard,
/// so a seed replays the same angles bit-for-bit on every platform.
class CoinSchedule {
  public:
    static CoinSchedule constant(double theta, std::size_t length);
    static CoinSchedule temporal_disorder(std::uint64_t seed, std::size_t length);
    static CoinSchedule from_angles(std::vector<double> angles);

    ScheduleKind kind() const { return kind_; }
    std::span<const double> angles() const { return angles_; }
    std::size_t size() const { return angles_.size(); }
    bool empty() const { return angles_.empty(); }

    /// Accumulated angle sum, compensated summation in double precision.
    double theta_sum() const { return theta_sum_; }

    /// Only meaningful for Constant schedules.
    std::optional<double> constant_theta() const { return constant_theta_; }
    std::optional<std::uint64_t> seed() const { return seed_; }

    /// The same kind and parameters truncated to the first n angles.
    CoinSchedule prefix(std::size_t n) const;

  private:
    CoinSchedule(ScheduleKind kind, std::vector<double> angles);

    ScheduleKind kind_;
    std::vector<double> angles_;
    double theta_sum_ = 0.0;
    std::optional<double> constant_theta_;
    std::optional<std::uint64_t> seed_;
};

struct ConstantCoin {
    double theta;
};
struct DisorderedCoin {};

using ScheduleSpec = std::variant<ConstantCoin, DisorderedCoin>;

/// Throws std::invalid_argument when a disordered schedule has no seed.
CoinSchedule make_schedule(const ScheduleSpec& spec, std::size_t length,
                           std::optional<std::uint64_t> seed = std::nullopt);

/// Neumaier-compensated sum.
double compensated_sum(std::span<const double> values);

}  // namespace qwmem
