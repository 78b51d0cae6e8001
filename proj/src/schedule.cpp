#include "qwmem/schedule.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qwmem {

std::string to_string(ScheduleKind kind) {
    switch (kind) {
        case ScheduleKind::Constant:
            return "constant";
        case ScheduleKind::TemporalDisorder:
            return "disorder";
        case ScheduleKind::Explicit:
            return "explicit";
    }
    return "unknown";
}

double compensated_sum(std::span<const double> values) {
    double sum = 0.0;
    double carry = 0.0;
    for (double v : values) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }
    return sum + carry;
}

CoinSchedule::CoinSchedule(ScheduleKind kind, std::vector<double> angles)
    : kind_(kind), angles_(std::move(angles)), theta_sum_(compensated_sum(angles_)) {}

CoinSchedule CoinSchedule::constant(double theta, std::size_t length) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("constant coin angle must be finite");
    }
    CoinSchedule s(ScheduleKind::Constant, std::vector<double>(length, theta));
    s.constant_theta_ = theta;
    return s;
}

CoinSchedule CoinSchedule::temporal_disorder(std::uint64_t seed, std::size_t length) {
    std::mt19937_64 gen(seed);
    std::vector<double> angles(length);
    for (double& a : angles) {
        const double u = static_cast<double>(gen() >> 11) * 0x1p-53;
        a = -0.5 * std::numbers::pi + std::numbers::pi * u;
    }
    CoinSchedule s(ScheduleKind::TemporalDisorder, std::move(angles));
    s.seed_ = seed;
    return s;
}

CoinSchedule CoinSchedule::from_angles(std::vector<double> angles) {
    for (double a : angles) {
        if (!std::isfinite(a)) {
            throw std::invalid_argument("coin angles must be finite");
        }
    }
    return CoinSchedule(ScheduleKind::Explicit, std::move(angles));
}

CoinSchedule CoinSchedule::prefix(std::size_t n) const {
    if (n > angles_.size()) {
        throw std::out_of_range("schedule prefix longer than schedule");
    }
    CoinSchedule s(kind_, std::vector<double>(angles_.begin(), angles_.begin() + n));
    s.constant_theta_ = constant_theta_;
    s.seed_ = seed_;
    return s;
}

CoinSchedule make_schedule(const ScheduleSpec& spec, std::size_t length,
                           std::optional<std::uint64_t> seed) {
    if (const auto* c = std::get_if<ConstantCoin>(&spec)) {
        return CoinSchedule::constant(c->theta, length);
    }
    if (!seed) {
        throw std::invalid_argument("temporal disorder schedule requires a seed");
    }
    return CoinSchedule::temporal_disorder(*seed, length);
}

}  // namespace qwmem
