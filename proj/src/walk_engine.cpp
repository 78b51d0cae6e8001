#include "qwmem/walk_engine.hpp"

#include <cmath>
#include <string>

namespace qwmem {

WalkState::WalkState(const Qubit& q, int capacity) : capacity_(capacity) {
    if (capacity < 0) {
        throw std::invalid_argument("capacity must be nonnegative");
    }
    sites_.assign(2 * static_cast<std::size_t>(capacity) + 1, SiteAmplitudes{});
    sites_[capacity] = {q.alpha, q.beta};
}

WalkState WalkState::from_sites(std::vector<SiteAmplitudes> sites, int steps_elapsed) {
    if (sites.size() % 2 == 0) {
        throw std::invalid_argument("site array must have odd length 2 * capacity + 1");
    }
    WalkState s;
    s.capacity_ = static_cast<int>(sites.size() / 2);
    s.steps_ = steps_elapsed;
    s.sites_ = std::move(sites);
    return s;
}

SiteAmplitudes WalkState::at(int j) const {
    if (j < -capacity_ || j > capacity_) {
        return {};
    }
    return sites_[static_cast<std::size_t>(j + capacity_)];
}

double WalkState::norm_squared() const {
    double total = 0.0;
    for (const auto& site : sites_) {
        total += site.probability();
    }
    return total;
}

WalkState initial_state(const Qubit& q, int capacity) { return WalkState(q, capacity); }

void step_into(const WalkState& s, double theta, WalkState& out) {
    if (s.steps_ >= s.capacity_) {
        throw CapacityExceeded("walk step " + std::to_string(s.steps_ + 1) +
                               " exceeds capacity " + std::to_string(s.capacity_));
    }
    const Complex c = std::cos(theta);
    const Complex is = kI * std::sin(theta);
    const int t = s.steps_ + 1;
    const int cap = s.capacity_;

    out.capacity_ = cap;
    out.steps_ = t;
    out.sites_.assign(s.sites_.size(), SiteAmplitudes{});

    const auto& prev = s.sites_;
    // Only sites with j + t even can be reached; the rest stay zero.
    for (int j = -t; j <= t; j += 2) {
        const std::size_t k = static_cast<std::size_t>(j + cap);
        SiteAmplitudes& dst = out.sites_[k];
        if (j + 1 <= cap) {
            const auto& right = prev[k + 1];
            dst.alpha = c * right.alpha - is * right.beta;
        }
        if (j - 1 >= -cap) {
            const auto& left = prev[k - 1];
            dst.beta = c * left.beta - is * left.alpha;
        }
    }
}

WalkState step(const WalkState& s, double theta) {
    WalkState out;
    step_into(s, theta, out);
    return out;
}

WalkState evolve(const Qubit& q, const CoinSchedule& schedule) {
    return evolve(q, schedule, nullptr);
}

WalkState evolve(const Qubit& q, const CoinSchedule& schedule,
                 const std::function<void(const WalkState&)>& observer) {
    WalkState current(q, static_cast<int>(schedule.size()));
    if (observer) {
        observer(current);
    }
    WalkState next = current;
    for (double theta : schedule.angles()) {
        step_into(current, theta, next);
        std::swap(current, next);
        if (observer) {
            observer(current);
        }
    }
    return current;
}

PositionDistribution position_distribution(const WalkState& s) {
    PositionDistribution dist;
    const auto sites = s.sites();
    for (std::size_t k = 0; k < sites.size(); ++k) {
        const double p = sites[k].probability();
        if (p > 0.0) {
            dist.emplace(static_cast<int>(k) - s.capacity(), p);
        }
    }
    return dist;
}

}  // namespace qwmem
