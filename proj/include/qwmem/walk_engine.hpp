#pragma once

#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "qwmem/core_math.hpp"
#include "qwmem/schedule.hpp"

namespace qwmem {

class CapacityExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Coin amplitudes held at one lattice site.
struct SiteAmplitudes {
    Complex alpha;
    Complex beta;

    double probability() const { return std::norm(alpha) + std::norm(beta); }
};

/// Coin (x) position state on sites -capacity .. +capacity.
///
/// Storage is a dense array of 2 * capacity + 1 sites with the origin at
/// index `capacity`. Sites with |j| > steps_elapsed, and sites with
/// j + steps_elapsed odd, are exactly zero.
class WalkState {
  public:
    WalkState(const Qubit& q, int capacity);

    /// Arbitrary amplitudes, indexed from -capacity. Only used to feed
    /// hand-built states into collect / eavesdrop; no invariant is checked.
    static WalkState from_sites(std::vector<SiteAmplitudes> sites, int steps_elapsed);

    int capacity() const { return capacity_; }
    int steps_elapsed() const { return steps_; }

    /// Zero outside the stored range.
    SiteAmplitudes at(int j) const;
    Complex alpha(int j) const { return at(j).alpha; }
    Complex beta(int j) const { return at(j).beta; }

    /// All stored sites, index k <-> position k - capacity.
    std::span<const SiteAmplitudes> sites() const { return sites_; }

    double norm_squared() const;

  private:
    WalkState() = default;
    friend WalkState step(const WalkState&, double);
    friend void step_into(const WalkState&, double, WalkState&);

    int capacity_ = 0;
    int steps_ = 0;
    std::vector<SiteAmplitudes> sites_;
};

WalkState initial_state(const Qubit& q, int capacity);

/// One walk step: coin B(theta) on every site followed by the conditional
/// shift (|0> left, |1> right). Throws CapacityExceeded when
/// steps_elapsed == capacity.
WalkState step(const WalkState& s, double theta);

/// Same as step but writes into `out` (reusing its storage).
void step_into(const WalkState& s, double theta, WalkState& out);

/// Applies the schedule with capacity equal to its length.
WalkState evolve(const Qubit& q, const CoinSchedule& schedule);

/// As above, calling `observer` on the initial state and after every step.
WalkState evolve(const Qubit& q, const CoinSchedule& schedule,
                 const std::function<void(const WalkState&)>& observer);

/// Occupied sites only (p > 0), ascending in j.
using PositionDistribution = std::map<int, double>;

PositionDistribution position_distribution(const WalkState& s);

}  // namespace qwmem
