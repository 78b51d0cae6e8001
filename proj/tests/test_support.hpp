#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "qwmem/core_math.hpp"

namespace qwmem::test {

/// Haar-ish random pure state: uniform delta in [0, pi], eta in [-pi, pi].
template <typename Gen>
Qubit random_qubit(Gen& gen) {
    std::uniform_real_distribution<double> delta(0.0, std::numbers::pi);
    std::uniform_real_distribution<double> eta(-std::numbers::pi, std::numbers::pi);
    return Qubit::from_angles(delta(gen), eta(gen));
}

}  // namespace qwmem::test
