#include "qwmem/core_math.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qwmem {

namespace {

void require_finite(double value, const char* what) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument(std::string(what) + " must be finite");
    }
}

}  // namespace

Qubit Qubit::from_amplitudes(Complex alpha, Complex beta) {
    Qubit q{alpha, beta};
    const double n = q.norm_squared();
    if (!std::isfinite(n) || std::abs(n - 1.0) > kNormTolerance) {
        throw std::invalid_argument("qubit amplitudes are not normalized (norm^2 = " +
                                    std::to_string(n) + ")");
    }
    return q;
}

Qubit Qubit::normalized(Complex alpha, Complex beta) {
    const double n = std::sqrt(std::norm(alpha) + std::norm(beta));
    if (!std::isfinite(n) || n == 0.0) {
        throw std::invalid_argument("cannot normalize a zero or non-finite qubit");
    }
    return {alpha / n, beta / n};
}

Qubit Qubit::from_angles(double delta, double eta) {
    require_finite(delta, "delta");
    require_finite(eta, "eta");
    return {std::cos(delta), std::polar(std::sin(delta), eta)};
}

double max_abs_diff(const Unitary2& a, const Unitary2& b) {
    const auto ea = a.entries();
    const auto eb = b.entries();
    double worst = 0.0;
    for (std::size_t k = 0; k < ea.size(); ++k) {
        worst = std::max(worst, std::abs(ea[k] - eb[k]));
    }
    return worst;
}

double max_abs_diff(const Qubit& a, const Qubit& b) {
    return std::max(std::abs(a.alpha - b.alpha), std::abs(a.beta - b.beta));
}

bool is_unitary(const Unitary2& u, double tol) {
    return max_abs_diff(u.adjoint() * u, Unitary2::identity()) <= tol;
}

Unitary2 coin_matrix(double theta) {
    require_finite(theta, "coin angle");
    const Complex c = std::cos(theta);
    const Complex s = -kI * std::sin(theta);
    return {c, s, s, c};
}

Unitary2 hadamard() {
    const double h = 1.0 / std::numbers::sqrt2;
    return {h, h, h, -h};
}

Unitary2 sigma_x() { return {0.0, 1.0, 1.0, 0.0}; }

Unitary2 sigma_x_exponential(double angle) {
    require_finite(angle, "angle");
    const Complex c = std::cos(angle);
    const Complex s = -kI * std::sin(angle);
    return {c, s, s, c};
}

double reduce_angle(double angle) {
    double r = std::remainder(angle, 2.0 * std::numbers::pi);
    if (r <= -std::numbers::pi) {
        r += 2.0 * std::numbers::pi;
    }
    return r;
}

Unitary2 phase_diagonal(double angle) {
    require_finite(angle, "angle");
    const double r = reduce_angle(angle);
    return {std::polar(1.0, -r), 0.0, 0.0, std::polar(1.0, r)};
}

Qubit apply(const Unitary2& u, const Qubit& q) {
    return {u.m00 * q.alpha + u.m01 * q.beta, u.m10 * q.alpha + u.m11 * q.beta};
}

Complex inner_product(const Qubit& a, const Qubit& b) {
    return std::conj(a.alpha) * b.alpha + std::conj(a.beta) * b.beta;
}

double fidelity(const Qubit& a, const Qubit& b) {
    return std::clamp(std::norm(inner_product(a, b)), 0.0, 1.0);
}

Unitary2 power(const Unitary2& u, unsigned exponent) {
    Unitary2 result = Unitary2::identity();
    Unitary2 base = u;
    while (exponent != 0) {
        if (exponent & 1u) {
            result = result * base;
        }
        base = base * base;
        exponent >>= 1u;
    }
    return result;
}

}  // namespace qwmem
