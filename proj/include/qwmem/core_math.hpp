#pragma once

#include <array>
#include <complex>

namespace qwmem {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Tolerance on |alpha|^2 + |beta|^2 - 1 enforced by the checked factories.
inline constexpr double kNormTolerance = 1e-12;

/// Pure state of a two-level system, alpha|0> + beta|1>.
///
/// This is a plain value; the checked factories below are the boundary where
/// normalization is enforced. Results of unitary application stay normalized
/// up to rounding.
struct Qubit {
    Complex alpha{1.0, 0.0};
    Complex beta{0.0, 0.0};

    /// Throws std::invalid_argument unless the pair is normalized within
    /// kNormTolerance.
    static Qubit from_amplitudes(Complex alpha, Complex beta);

    /// Rescales (alpha, beta) to unit norm. Throws std::invalid_argument for
    /// a zero or non-finite pair.
    static Qubit normalized(Complex alpha, Complex beta);

    /// cos(delta)|0> + e^{i eta} sin(delta)|1>.
    static Qubit from_angles(double delta, double eta);

    static Qubit zero() { return {{1.0, 0.0}, {0.0, 0.0}}; }
    static Qubit one() { return {{0.0, 0.0}, {1.0, 0.0}}; }

    double norm_squared() const { return std::norm(alpha) + std::norm(beta); }

    Qubit operator*(Complex phase) const { return {alpha * phase, beta * phase}; }
};

/// 2x2 complex matrix in row-major order.
struct Unitary2 {
    Complex m00, m01, m10, m11;

    static Unitary2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Unitary2 adjoint() const {
        return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
    }

    Unitary2 operator*(const Unitary2& rhs) const {
        return {m00 * rhs.m00 + m01 * rhs.m10, m00 * rhs.m01 + m01 * rhs.m11,
                m10 * rhs.m00 + m11 * rhs.m10, m10 * rhs.m01 + m11 * rhs.m11};
    }

    Unitary2 operator*(Complex s) const { return {m00 * s, m01 * s, m10 * s, m11 * s}; }

    std::array<Complex, 4> entries() const { return {m00, m01, m10, m11}; }
};

/// Largest entrywise modulus of a - b.
double max_abs_diff(const Unitary2& a, const Unitary2& b);
double max_abs_diff(const Qubit& a, const Qubit& b);

/// U^dagger U == 1 entrywise within tol.
bool is_unitary(const Unitary2& u, double tol = kNormTolerance);

/// Coin operation [[cos t, -i sin t], [-i sin t, cos t]].
/// Throws std::invalid_argument for non-finite theta.
Unitary2 coin_matrix(double theta);

Unitary2 hadamard();
Unitary2 sigma_x();

/// exp(-i angle sigma_x) = cos(angle) 1 - i sin(angle) sigma_x.
Unitary2 sigma_x_exponential(double angle);

/// diag(e^{-i angle}, e^{i angle}). The angle is reduced mod 2 pi before the
/// exponentials are evaluated.
Unitary2 phase_diagonal(double angle);

Qubit apply(const Unitary2& u, const Qubit& q);

Complex inner_product(const Qubit& a, const Qubit& b);

/// |<a|b>|^2, insensitive to global phase.
double fidelity(const Qubit& a, const Qubit& b);

/// Integer power by repeated squaring.
Unitary2 power(const Unitary2& u, unsigned exponent);

/// Reduces an angle into (-pi, pi].
double reduce_angle(double angle);

}  // namespace qwmem
