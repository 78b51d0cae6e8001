#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "qwmem/core_math.hpp"
#include "qwmem/schedule.hpp"

// Brute-force reference for the walk: explicit global matrices on the
// truncated lattice, multiplied out with Eigen. Shares no code with the
// recurrence engine beyond the Qubit and CoinSchedule value types.
//
// Basis ordering is position-major, coin-minor:
//   index(j, c) = 2 * (j + capacity) + c,  c = 0 for |0>, 1 for |1>.
// The shift wraps around at the lattice edge. Callers keep capacity > t so
// the wrap is never exercised by a walk.

namespace qwmem::oracle {

using DenseMatrix = Eigen::MatrixXcd;
using SparseMatrix = Eigen::SparseMatrix<Complex>;

struct DenseGlobalState {
    int capacity = 0;
    Eigen::VectorXcd amplitudes;

    static DenseGlobalState localized(const Qubit& q, int capacity);

    static std::size_t index(int j, int coin, int capacity) {
        return 2 * static_cast<std::size_t>(j + capacity) + static_cast<std::size_t>(coin);
    }
    Complex at(int j, int coin) const;
};

/// B(theta) (x) 1 on 2 * (2 * capacity + 1) dimensions.
DenseMatrix coin_layer(double theta, int capacity);

/// Conditional shift S: |0, j> -> |0, j-1>, |1, j> -> |1, j+1>.
DenseMatrix shift_operator(int capacity);

/// S (B(theta) (x) 1). Requires capacity >= 1.
DenseMatrix build_walk_unitary(double theta, int capacity);

/// Dense evolution with capacity = schedule length + 1.
DenseGlobalState oracle_evolve(const Qubit& q, const CoinSchedule& schedule);

/// Sum of the coin components over all sites of a dense state.
Qubit oracle_collect(const DenseGlobalState& state);

Qubit oracle_evolve_and_collect(const Qubit& q, const CoinSchedule& schedule);

/// Collection operators on the lattice extended by the read-out vertex R,
/// which occupies position slot 2 * capacity + 1 (indices 2n, 2n + 1 with
/// n = 2 * capacity + 1). `site` == kReadout selects R itself.
inline constexpr int kReadout = 1 << 30;

/// |0><0| (x) |R><j| + |1><1| (x) |j><j|
SparseMatrix collection_c0(int site, int capacity);
/// |0><0| (x) |j><j| + |1><1| (x) |R><j|
SparseMatrix collection_c1(int site, int capacity);

/// sum_{j'} sum_{j} C1_{j'} C0_{j}, both sums over every lattice site and R.
SparseMatrix collection_operator(int capacity);

/// Applies collection_operator to `state` embedded in the extended space.
/// Returns the qubit found at R; `residual` receives the norm left on
/// ordinary lattice sites (zero for a true collection).
Qubit sequential_collect(const DenseGlobalState& state, double* residual = nullptr);

}  // namespace qwmem::oracle
