#include "qwmem/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qwmem::oracle {

namespace {

Eigen::Index sites_of(int capacity) { return 2 * static_cast<Eigen::Index>(capacity) + 1; }

// Position slot in the extended (lattice + R) space.
Eigen::Index slot(int site, int capacity) {
    return site == kReadout ? sites_of(capacity) : static_cast<Eigen::Index>(site + capacity);
}

Eigen::Index ext_index(int site, int coin, int capacity) {
    return 2 * slot(site, capacity) + coin;
}

std::vector<int> extended_sites(int capacity) {
    std::vector<int> out;
    for (int j = -capacity; j <= capacity; ++j) {
        out.push_back(j);
    }
    out.push_back(kReadout);
    return out;
}

}  // namespace

DenseGlobalState DenseGlobalState::localized(const Qubit& q, int capacity) {
    DenseGlobalState s;
    s.capacity = capacity;
    s.amplitudes = Eigen::VectorXcd::Zero(2 * sites_of(capacity));
    s.amplitudes(index(0, 0, capacity)) = q.alpha;
    s.amplitudes(index(0, 1, capacity)) = q.beta;
    return s;
}

Complex DenseGlobalState::at(int j, int coin) const {
    if (j < -capacity || j > capacity) {
        return {};
    }
    return amplitudes(index(j, coin, capacity));
}

DenseMatrix coin_layer(double theta, int capacity) {
    Eigen::Matrix2cd b;
    b << std::cos(theta), Complex(0.0, -std::sin(theta)),
         Complex(0.0, -std::sin(theta)), std::cos(theta);
    const Eigen::Index n = sites_of(capacity);
    DenseMatrix layer = DenseMatrix::Zero(2 * n, 2 * n);
    for (Eigen::Index p = 0; p < n; ++p) {
        layer.block<2, 2>(2 * p, 2 * p) = b;
    }
    return layer;
}

DenseMatrix shift_operator(int capacity) {
    const Eigen::Index n = sites_of(capacity);
    DenseMatrix shift = DenseMatrix::Zero(2 * n, 2 * n);
    for (Eigen::Index p = 0; p < n; ++p) {
        const Eigen::Index left = (p - 1 + n) % n;
        const Eigen::Index right = (p + 1) % n;
        shift(2 * left, 2 * p) = 1.0;
        shift(2 * right + 1, 2 * p + 1) = 1.0;
    }
    return shift;
}

DenseMatrix build_walk_unitary(double theta, int capacity) {
    if (capacity < 1) {
        throw std::invalid_argument("oracle capacity must be at least 1");
    }
    return shift_operator(capacity) * coin_layer(theta, capacity);
}

DenseGlobalState oracle_evolve(const Qubit& q, const CoinSchedule& schedule) {
    const int capacity = static_cast<int>(schedule.size()) + 1;
    DenseGlobalState state = DenseGlobalState::localized(q, capacity);
    for (double theta : schedule.angles()) {
        state.amplitudes = build_walk_unitary(theta, capacity) * state.amplitudes;
    }
    return state;
}

Qubit oracle_collect(const DenseGlobalState& state) {
    Qubit out{0.0, 0.0};
    for (Eigen::Index k = 0; k < state.amplitudes.size(); ++k) {
        (k % 2 == 0 ? out.alpha : out.beta) += state.amplitudes(k);
    }
    return out;
}

Qubit oracle_evolve_and_collect(const Qubit& q, const CoinSchedule& schedule) {
    return oracle_collect(oracle_evolve(q, schedule));
}

SparseMatrix collection_c0(int site, int capacity) {
    const Eigen::Index dim = 2 * (sites_of(capacity) + 1);
    SparseMatrix m(dim, dim);
    std::vector<Eigen::Triplet<Complex, Eigen::Index>> entries{
        {ext_index(kReadout, 0, capacity), ext_index(site, 0, capacity), 1.0},
        {ext_index(site, 1, capacity), ext_index(site, 1, capacity), 1.0},
    };
    m.setFromTriplets(entries.begin(), entries.end());
    return m;
}

SparseMatrix collection_c1(int site, int capacity) {
    const Eigen::Index dim = 2 * (sites_of(capacity) + 1);
    SparseMatrix m(dim, dim);
    std::vector<Eigen::Triplet<Complex, Eigen::Index>> entries{
        {ext_index(site, 0, capacity), ext_index(site, 0, capacity), 1.0},
        {ext_index(kReadout, 1, capacity), ext_index(site, 1, capacity), 1.0},
    };
    m.setFromTriplets(entries.begin(), entries.end());
    return m;
}

SparseMatrix collection_operator(int capacity) {
    const Eigen::Index dim = 2 * (sites_of(capacity) + 1);
    SparseMatrix total(dim, dim);
    const auto sites = extended_sites(capacity);
    for (int jp : sites) {
        const SparseMatrix c1 = collection_c1(jp, capacity);
        for (int j : sites) {
            total += SparseMatrix(c1 * collection_c0(j, capacity));
        }
    }
    return total;
}

Qubit sequential_collect(const DenseGlobalState& state, double* residual) {
    const Eigen::Index lattice_dim = 2 * sites_of(state.capacity);
    Eigen::VectorXcd extended = Eigen::VectorXcd::Zero(lattice_dim + 2);
    extended.head(lattice_dim) = state.amplitudes;
    const Eigen::VectorXcd out = collection_operator(state.capacity) * extended;
    if (residual != nullptr) {
        *residual = out.head(lattice_dim).norm();
    }
    return {out(lattice_dim), out(lattice_dim + 1)};
}

}  // namespace qwmem::oracle
