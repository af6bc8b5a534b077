// Copyright 2026 The qotoc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qotoc/gate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qotoc/rng.hpp"

namespace qotoc {

namespace {

constexpr double kUnitarityTol = 1e-10;
constexpr std::size_t kExhaustiveUnitarityDim = 256;

const cdouble kI{0.0, 1.0};

// max-norm residual of U+U - I for a column-major dim x dim matrix
double unitarity_residual(const std::vector<cdouble>& m, std::size_t dim) {
    double worst = 0.0;
    for (std::size_t c1 = 0; c1 < dim; ++c1) {
        for (std::size_t c2 = c1; c2 < dim; ++c2) {
            cdouble dot{0.0, 0.0};
            for (std::size_t r = 0; r < dim; ++r) {
                dot += std::conj(m[c1 * dim + r]) * m[c2 * dim + r];
            }
            if (c1 == c2) {
                dot -= 1.0;
            }
            worst = std::max(worst, std::abs(dot));
        }
    }
    return worst;
}

// Cheap spot check for big matrices: ||U x|| must equal ||x|| for a few
// pseudo-random vectors. Catches gross non-unitarity without the O(dim^3)
// full residual.
double unitarity_spot_residual(const std::vector<cdouble>& m,
                               std::size_t dim) {
    double worst = 0.0;
    for (std::uint64_t trial = 0; trial < 3; ++trial) {
        std::vector<cdouble> x(dim);
        double nx = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            x[i] = cdouble{rng::uniform(0x51CF, trial, 2 * i) - 0.5,
                           rng::uniform(0x51CF, trial, 2 * i + 1) - 0.5};
            nx += std::norm(x[i]);
        }
        std::vector<cdouble> y(dim, cdouble{0.0, 0.0});
        for (std::size_t j = 0; j < dim; ++j) {
            for (std::size_t r = 0; r < dim; ++r) {
                y[r] += m[j * dim + r] * x[j];
            }
        }
        double ny = 0.0;
        for (const cdouble& v : y) {
            ny += std::norm(v);
        }
        worst = std::max(worst, std::abs(std::sqrt(ny / nx) - 1.0));
    }
    return worst;
}

void require_unitary(const std::vector<cdouble>& m, std::size_t dim) {
    const double residual = dim <= kExhaustiveUnitarityDim
                                ? unitarity_residual(m, dim)
                                : unitarity_spot_residual(m, dim);
    if (!(residual <= kUnitarityTol)) {
        throw std::invalid_argument("dense gate matrix is not unitary");
    }
}

Gate make(GateKind kind, std::vector<int> targets, double theta = 0.0) {
    Gate g;
    g.kind = kind;
    g.theta = theta;
    g.targets = std::move(targets);
    return g;
}

} // namespace

const char* to_string(GateKind kind) {
    switch (kind) {
    case GateKind::H:
        return "H";
    case GateKind::X:
        return "X";
    case GateKind::Y:
        return "Y";
    case GateKind::Z:
        return "Z";
    case GateKind::S:
        return "S";
    case GateKind::Phase:
        return "PHASE";
    case GateKind::RX:
        return "RX";
    case GateKind::RZ:
        return "RZ";
    case GateKind::ZZ:
        return "ZZ";
    case GateKind::Dense1Q:
        return "DENSE1Q";
    case GateKind::Dense2Q:
        return "DENSE2Q";
    case GateKind::DenseN:
        return "DENSEN";
    }
    return "?";
}

Gate Gate::h(int q) { return make(GateKind::H, {q}); }
Gate Gate::x(int q) { return make(GateKind::X, {q}); }
Gate Gate::y(int q) { return make(GateKind::Y, {q}); }
Gate Gate::z(int q) { return make(GateKind::Z, {q}); }
Gate Gate::s(int q) { return make(GateKind::S, {q}); }
Gate Gate::phase(int q, double theta) {
    return make(GateKind::Phase, {q}, theta);
}
Gate Gate::rx(int q, double theta) { return make(GateKind::RX, {q}, theta); }
Gate Gate::rz(int q, double theta) { return make(GateKind::RZ, {q}, theta); }

Gate Gate::zz(int qa, int qb, double theta) {
    if (qa == qb) {
        throw std::invalid_argument("ZZ gate needs two distinct qubits");
    }
    return make(GateKind::ZZ, {qa, qb}, theta);
}

Gate Gate::dense1q(int q, const std::array<cdouble, 4>& column_major) {
    Gate g = make(GateKind::Dense1Q, {q});
    g.matrix.assign(column_major.begin(), column_major.end());
    require_unitary(g.matrix, 2);
    return g;
}

Gate Gate::dense2q(int qa, int qb, const std::array<cdouble, 16>& column_major) {
    if (qa == qb) {
        throw std::invalid_argument("two-qubit gate needs distinct qubits");
    }
    Gate g = make(GateKind::Dense2Q, {qa, qb});
    g.matrix.assign(column_major.begin(), column_major.end());
    require_unitary(g.matrix, 4);
    return g;
}

Gate Gate::dense_low_qubits(int k, std::vector<cdouble> column_major) {
    if (k < 1 || k > 24) {
        throw std::out_of_range("dense gate qubit count out of range");
    }
    const std::size_t dim = std::size_t{1} << k;
    if (column_major.size() != dim * dim) {
        throw std::invalid_argument("dense gate matrix has wrong size");
    }
    Gate g;
    g.kind = GateKind::DenseN;
    g.targets.resize(k);
    for (int i = 0; i < k; ++i) {
        g.targets[i] = i;
    }
    g.matrix = std::move(column_major);
    require_unitary(g.matrix, dim);
    return g;
}

Gate Gate::cnot(int control, int target) {
    return Gate::x(target).with_control(control);
}

int Gate::span_qubits() const {
    int top = -1;
    for (int t : targets) {
        top = std::max(top, t);
    }
    for (int c : controls) {
        top = std::max(top, c);
    }
    return top + 1;
}

bool Gate::is_diagonal() const {
    switch (kind) {
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Phase:
    case GateKind::RZ:
    case GateKind::ZZ:
        return true;
    default:
        return false;
    }
}

Gate Gate::adjoint() const {
    Gate g = *this;
    switch (kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
        return g; // Hermitian
    case GateKind::S:
        g.kind = GateKind::Phase;
        g.theta = -M_PI_2;
        return g;
    case GateKind::Phase:
    case GateKind::RX:
    case GateKind::RZ:
    case GateKind::ZZ:
        g.theta = -theta;
        return g;
    case GateKind::Dense1Q:
    case GateKind::Dense2Q:
    case GateKind::DenseN: {
        const std::size_t dim = std::size_t{1} << targets.size();
        for (std::size_t c = 0; c < dim; ++c) {
            for (std::size_t r = 0; r <= c; ++r) {
                const cdouble upper = std::conj(matrix[c * dim + r]);
                const cdouble lower = std::conj(matrix[r * dim + c]);
                g.matrix[c * dim + r] = lower;
                g.matrix[r * dim + c] = upper;
            }
        }
        return g;
    }
    }
    return g;
}

Gate Gate::with_control(int control) const {
    if (std::find(targets.begin(), targets.end(), control) != targets.end() ||
        std::find(controls.begin(), controls.end(), control) !=
            controls.end()) {
        throw std::invalid_argument(
            "control qubit collides with an existing target or control");
    }
    Gate g = *this;
    g.controls.push_back(control);
    return g;
}

std::array<cdouble, 4> Gate::unitary2() const {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    switch (kind) {
    case GateKind::H:
        return {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
    case GateKind::X:
        return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Y:
        return {0.0, kI, -kI, 0.0};
    case GateKind::Z:
        return {1.0, 0.0, 0.0, -1.0};
    case GateKind::S:
        return {1.0, 0.0, 0.0, kI};
    case GateKind::Phase:
        return {1.0, 0.0, 0.0, std::exp(kI * theta)};
    case GateKind::RX: {
        const cdouble c = std::cos(theta / 2.0);
        const cdouble s = -kI * std::sin(theta / 2.0);
        return {c, s, s, c};
    }
    case GateKind::RZ:
        return {std::exp(-kI * (theta / 2.0)), 0.0, 0.0,
                std::exp(kI * (theta / 2.0))};
    case GateKind::Dense1Q:
        return {matrix[0], matrix[1], matrix[2], matrix[3]};
    default:
        throw std::logic_error("not a single-qubit gate");
    }
}

std::array<cdouble, 2> Gate::diag_factors() const {
    const std::array<cdouble, 4> u = unitary2();
    return {u[0], u[3]};
}

std::array<cdouble, 2> Gate::zz_factors() const {
    if (kind != GateKind::ZZ) {
        throw std::logic_error("not a ZZ gate");
    }
    return {std::exp(-kI * (theta / 2.0)), std::exp(kI * (theta / 2.0))};
}

} // namespace qotoc
