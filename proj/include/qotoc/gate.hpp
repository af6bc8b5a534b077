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

#pragma once

#include <array>
#include <string>
#include <vector>

#include "qotoc/state_vector.hpp"

namespace qotoc {

enum class GateKind {
    H,
    X,
    Y,
    Z,
    S,
    Phase,   // diag(1, e^{i theta})
    RX,      // exp(-i theta/2 X)
    RZ,      // exp(-i theta/2 Z)
    ZZ,      // exp(-i theta/2 Z(x)Z), native diagonal two-qubit gate
    Dense1Q, // explicit 2x2 unitary
    Dense2Q, // explicit 4x4 unitary
    DenseN,  // explicit 2^k x 2^k unitary on the low k qubits
};

const char* to_string(GateKind kind);

/// One gate application: a named or explicit unitary on `targets`, promoted
/// to its controlled version when `controls` is non-empty. Dense matrices
/// are stored column-major; for multi-target gates, targets[0] is the least
/// significant bit of the gate's local basis index.
struct Gate {
    GateKind kind = GateKind::H;
    double theta = 0.0;
    std::vector<int> targets;
    std::vector<int> controls;
    std::vector<cdouble> matrix; // Dense kinds only

    static Gate h(int q);
    static Gate x(int q);
    static Gate y(int q);
    static Gate z(int q);
    static Gate s(int q);
    static Gate phase(int q, double theta);
    static Gate rx(int q, double theta);
    static Gate rz(int q, double theta);
    static Gate zz(int qa, int qb, double theta);
    /// Validates unitarity (max-norm residual of U+U - I <= 1e-10).
    static Gate dense1q(int q, const std::array<cdouble, 4>& column_major);
    static Gate dense2q(int qa, int qb,
                        const std::array<cdouble, 16>& column_major);
    /// Dense unitary on qubits 0..k-1 (column-major, dim = 2^k). Unitarity
    /// is verified exhaustively up to dim 256 and by spot checks above.
    static Gate dense_low_qubits(int k, std::vector<cdouble> column_major);

    /// cnot = controlled X.
    static Gate cnot(int control, int target);

    int span_qubits() const; // largest referenced qubit index + 1
    bool is_diagonal() const;

    /// Formal inverse: same kind with negated angle, or the adjoint matrix.
    Gate adjoint() const;

    /// Copy of this gate with one more control qubit. Throws if the control
    /// collides with an existing target or control.
    Gate with_control(int control) const;

    /// The 2x2 matrix (column-major) for single-qubit kinds.
    std::array<cdouble, 4> unitary2() const;
    /// Diagonal factors (d0, d1) for diagonal single-qubit kinds.
    std::array<cdouble, 2> diag_factors() const;
    /// (same-parity, opposite-parity) phase factors for ZZ.
    std::array<cdouble, 2> zz_factors() const;
};

} // namespace qotoc
