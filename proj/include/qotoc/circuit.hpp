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

#include "qotoc/gate.hpp"
#include "qotoc/state_vector.hpp"

namespace qotoc {

/// Ordered gate sequence on a fixed number of qubits; gates[0] acts first.
struct Circuit {
    int n_qubits = 0;
    std::vector<Gate> gates;

    Circuit() = default;
    explicit Circuit(int n) : n_qubits(n) {}

    /// Appends a gate; throws std::out_of_range if it references qubits
    /// beyond n_qubits.
    void append(Gate gate);

    /// Gates in reverse order, each replaced by its adjoint.
    Circuit inverse() const;

    std::size_t size() const { return gates.size(); }
};

/// Every gate acquires `control` as an additional control qubit. The control
/// must not be referenced by any gate; the result spans
/// max(n_qubits, control + 1) qubits.
Circuit controlled(const Circuit& circuit, int control);

/// `times` copies of `circuit` in sequence.
Circuit repeat(const Circuit& circuit, int times);

/// Applies one gate (controlled form when controls are present). The state
/// is taken by value and returned; pass an rvalue to update in place.
StateVector apply_gate(StateVector state, const Gate& gate);

/// Applies gates in sequence order.
StateVector apply_circuit(StateVector state, const Circuit& circuit);

} // namespace qotoc
