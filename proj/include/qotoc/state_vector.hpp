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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qotoc {

using cdouble = std::complex<double>;

enum class PauliAxis { X, Y, Z };

const char* to_string(PauliAxis axis);
PauliAxis pauli_axis_from_string(const std::string& s);

/// Dense amplitude vector over 2^n_qubits computational basis states.
/// Qubit 0 is the least significant bit of the basis index throughout.
struct StateVector {
    int n_qubits = 0;
    std::vector<cdouble> amplitudes;

    StateVector() = default;
    explicit StateVector(int n);

    /// |0...0>
    static StateVector zero_state(int n);
    /// |index> in the computational basis.
    static StateVector basis_state(int n, std::uint64_t index);

    std::size_t dim() const { return amplitudes.size(); }
    double norm() const;
};

/// <sigma_axis> on one qubit of a normalized state; result is in [-1, 1].
double expectation_pauli(const StateVector& state, PauliAxis axis, int qubit);

/// |<a|b>|-style overlap <a|b>.
cdouble inner_product(const StateVector& a, const StateVector& b);

} // namespace qotoc
