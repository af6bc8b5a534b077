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

#include "qotoc/state_vector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qotoc {

const char* to_string(PauliAxis axis) {
    switch (axis) {
    case PauliAxis::X:
        return "X";
    case PauliAxis::Y:
        return "Y";
    case PauliAxis::Z:
        return "Z";
    }
    return "?";
}

PauliAxis pauli_axis_from_string(const std::string& s) {
    if (s == "X" || s == "x") {
        return PauliAxis::X;
    }
    if (s == "Y" || s == "y") {
        return PauliAxis::Y;
    }
    if (s == "Z" || s == "z") {
        return PauliAxis::Z;
    }
    throw std::invalid_argument("unknown Pauli axis: " + s);
}

StateVector::StateVector(int n) : n_qubits(n) {
    if (n < 0 || n > 62) {
        throw std::out_of_range("qubit count out of range: " +
                                std::to_string(n));
    }
    amplitudes.assign(std::size_t{1} << n, cdouble{0.0, 0.0});
}

StateVector StateVector::zero_state(int n) {
    StateVector s(n);
    s.amplitudes[0] = cdouble{1.0, 0.0};
    return s;
}

StateVector StateVector::basis_state(int n, std::uint64_t index) {
    StateVector s(n);
    if (index >= s.dim()) {
        throw std::out_of_range("basis index out of range");
    }
    s.amplitudes[index] = cdouble{1.0, 0.0};
    return s;
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const cdouble& a : amplitudes) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

double expectation_pauli(const StateVector& state, PauliAxis axis, int qubit) {
    if (qubit < 0 || qubit >= state.n_qubits) {
        throw std::out_of_range("qubit index out of range");
    }
    const std::size_t bit = std::size_t{1} << qubit;
    const std::size_t dim = state.dim();
    double value = 0.0;
    switch (axis) {
    case PauliAxis::Z:
        for (std::size_t i = 0; i < dim; ++i) {
            const double p = std::norm(state.amplitudes[i]);
            value += (i & bit) ? -p : p;
        }
        break;
    case PauliAxis::X:
        for (std::size_t i = 0; i < dim; ++i) {
            if (i & bit) {
                continue;
            }
            value += 2.0 * std::real(std::conj(state.amplitudes[i]) *
                                     state.amplitudes[i | bit]);
        }
        break;
    case PauliAxis::Y:
        for (std::size_t i = 0; i < dim; ++i) {
            if (i & bit) {
                continue;
            }
            value += 2.0 * std::imag(std::conj(state.amplitudes[i]) *
                                     state.amplitudes[i | bit]);
        }
        break;
    }
    return value;
}

cdouble inner_product(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("state dimensions differ");
    }
    cdouble sum{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        sum += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    }
    return sum;
}

} // namespace qotoc
