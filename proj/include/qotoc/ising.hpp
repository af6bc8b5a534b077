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

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qotoc/circuit.hpp"

namespace qotoc {

enum class Boundary { Open, Periodic };

/// Nearest-neighbor Ising chain
///   H = sum_bonds J Z_i Z_j + sum_i (h_x X_i + h_z Z_i)
/// in dimensionless units (hbar = 1). Site k maps to qubit k.
struct IsingChainSpec {
    int n_sites = 0;
    double coupling = 1.0; // J
    double field_x = 0.0;  // h_x
    double field_z = 0.0;  // h_z
    Boundary boundary = Boundary::Open;
};

enum class EvolutionMethod { Exact, Trotter1, Trotter2 };

/// Which exponent realizes the evolution operator U(tau).
enum class SignConvention {
    MinusIHTau, // U = exp(-i H tau), standard Schroedinger propagator
    PlusIHTau,  // U = exp(+i H tau)
};

const char* to_string(Boundary b);
const char* to_string(EvolutionMethod m);
const char* to_string(SignConvention s);

struct EvolutionSpec {
    double tau = 0.0;
    EvolutionMethod method = EvolutionMethod::Exact;
    int steps = 1; // Trotter only
    SignConvention sign = SignConvention::MinusIHTau;
};

struct LocalPauli {
    int site = 0;
    PauliAxis axis = PauliAxis::Z;
};

/// Chaotic default: J=1, h_x=1.05, h_z=0.5 (artifact default, open chain).
IsingChainSpec chaotic_preset(int n_sites);
/// Integrable default: transverse field only (h_z = 0).
IsingChainSpec integrable_preset(int n_sites);
/// Lookup by the preset names exposed on the CLI.
IsingChainSpec preset_by_name(const std::string& name, int n_sites);

void validate(const IsingChainSpec& spec);
void validate(const EvolutionSpec& evo);

/// ZZ bond list: (i, i+1) pairs, plus the (n-1, 0) wrap bond for periodic
/// chains with n_sites >= 3 (a 2-site ring would double-count its only bond).
std::vector<std::pair<int, int>> ising_bonds(const IsingChainSpec& spec);

/// Dense Hermitian H (2^n x 2^n) built directly from the bit structure:
/// diagonal ZZ + h_z part plus h_x bit-flip entries.
Eigen::MatrixXcd build_ising_hamiltonian(const IsingChainSpec& spec);

/// Gate decomposition of U(tau). Trotter methods emit O(steps * n_sites)
/// ZZ/RZ/RX gates; Exact emits a single full-register dense gate from the
/// Hamiltonian eigendecomposition (testing and oracle-backed runs only).
Circuit build_evolution_circuit(const IsingChainSpec& spec,
                                const EvolutionSpec& evo);

/// Single-qubit Pauli gate on the mapped qubit.
Gate pauli_gate(const LocalPauli& op);

} // namespace qotoc
