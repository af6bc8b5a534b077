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

#include "qotoc/ising.hpp"

#include <cmath>
#include <stdexcept>

#include "qotoc/errors.hpp"
#include "qotoc/oracle.hpp"

namespace qotoc {

namespace {

double z_eigenvalue(std::size_t basis, int site) {
    return (basis >> site) & 1 ? -1.0 : 1.0;
}

void append_diagonal_layer(Circuit& c, const IsingChainSpec& spec,
                           double signed_dt) {
    if (spec.coupling != 0.0) {
        for (const auto& [i, j] : ising_bonds(spec)) {
            c.append(Gate::zz(i, j, 2.0 * spec.coupling * signed_dt));
        }
    }
    if (spec.field_z != 0.0) {
        for (int s = 0; s < spec.n_sites; ++s) {
            c.append(Gate::rz(s, 2.0 * spec.field_z * signed_dt));
        }
    }
}

void append_transverse_layer(Circuit& c, const IsingChainSpec& spec,
                             double signed_dt) {
    if (spec.field_x != 0.0) {
        for (int s = 0; s < spec.n_sites; ++s) {
            c.append(Gate::rx(s, 2.0 * spec.field_x * signed_dt));
        }
    }
}

} // namespace

const char* to_string(Boundary b) {
    return b == Boundary::Open ? "open" : "periodic";
}

const char* to_string(EvolutionMethod m) {
    switch (m) {
    case EvolutionMethod::Exact:
        return "exact";
    case EvolutionMethod::Trotter1:
        return "trotter1";
    case EvolutionMethod::Trotter2:
        return "trotter2";
    }
    return "?";
}

const char* to_string(SignConvention s) {
    return s == SignConvention::MinusIHTau ? "exp(-iHt)" : "exp(+iHt)";
}

IsingChainSpec chaotic_preset(int n_sites) {
    return {n_sites, 1.0, 1.05, 0.5, Boundary::Open};
}

IsingChainSpec integrable_preset(int n_sites) {
    return {n_sites, 1.0, 1.05, 0.0, Boundary::Open};
}

IsingChainSpec preset_by_name(const std::string& name, int n_sites) {
    if (name == "chaotic-default") {
        return chaotic_preset(n_sites);
    }
    if (name == "integrable-default") {
        return integrable_preset(n_sites);
    }
    throw std::invalid_argument("unknown model preset: " + name);
}

void validate(const IsingChainSpec& spec) {
    if (spec.n_sites < 1) {
        throw std::invalid_argument("n_sites must be >= 1");
    }
    if (!std::isfinite(spec.coupling) || !std::isfinite(spec.field_x) ||
        !std::isfinite(spec.field_z)) {
        throw std::invalid_argument("model parameters must be finite");
    }
}

void validate(const EvolutionSpec& evo) {
    if (!std::isfinite(evo.tau)) {
        throw std::invalid_argument("tau must be finite");
    }
    if (evo.method != EvolutionMethod::Exact && evo.steps < 1) {
        throw std::invalid_argument("Trotter evolution needs steps >= 1");
    }
}

std::vector<std::pair<int, int>> ising_bonds(const IsingChainSpec& spec) {
    std::vector<std::pair<int, int>> bonds;
    for (int i = 0; i + 1 < spec.n_sites; ++i) {
        bonds.emplace_back(i, i + 1);
    }
    if (spec.boundary == Boundary::Periodic && spec.n_sites >= 3) {
        bonds.emplace_back(spec.n_sites - 1, 0);
    }
    return bonds;
}

Eigen::MatrixXcd build_ising_hamiltonian(const IsingChainSpec& spec) {
    validate(spec);
    if (spec.n_sites > oracle::kOracleCap) {
        throw CapExceededError("dense Hamiltonian capped at n <= " +
                               std::to_string(oracle::kOracleCap));
    }
    const std::size_t dim = std::size_t{1} << spec.n_sites;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    const auto bonds = ising_bonds(spec);
    for (std::size_t b = 0; b < dim; ++b) {
        double diag = 0.0;
        for (const auto& [i, j] : bonds) {
            diag += spec.coupling * z_eigenvalue(b, i) * z_eigenvalue(b, j);
        }
        if (spec.field_z != 0.0) {
            for (int s = 0; s < spec.n_sites; ++s) {
                diag += spec.field_z * z_eigenvalue(b, s);
            }
        }
        h(b, b) = diag;
    }
    if (spec.field_x != 0.0) {
        for (std::size_t b = 0; b < dim; ++b) {
            for (int s = 0; s < spec.n_sites; ++s) {
                h(b ^ (std::size_t{1} << s), b) += spec.field_x;
            }
        }
    }
    return h;
}

Circuit build_evolution_circuit(const IsingChainSpec& spec,
                                const EvolutionSpec& evo) {
    validate(spec);
    validate(evo);
    Circuit c(spec.n_sites);
    if (evo.method == EvolutionMethod::Exact) {
        const Eigen::MatrixXcd u =
            oracle::exact_unitary(spec, evo.tau, evo.sign);
        std::vector<cdouble> column_major(u.data(), u.data() + u.size());
        c.append(Gate::dense_low_qubits(spec.n_sites, std::move(column_major)));
        return c;
    }
    // Rotation angles are theta = 2 * coefficient * dt so that e.g.
    // ZZ(theta) = exp(-i theta/2 ZZ) realizes exp(-i J dt Z Z); the plus
    // convention flips every angle.
    const double direction = evo.sign == SignConvention::MinusIHTau ? 1.0 : -1.0;
    const double dt = direction * evo.tau / evo.steps;
    for (int step = 0; step < evo.steps; ++step) {
        if (evo.method == EvolutionMethod::Trotter1) {
            append_diagonal_layer(c, spec, dt);
            append_transverse_layer(c, spec, dt);
        } else {
            append_diagonal_layer(c, spec, dt / 2.0);
            append_transverse_layer(c, spec, dt);
            append_diagonal_layer(c, spec, dt / 2.0);
        }
    }
    return c;
}

Gate pauli_gate(const LocalPauli& op) {
    switch (op.axis) {
    case PauliAxis::X:
        return Gate::x(op.site);
    case PauliAxis::Y:
        return Gate::y(op.site);
    case PauliAxis::Z:
        return Gate::z(op.site);
    }
    throw std::invalid_argument("unknown Pauli axis");
}

} // namespace qotoc
