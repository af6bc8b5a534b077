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

#include "qotoc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "qotoc/errors.hpp"

namespace qotoc::oracle {

namespace {

const cdouble kI{0.0, 1.0};

void require_cap(int n, int cap, const char* what) {
    if (n > cap) {
        throw CapExceededError(std::string(what) + " capped at n <= " +
                               std::to_string(cap));
    }
}

// Gate matrices are written elementwise from the definition: rows/columns
// whose control bits are not all set are identity; otherwise the entry is
// the local unitary element selected by the target bits.
DenseMatrix controlled_entrywise(const Gate& g, int n_qubits,
                                 const std::vector<cdouble>& local,
                                 const std::vector<int>& targets) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t local_dim = std::size_t{1} << targets.size();
    std::size_t cmask = 0;
    for (int c : g.controls) {
        cmask |= std::size_t{1} << c;
    }
    std::size_t tmask = 0;
    for (int t : targets) {
        tmask |= std::size_t{1} << t;
    }
    DenseMatrix m = DenseMatrix::Zero(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        if ((col & cmask) != cmask) {
            m(col, col) = 1.0;
            continue;
        }
        std::size_t local_col = 0;
        for (std::size_t k = 0; k < targets.size(); ++k) {
            if (col & (std::size_t{1} << targets[k])) {
                local_col |= std::size_t{1} << k;
            }
        }
        for (std::size_t local_row = 0; local_row < local_dim; ++local_row) {
            std::size_t row = col & ~tmask;
            for (std::size_t k = 0; k < targets.size(); ++k) {
                if (local_row & (std::size_t{1} << k)) {
                    row |= std::size_t{1} << targets[k];
                }
            }
            m(row, col) = local[local_col * local_dim + local_row];
        }
    }
    return m;
}

} // namespace

double unitarity_residual(const DenseMatrix& u) {
    const DenseMatrix residual =
        u.adjoint() * u - DenseMatrix::Identity(u.rows(), u.cols());
    return residual.cwiseAbs().maxCoeff();
}

double hermiticity_residual(const DenseMatrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double operator_norm(const DenseMatrix& m) {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(m.adjoint() * m,
                                                      Eigen::EigenvaluesOnly);
    const double largest = solver.eigenvalues().maxCoeff();
    return std::sqrt(std::max(0.0, largest));
}

DenseMatrix pauli_matrix(PauliAxis axis) {
    DenseMatrix m(2, 2);
    switch (axis) {
    case PauliAxis::X:
        m << 0, 1, 1, 0;
        break;
    case PauliAxis::Y:
        m << cdouble{0, 0}, -kI, kI, cdouble{0, 0};
        break;
    case PauliAxis::Z:
        m << 1, 0, 0, -1;
        break;
    }
    return m;
}

DenseMatrix pauli_site_matrix(PauliAxis axis, int site, int n_qubits) {
    if (site < 0 || site >= n_qubits) {
        throw std::out_of_range("site out of range");
    }
    DenseMatrix m = DenseMatrix::Identity(1, 1);
    // qubit 0 is the LSB, so it sits rightmost in the Kronecker chain
    for (int q = 0; q < n_qubits; ++q) {
        const DenseMatrix factor = q == site
                                       ? pauli_matrix(axis)
                                       : DenseMatrix::Identity(2, 2);
        DenseMatrix next(factor.rows() * m.rows(), factor.cols() * m.cols());
        for (int r = 0; r < factor.rows(); ++r) {
            for (int c = 0; c < factor.cols(); ++c) {
                next.block(r * m.rows(), c * m.cols(), m.rows(), m.cols()) =
                    factor(r, c) * m;
            }
        }
        m = std::move(next);
    }
    return m;
}

DenseMatrix ising_hamiltonian_kron(const IsingChainSpec& spec) {
    validate(spec);
    require_cap(spec.n_sites, kOracleCap, "dense Hamiltonian");
    const std::size_t dim = std::size_t{1} << spec.n_sites;
    DenseMatrix h = DenseMatrix::Zero(dim, dim);
    for (const auto& [i, j] : ising_bonds(spec)) {
        h += spec.coupling * pauli_site_matrix(PauliAxis::Z, i, spec.n_sites) *
             pauli_site_matrix(PauliAxis::Z, j, spec.n_sites);
    }
    for (int s = 0; s < spec.n_sites; ++s) {
        if (spec.field_x != 0.0) {
            h += spec.field_x * pauli_site_matrix(PauliAxis::X, s, spec.n_sites);
        }
        if (spec.field_z != 0.0) {
            h += spec.field_z * pauli_site_matrix(PauliAxis::Z, s, spec.n_sites);
        }
    }
    return h;
}

HamiltonianEigen eigendecompose(const DenseMatrix& hermitian) {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(hermitian);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("Hermitian eigendecomposition failed");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

DenseMatrix evolution_from_eigen(const HamiltonianEigen& eigen, double tau,
                                 SignConvention sign) {
    const double direction = sign == SignConvention::MinusIHTau ? -1.0 : 1.0;
    Eigen::VectorXcd phases(eigen.eigenvalues.size());
    for (Eigen::Index i = 0; i < eigen.eigenvalues.size(); ++i) {
        phases(i) = std::exp(kI * (direction * eigen.eigenvalues(i) * tau));
    }
    return eigen.eigenvectors * phases.asDiagonal() *
           eigen.eigenvectors.adjoint();
}

DenseMatrix exact_unitary(const IsingChainSpec& spec, double tau,
                          SignConvention sign) {
    require_cap(spec.n_sites, kOracleCap, "exact evolution");
    return evolution_from_eigen(eigendecompose(build_ising_hamiltonian(spec)),
                                tau, sign);
}

DenseMatrix gate_matrix(const Gate& gate, int n_qubits) {
    if (gate.span_qubits() > n_qubits) {
        throw std::out_of_range("gate references qubits beyond the register");
    }
    std::vector<cdouble> local;
    std::vector<int> targets = gate.targets;
    switch (gate.kind) {
    case GateKind::ZZ: {
        const auto f = gate.zz_factors();
        local.assign(16, cdouble{0.0, 0.0});
        const cdouble diag[4] = {f[0], f[1], f[1], f[0]};
        for (int i = 0; i < 4; ++i) {
            local[i * 4 + i] = diag[i];
        }
        break;
    }
    case GateKind::Dense2Q:
    case GateKind::DenseN:
        local = gate.matrix;
        break;
    default: {
        const auto u2 = gate.unitary2();
        local.assign(u2.begin(), u2.end());
        break;
    }
    }
    return controlled_entrywise(gate, n_qubits, local, targets);
}

DenseMatrix circuit_matrix(const Circuit& circuit) {
    const std::size_t dim = std::size_t{1} << circuit.n_qubits;
    DenseMatrix m = DenseMatrix::Identity(dim, dim);
    for (const Gate& g : circuit.gates) {
        m = gate_matrix(g, circuit.n_qubits) * m;
    }
    return m;
}

DenseMatrix heisenberg_operator(const DenseMatrix& w, const DenseMatrix& u) {
    if (w.rows() != u.rows() || w.cols() != u.cols()) {
        throw std::invalid_argument("operator dimensions differ");
    }
    return u.adjoint() * w * u;
}

DenseMatrix otoc_operator(const OtocSpec& spec) {
    validate(spec);
    require_cap(spec.model.n_sites, kOracleCap, "dense OTOC operator");
    const DenseMatrix u =
        exact_unitary(spec.model, spec.evolution.tau, spec.evolution.sign);
    const DenseMatrix w =
        pauli_site_matrix(spec.w.axis, spec.w.site, spec.model.n_sites);
    const DenseMatrix v =
        pauli_site_matrix(spec.v.axis, spec.v.site, spec.model.n_sites);
    const DenseMatrix w_tau = heisenberg_operator(w, u);
    return w_tau.adjoint() * v.adjoint() * w_tau * v;
}

double c_wv_commutator(const OtocSpec& spec) {
    validate(spec);
    require_cap(spec.model.n_sites, kOracleCap, "commutator OTOC");
    const DenseMatrix u =
        exact_unitary(spec.model, spec.evolution.tau, spec.evolution.sign);
    const DenseMatrix w =
        pauli_site_matrix(spec.w.axis, spec.w.site, spec.model.n_sites);
    const DenseMatrix v =
        pauli_site_matrix(spec.v.axis, spec.v.site, spec.model.n_sites);
    const DenseMatrix w_tau = heisenberg_operator(w, u);
    const DenseMatrix k = w_tau * v - v * w_tau;
    const cdouble value = expectation(k.adjoint() * k, spec.input);
    return 0.5 * value.real();
}

std::vector<double> nested_commutator_norms(const IsingChainSpec& model,
                                            const LocalPauli& w, int k_max) {
    validate(model);
    require_cap(model.n_sites, kEigenphaseCap, "nested commutators");
    if (k_max < 0 || k_max > kNestedCommutatorCap) {
        throw CapExceededError("nested commutator order capped at k <= " +
                               std::to_string(kNestedCommutatorCap));
    }
    const DenseMatrix h = build_ising_hamiltonian(model);
    DenseMatrix a = pauli_site_matrix(w.axis, w.site, model.n_sites);
    std::vector<double> norms;
    norms.reserve(k_max + 1);
    norms.push_back(operator_norm(a));
    for (int k = 1; k <= k_max; ++k) {
        a = h * a - a * h;
        norms.push_back(operator_norm(a));
    }
    return norms;
}

std::vector<double> otoc_eigenphases(const OtocSpec& spec) {
    require_cap(spec.model.n_sites, kEigenphaseCap, "OTOC eigenphases");
    const DenseMatrix u = otoc_operator(spec);
    Eigen::ComplexEigenSolver<DenseMatrix> solver(u, false);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigenphase computation failed");
    }
    std::vector<double> phases;
    phases.reserve(u.rows());
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        double phi = std::arg(solver.eigenvalues()(i));
        if (phi <= -M_PI) {
            phi += 2.0 * M_PI; // fold -pi (from -0 imaginary parts) to +pi
        }
        phases.push_back(phi);
    }
    std::sort(phases.begin(), phases.end());
    return phases;
}

cdouble expectation(const DenseMatrix& op, const SystemInput& input) {
    switch (input.kind) {
    case SystemInput::Kind::Pure: {
        const auto& amps = input.pure_state.amplitudes;
        if (static_cast<Eigen::Index>(amps.size()) != op.rows()) {
            throw std::invalid_argument("state/operator dimensions differ");
        }
        const Eigen::Map<const Eigen::VectorXcd> psi(amps.data(), amps.size());
        return psi.dot(op * psi);
    }
    case SystemInput::Kind::Basis: {
        if (input.basis_index >= static_cast<std::uint64_t>(op.rows())) {
            throw std::out_of_range("basis index out of range");
        }
        return op(input.basis_index, input.basis_index);
    }
    case SystemInput::Kind::MaximallyMixed:
        return op.trace() / static_cast<double>(op.rows());
    }
    throw std::logic_error("unreachable input kind");
}

} // namespace qotoc::oracle
