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

#include <vector>

#include <Eigen/Dense>

#include "qotoc/otoc.hpp"

// Brute-force dense-matrix ground truth for everything the circuits
// estimate. Evolution operators always use the exact matrix exponential
// here, whatever the spec's evolution method says; this module is the
// reference the gate decompositions are checked against.
namespace qotoc::oracle {

using DenseMatrix = Eigen::MatrixXcd;

constexpr int kOracleCap = 12;
constexpr int kEigenphaseCap = 10;
constexpr int kNestedCommutatorCap = 8;

/// max |(U+U - I)_{ij}|
double unitarity_residual(const DenseMatrix& u);
/// max |(M - M+)_{ij}|
double hermiticity_residual(const DenseMatrix& m);
/// Largest singular value.
double operator_norm(const DenseMatrix& m);

DenseMatrix pauli_matrix(PauliAxis axis);
/// sigma_axis acting on one site of an n-qubit register (site 0 = LSB).
DenseMatrix pauli_site_matrix(PauliAxis axis, int site, int n_qubits);

/// Independent Hamiltonian assembly from Kronecker products, used to
/// cross-check the bit-structure builder in the models module.
DenseMatrix ising_hamiltonian_kron(const IsingChainSpec& spec);

struct HamiltonianEigen {
    Eigen::VectorXd eigenvalues;
    DenseMatrix eigenvectors;
};

HamiltonianEigen eigendecompose(const DenseMatrix& hermitian);
/// Q exp(-+ i Lambda tau) Q+ from a cached decomposition.
DenseMatrix evolution_from_eigen(const HamiltonianEigen& eigen, double tau,
                                 SignConvention sign);
/// exp(-+ i H tau) for the chain Hamiltonian; unitary to roundoff.
DenseMatrix exact_unitary(const IsingChainSpec& spec, double tau,
                          SignConvention sign);

/// Definitional full-register matrix of one gate: entries written from the
/// control/target bit structure, independent of the strided kernels.
DenseMatrix gate_matrix(const Gate& gate, int n_qubits);
/// Product of gate matrices in application order.
DenseMatrix circuit_matrix(const Circuit& circuit);

/// Heisenberg conjugation U+ W U.
DenseMatrix heisenberg_operator(const DenseMatrix& w, const DenseMatrix& u);

/// (1/2) <[W(tau), V]+ [W(tau), V]> under the spec's input.
double c_wv_commutator(const OtocSpec& spec);

/// Dense W(tau)+ V+ W(tau) V with exact evolution.
DenseMatrix otoc_operator(const OtocSpec& spec);

/// 2-norms of the nested commutators ad_H^k(W), k = 0..k_max.
std::vector<double> nested_commutator_norms(const IsingChainSpec& model,
                                            const LocalPauli& w, int k_max);

/// Eigenphase spectrum of the OTOC operator, ascending in (-pi, pi].
std::vector<double> otoc_eigenphases(const OtocSpec& spec);

/// <op> under a system input: pure/basis expectation or normalized trace
/// for the maximally mixed kinds.
cdouble expectation(const DenseMatrix& op, const SystemInput& input);

} // namespace qotoc::oracle
