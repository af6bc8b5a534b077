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

#include <cstdint>
#include <string>
#include <vector>

#include "qotoc/circuit.hpp"

namespace qotoc {

/// Dense basis-state averaging of a maximally mixed input is capped here.
constexpr int kFullAverageCap = 14;

enum class ReadoutBasis { Z, Y, Both };

const char* to_string(ReadoutBasis r);

/// Probe qubit prepared in alpha |0><0| + (1-alpha)/2 I. Impurity is
/// simulated analytically: it scales the readout signal, P(0) =
/// (1 + alpha Re<U>)/2, and the estimator divides the signal back out.
struct ProbeSpec {
    double alpha = 1.0;
    ReadoutBasis readout = ReadoutBasis::Both;
};

/// System register input: a pure state, a computational basis state, or the
/// maximally mixed state realized by basis-state averaging (never by
/// density-matrix propagation).
struct SystemInput {
    enum class Kind { Pure, Basis, MaximallyMixed };
    enum class MixedStrategy { FullAverage, Sampled };

    Kind kind = Kind::Basis;
    StateVector pure_state;        // Kind::Pure
    std::uint64_t basis_index = 0; // Kind::Basis
    MixedStrategy strategy = MixedStrategy::FullAverage;
    std::uint64_t sample_count = 0; // Sampled strategy
    std::uint64_t sample_seed = 0;

    static SystemInput pure(StateVector psi);
    static SystemInput basis(std::uint64_t index);
    static SystemInput maximally_mixed();
    static SystemInput maximally_mixed_sampled(std::uint64_t count,
                                               std::uint64_t seed);

    std::string describe() const;
};

/// Sampled estimate of Re/Im<U> with shot statistics.
struct EstimateResult {
    double mean_re = 0.0;
    double mean_im = 0.0;
    double stderr_re = 0.0;
    double stderr_im = 0.0;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::string convention_note;
};

/// The scattering circuit: H(probe), controlled(system, probe), H(probe),
/// with the probe as qubit n on top of the n system qubits.
Circuit build_scattering_circuit(const Circuit& system_circuit);

/// Exact probe readout of the scattering circuit: returns <U> as
/// Re + i Im, where Re = <sigma_z(probe)> and Im = -<sigma_y(probe)>
/// (the sign is pinned by dense-matrix checks; see convention notes).
/// Pure/basis inputs give <psi0|U|psi0>; maximally mixed gives tr(U)/2^n.
cdouble probe_expectations_exact(const Circuit& system_circuit,
                                 const SystemInput& input);

/// Shot-sampled trace estimation. Outcomes are Bernoulli draws from the
/// exactly computed P(0) law (impurity alpha included), generated by a
/// counter-based RNG keyed on (seed, shot index) so results are identical
/// at any thread count. Readout bases not selected report zero fields.
EstimateResult estimate_trace(const Circuit& system_circuit,
                              const SystemInput& input,
                              const ProbeSpec& probe, std::uint64_t shots,
                              std::uint64_t seed);

/// ceil(ln(1/p_e) / (alpha^2 epsilon^2)): shots needed so the estimate is
/// within epsilon of the true value except with probability p_e.
std::uint64_t required_shots(double epsilon, double p_e, double alpha);

/// The basis-state ensemble (uniform, with repetition) that a sampled mixed
/// input with this (count, seed) resolves to.
std::vector<std::uint64_t> sampled_basis_indices(int n_qubits,
                                                 std::uint64_t count,
                                                 std::uint64_t seed);

} // namespace qotoc
