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

#include "qotoc/dqc1.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "qotoc/errors.hpp"
#include "qotoc/parallel.hpp"
#include "qotoc/rng.hpp"

namespace qotoc {

namespace {

constexpr std::size_t kBasisChunk = 32;
constexpr std::size_t kShotChunk = 1 << 14;

// <U> read off the probe of one scattering run on basis input |index>.
cdouble probe_run_basis(const Circuit& scattering, int n_system,
                        std::uint64_t index) {
    StateVector s = StateVector::basis_state(n_system + 1, index);
    s = apply_circuit(std::move(s), scattering);
    const double re = expectation_pauli(s, PauliAxis::Z, n_system);
    const double im = -expectation_pauli(s, PauliAxis::Y, n_system);
    return {re, im};
}

cdouble probe_run_pure(const Circuit& scattering, const StateVector& psi0) {
    const int n = psi0.n_qubits;
    StateVector s(n + 1);
    std::copy(psi0.amplitudes.begin(), psi0.amplitudes.end(),
              s.amplitudes.begin());
    s = apply_circuit(std::move(s), scattering);
    const double re = expectation_pauli(s, PauliAxis::Z, n);
    const double im = -expectation_pauli(s, PauliAxis::Y, n);
    return {re, im};
}

// Average of per-basis probe expectations over an explicit member list,
// de-duplicating repeated members. Deterministic chunked reduction.
cdouble average_over_members(const Circuit& scattering, int n_system,
                             const std::vector<std::uint64_t>& members) {
    std::unordered_map<std::uint64_t, cdouble> cache;
    cache.reserve(members.size());
    for (std::uint64_t m : members) {
        cache.emplace(m, cdouble{0.0, 0.0});
    }
    std::vector<std::uint64_t> distinct;
    distinct.reserve(cache.size());
    for (const auto& [m, v] : cache) {
        distinct.push_back(m);
    }
    std::sort(distinct.begin(), distinct.end());

    std::vector<cdouble> results(distinct.size());
    parallel_for_chunks(distinct.size(), kBasisChunk,
                        [&](std::size_t, std::size_t b, std::size_t e) {
                            for (std::size_t i = b; i < e; ++i) {
                                results[i] = probe_run_basis(
                                    scattering, n_system, distinct[i]);
                            }
                        });
    for (std::size_t i = 0; i < distinct.size(); ++i) {
        cache[distinct[i]] = results[i];
    }
    cdouble sum{0.0, 0.0};
    for (std::uint64_t m : members) {
        sum += cache[m];
    }
    return sum / static_cast<double>(members.size());
}

cdouble full_basis_average(const Circuit& scattering, int n_system) {
    const std::size_t dim = std::size_t{1} << n_system;
    const std::size_t n_chunks = (dim + kBasisChunk - 1) / kBasisChunk;
    std::vector<cdouble> partial(n_chunks, cdouble{0.0, 0.0});
    parallel_for_chunks(dim, kBasisChunk,
                        [&](std::size_t c, std::size_t b, std::size_t e) {
                            cdouble s{0.0, 0.0};
                            for (std::size_t i = b; i < e; ++i) {
                                s += probe_run_basis(scattering, n_system, i);
                            }
                            partial[c] = s;
                        });
    cdouble sum{0.0, 0.0};
    for (const cdouble& p : partial) {
        sum += p;
    }
    return sum / static_cast<double>(dim);
}

struct ShotTally {
    std::uint64_t favorable = 0; // outcome +1 count
    std::uint64_t total = 0;
};

// Bernoulli shots against per-member success probabilities. Counting is
// integer, so any thread partitioning gives the same tally.
ShotTally run_shots(const std::vector<double>& p_success,
                    std::uint64_t shots, std::uint64_t seed,
                    std::uint64_t outcome_stream,
                    std::uint64_t member_stream) {
    const std::size_t n_chunks = (shots + kShotChunk - 1) / kShotChunk;
    std::vector<std::uint64_t> partial(n_chunks, 0);
    const bool multi = p_success.size() > 1;
    parallel_for_chunks(
        shots, kShotChunk, [&](std::size_t c, std::size_t b, std::size_t e) {
            std::uint64_t count = 0;
            for (std::size_t i = b; i < e; ++i) {
                const std::size_t m =
                    multi ? rng::uniform_below(seed, member_stream, i,
                                               p_success.size())
                          : 0;
                if (rng::uniform(seed, outcome_stream, i) < p_success[m]) {
                    ++count;
                }
            }
            partial[c] = count;
        });
    ShotTally tally;
    tally.total = shots;
    for (std::uint64_t p : partial) {
        tally.favorable += p;
    }
    return tally;
}

// mean and stderr of the +-1 outcome variable implied by a tally
std::pair<double, double> tally_stats(const ShotTally& t) {
    const double total = static_cast<double>(t.total);
    const double xbar =
        (2.0 * static_cast<double>(t.favorable) - total) / total;
    double stderr_mean = 0.0;
    if (t.total >= 2) {
        const double var = total * (1.0 - xbar * xbar) / (total - 1.0);
        stderr_mean = std::sqrt(std::max(0.0, var) / total);
    }
    return {xbar, stderr_mean};
}

void validate_input(const Circuit& system, const SystemInput& input) {
    const std::uint64_t dim = std::uint64_t{1} << system.n_qubits;
    switch (input.kind) {
    case SystemInput::Kind::Pure:
        if (input.pure_state.n_qubits != system.n_qubits) {
            throw std::invalid_argument(
                "pure input qubit count does not match the circuit");
        }
        break;
    case SystemInput::Kind::Basis:
        if (input.basis_index >= dim) {
            throw std::out_of_range("basis index out of range");
        }
        break;
    case SystemInput::Kind::MaximallyMixed:
        if (input.strategy == SystemInput::MixedStrategy::FullAverage &&
            system.n_qubits > kFullAverageCap) {
            throw CapExceededError(
                "full basis average capped at n <= " +
                std::to_string(kFullAverageCap) +
                "; use the sampled strategy beyond that");
        }
        break;
    }
}

} // namespace

const char* to_string(ReadoutBasis r) {
    switch (r) {
    case ReadoutBasis::Z:
        return "Z";
    case ReadoutBasis::Y:
        return "Y";
    case ReadoutBasis::Both:
        return "both";
    }
    return "?";
}

SystemInput SystemInput::pure(StateVector psi) {
    SystemInput in;
    in.kind = Kind::Pure;
    in.pure_state = std::move(psi);
    return in;
}

SystemInput SystemInput::basis(std::uint64_t index) {
    SystemInput in;
    in.kind = Kind::Basis;
    in.basis_index = index;
    return in;
}

SystemInput SystemInput::maximally_mixed() {
    SystemInput in;
    in.kind = Kind::MaximallyMixed;
    in.strategy = MixedStrategy::FullAverage;
    return in;
}

SystemInput SystemInput::maximally_mixed_sampled(std::uint64_t count,
                                                 std::uint64_t seed) {
    SystemInput in;
    in.kind = Kind::MaximallyMixed;
    in.strategy = MixedStrategy::Sampled;
    in.sample_count = count;
    in.sample_seed = seed;
    return in;
}

std::string SystemInput::describe() const {
    switch (kind) {
    case Kind::Pure:
        return "pure";
    case Kind::Basis:
        return "basis:" + std::to_string(basis_index);
    case Kind::MaximallyMixed:
        if (strategy == MixedStrategy::FullAverage) {
            return "mixed";
        }
        return "mixed-sampled:" + std::to_string(sample_count) + ":" +
               std::to_string(sample_seed);
    }
    return "?";
}

Circuit build_scattering_circuit(const Circuit& system_circuit) {
    const int probe = system_circuit.n_qubits;
    Circuit c = controlled(system_circuit, probe);
    c.gates.insert(c.gates.begin(), Gate::h(probe));
    c.append(Gate::h(probe));
    return c;
}

cdouble probe_expectations_exact(const Circuit& system_circuit,
                                 const SystemInput& input) {
    validate_input(system_circuit, input);
    const Circuit scattering = build_scattering_circuit(system_circuit);
    const int n = system_circuit.n_qubits;
    switch (input.kind) {
    case SystemInput::Kind::Pure:
        return probe_run_pure(scattering, input.pure_state);
    case SystemInput::Kind::Basis:
        return probe_run_basis(scattering, n, input.basis_index);
    case SystemInput::Kind::MaximallyMixed:
        if (input.strategy == SystemInput::MixedStrategy::FullAverage) {
            return full_basis_average(scattering, n);
        }
        return average_over_members(
            scattering, n,
            sampled_basis_members(n, input.sample_count, input.sample_seed));
    }
    throw std::logic_error("unreachable input kind");
}

EstimateResult estimate_trace(const Circuit& system_circuit,
                              const SystemInput& input,
                              const ProbeSpec& probe, std::uint64_t shots,
                              std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be >= 1");
    }
    if (!(probe.alpha > 0.0) || probe.alpha > 1.0) {
        throw std::invalid_argument("probe purity alpha must be in (0, 1]");
    }
    validate_input(system_circuit, input);
    const Circuit scattering = build_scattering_circuit(system_circuit);
    const int n = system_circuit.n_qubits;

    // Exact <U> per ensemble member; the Bernoulli law of each shot comes
    // from the member it lands on.
    std::vector<cdouble> members;
    if (input.kind == SystemInput::Kind::MaximallyMixed &&
        input.strategy == SystemInput::MixedStrategy::Sampled) {
        const auto indices =
            sampled_basis_members(n, input.sample_count, input.sample_seed);
        std::unordered_map<std::uint64_t, cdouble> cache;
        for (std::uint64_t idx : indices) {
            if (!cache.count(idx)) {
                cache.emplace(idx, probe_run_basis(scattering, n, idx));
            }
        }
        members.reserve(indices.size());
        for (std::uint64_t idx : indices) {
            members.push_back(cache.at(idx));
        }
    } else {
        members.push_back(probe_expectations_exact(system_circuit, input));
    }

    EstimateResult result;
    result.shots = shots;
    result.seed = seed;
    result.convention_note =
        "qubit0=lsb; Re<U>=<sigma_z>; Im<U>=-<sigma_y>; P(0)=(1+alpha*Re<U>)/2; "
        "alpha=" +
        std::to_string(probe.alpha);

    if (probe.readout == ReadoutBasis::Z || probe.readout == ReadoutBasis::Both) {
        std::vector<double> p0(members.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
            p0[i] = 0.5 * (1.0 + probe.alpha * members[i].real());
        }
        const ShotTally tally = run_shots(p0, shots, seed, rng::kShotZ,
                                          rng::kMemberPickZ);
        const auto [xbar, se] = tally_stats(tally);
        result.mean_re = xbar / probe.alpha;
        result.stderr_re = se / probe.alpha;
    }
    if (probe.readout == ReadoutBasis::Y || probe.readout == ReadoutBasis::Both) {
        // <sigma_y> = -alpha Im<U>; the + outcome has P = (1 + <sigma_y>)/2.
        std::vector<double> p_plus(members.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
            p_plus[i] = 0.5 * (1.0 - probe.alpha * members[i].imag());
        }
        const ShotTally tally = run_shots(p_plus, shots, seed, rng::kShotY,
                                          rng::kMemberPickY);
        const auto [ybar, se] = tally_stats(tally);
        result.mean_im = -ybar / probe.alpha;
        result.stderr_im = se / probe.alpha;
    }
    return result;
}

std::uint64_t required_shots(double epsilon, double p_e, double alpha) {
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("epsilon must be > 0");
    }
    if (!(p_e > 0.0 && p_e < 1.0)) {
        throw std::invalid_argument("p_e must be in (0, 1)");
    }
    if (!(alpha > 0.0) || alpha > 1.0) {
        throw std::invalid_argument("alpha must be in (0, 1]");
    }
    const double raw =
        std::log(1.0 / p_e) / (alpha * alpha * epsilon * epsilon);
    // Snap values that are an integer up to roundoff before taking ceil.
    const double rounded = std::round(raw);
    if (std::abs(raw - rounded) <= 1e-9 * std::max(1.0, std::abs(raw))) {
        return static_cast<std::uint64_t>(rounded);
    }
    return static_cast<std::uint64_t>(std::ceil(raw));
}

} // namespace qotoc
