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

#include "qotoc/otoc.hpp"

#include <stdexcept>

#include "qotoc/oracle.hpp"
#include "qotoc/rng.hpp"

namespace qotoc {

namespace {

void append_all(Circuit& dst, const Circuit& src) {
    dst.gates.insert(dst.gates.end(), src.gates.begin(), src.gates.end());
}

OtocPoint make_point(double tau, const EstimateResult& est,
                     const std::string& input_desc) {
    OtocPoint p;
    p.tau = tau;
    p.re = est.mean_re;
    p.im = est.mean_im;
    p.c_value = 1.0 - est.mean_re;
    p.stderr_re = est.stderr_re;
    p.stderr_im = est.stderr_im;
    p.shots = est.shots;
    p.seed = est.seed;
    p.input_desc = input_desc;
    return p;
}

OtocPoint make_exact_point(double tau, cdouble value,
                           const std::string& input_desc) {
    OtocPoint p;
    p.tau = tau;
    p.re = value.real();
    p.im = value.imag();
    p.c_value = 1.0 - value.real();
    p.input_desc = input_desc;
    return p;
}

} // namespace

void validate(const OtocSpec& spec) {
    validate(spec.model);
    validate(spec.evolution);
    if (spec.w.site < 0 || spec.w.site >= spec.model.n_sites ||
        spec.v.site < 0 || spec.v.site >= spec.model.n_sites) {
        throw std::out_of_range("W/V sites must lie on the chain");
    }
}

const char* to_string(OtocGateOrder order) {
    return order == OtocGateOrder::Corrected ? "corrected" : "figure-literal";
}

Circuit assemble_otoc_circuit(const Circuit& evolution, const Gate& w,
                              const Gate& v, OtocGateOrder order) {
    const Circuit evolution_dag = evolution.inverse();
    Circuit c(evolution.n_qubits);
    c.append(v);
    append_all(c, evolution);
    c.append(w);
    append_all(c, evolution_dag);
    c.append(v.adjoint());
    if (order == OtocGateOrder::Corrected) {
        append_all(c, evolution);
        c.append(w.adjoint());
        append_all(c, evolution_dag);
    } else {
        append_all(c, evolution_dag);
        c.append(w);
        append_all(c, evolution);
    }
    return c;
}

Circuit build_otoc_system_circuit(const OtocSpec& spec, OtocGateOrder order) {
    validate(spec);
    const Circuit evolution =
        build_evolution_circuit(spec.model, spec.evolution);
    return assemble_otoc_circuit(evolution, pauli_gate(spec.w),
                                 pauli_gate(spec.v), order);
}

cdouble otoc_expectation(const OtocSpec& spec, OtocGateOrder order) {
    const Circuit system = build_otoc_system_circuit(spec, order);
    return probe_expectations_exact(system, spec.input);
}

OtocPoint estimate_otoc(const OtocSpec& spec, const ProbeSpec& probe,
                        std::uint64_t shots, std::uint64_t seed,
                        OtocGateOrder order) {
    const Circuit system = build_otoc_system_circuit(spec, order);
    const EstimateResult est =
        estimate_trace(system, spec.input, probe, shots, seed);
    return make_point(spec.evolution.tau, est, spec.input.describe());
}

LightconeResult lightcone_sweep(const IsingChainSpec& model,
                                const EvolutionSpec& evolution_template,
                                const std::vector<double>& taus,
                                const LocalPauli& w, PauliAxis v_axis,
                                const SystemInput& input, std::uint64_t shots,
                                std::uint64_t seed, const ProbeSpec& probe,
                                double threshold) {
    validate(model);
    validate(evolution_template);
    if (taus.empty()) {
        throw std::invalid_argument("tau grid must not be empty");
    }
    for (std::size_t i = 1; i < taus.size(); ++i) {
        if (!(taus[i] > taus[i - 1])) {
            throw std::invalid_argument("tau grid must be ascending");
        }
    }
    if (w.site < 0 || w.site >= model.n_sites) {
        throw std::out_of_range("W site must lie on the chain");
    }
    if (w.site + 1 >= model.n_sites) {
        throw std::invalid_argument(
            "light-cone sweep needs at least one site right of W");
    }

    // For exact evolution, diagonalize H once and rebuild U(tau) per grid
    // point; the evolution circuit is shared by every V placement.
    const bool exact = evolution_template.method == EvolutionMethod::Exact;
    oracle::HamiltonianEigen eigen;
    if (exact) {
        eigen = oracle::eigendecompose(build_ising_hamiltonian(model));
    }

    const Gate w_gate = pauli_gate(w);
    const int n_distances = model.n_sites - 1 - w.site;

    LightconeResult result;
    result.threshold = threshold;
    result.points.reserve(static_cast<std::size_t>(n_distances) * taus.size());

    // points grouped by distance, tau ascending within each group
    std::vector<std::vector<OtocPoint>> by_distance(n_distances);
    for (std::size_t ti = 0; ti < taus.size(); ++ti) {
        EvolutionSpec evo = evolution_template;
        evo.tau = taus[ti];
        Circuit evolution(model.n_sites);
        if (exact) {
            const Eigen::MatrixXcd u =
                oracle::evolution_from_eigen(eigen, evo.tau, evo.sign);
            std::vector<cdouble> cm(u.data(), u.data() + u.size());
            evolution.append(
                Gate::dense_low_qubits(model.n_sites, std::move(cm)));
        } else {
            evolution = build_evolution_circuit(model, evo);
        }

        for (int d = 1; d <= n_distances; ++d) {
            const LocalPauli v{w.site + d, v_axis};
            const Circuit system = assemble_otoc_circuit(
                evolution, w_gate, pauli_gate(v), OtocGateOrder::Corrected);
            OtocPoint point;
            if (shots == 0) {
                point = make_exact_point(
                    evo.tau, probe_expectations_exact(system, input),
                    input.describe());
            } else {
                const std::uint64_t point_seed =
                    rng::draw(seed, rng::kCircuitGen,
                              ti * static_cast<std::uint64_t>(n_distances) + d);
                point = make_point(
                    evo.tau,
                    estimate_trace(system, input, probe, shots, point_seed),
                    input.describe());
            }
            by_distance[d - 1].push_back(point);
        }
    }

    for (int d = 1; d <= n_distances; ++d) {
        ArrivalTime arrival;
        arrival.distance = d;
        for (const OtocPoint& p : by_distance[d - 1]) {
            result.points.push_back({d, w.site + d, p});
            if (!arrival.arrived && p.c_value > threshold) {
                arrival.arrived = true;
                arrival.tau = p.tau;
            }
        }
        result.arrival_times.push_back(arrival);
    }
    return result;
}

} // namespace qotoc
