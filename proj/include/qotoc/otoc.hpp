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
#include <limits>
#include <string>
#include <vector>

#include "qotoc/dqc1.hpp"
#include "qotoc/ising.hpp"

namespace qotoc {

/// One OTOC measurement configuration: the operator
///   U_otoc = W(tau)+ V+ W(tau) V,  W(tau) = U(tau)+ W U(tau),
/// with local Pauli W, V on the given chain and evolution.
struct OtocSpec {
    IsingChainSpec model;
    EvolutionSpec evolution;
    LocalPauli w;
    LocalPauli v;
    SystemInput input = SystemInput::maximally_mixed();
};

void validate(const OtocSpec& spec);

/// The commutator function C = 1 - Re<U_otoc> at one tau.
struct OtocPoint {
    double tau = 0.0;
    double re = 0.0;
    double im = 0.0;
    double c_value = 0.0; // 1 - re, always
    double stderr_re = 0.0;
    double stderr_im = 0.0;
    std::uint64_t shots = 0; // 0 = exact evaluation
    std::uint64_t seed = 0;
    std::string input_desc;
};

/// The printed figure applies the final evolution sandwich in the opposite
/// direction from the text's operator definition; Corrected follows the
/// text, FigureLiteral reproduces the figure for comparison.
enum class OtocGateOrder { Corrected, FigureLiteral };

const char* to_string(OtocGateOrder order);

/// System circuit realizing U_otoc in time order
///   V, U, W, U+, V+, U, W+, U+       (Corrected)
///   V, U, W, U+, V+, U+, W, U        (FigureLiteral)
/// where U is the evolution circuit. For Hermitian Pauli W the adjoint box
/// equals W itself.
Circuit build_otoc_system_circuit(const OtocSpec& spec,
                                  OtocGateOrder order = OtocGateOrder::Corrected);

/// As above but assembled from caller-provided pieces, so sweeps can reuse
/// one evolution circuit across many operator placements.
Circuit assemble_otoc_circuit(const Circuit& evolution, const Gate& w,
                              const Gate& v, OtocGateOrder order);

/// Exact <U_otoc> for the spec's input via the probe readout of the
/// scattering circuit.
cdouble otoc_expectation(const OtocSpec& spec,
                         OtocGateOrder order = OtocGateOrder::Corrected);

/// Shot-sampled OTOC point; c_value = 1 - mean_re.
OtocPoint estimate_otoc(const OtocSpec& spec, const ProbeSpec& probe,
                        std::uint64_t shots, std::uint64_t seed,
                        OtocGateOrder order = OtocGateOrder::Corrected);

struct LightconePoint {
    int distance = 0; // v site - w site
    int v_site = 0;
    OtocPoint point;
};

struct ArrivalTime {
    int distance = 0;
    double tau = std::numeric_limits<double>::quiet_NaN(); // NaN = no arrival
    bool arrived = false;
};

struct LightconeResult {
    std::vector<LightconePoint> points; // ordered by (distance, tau)
    std::vector<ArrivalTime> arrival_times;
    double threshold = 0.0;
};

/// C(d, tau) over all sites to the right of w (d = v_site - w.site >= 1)
/// and an ascending tau grid; arrival_time(d) is the smallest grid tau with
/// C > threshold. shots = 0 evaluates exactly; otherwise each point is
/// sampled with the given probe and a seed derived from (seed, d, tau index).
LightconeResult lightcone_sweep(const IsingChainSpec& model,
                                const EvolutionSpec& evolution_template,
                                const std::vector<double>& taus,
                                const LocalPauli& w, PauliAxis v_axis,
                                const SystemInput& input, std::uint64_t shots,
                                std::uint64_t seed, const ProbeSpec& probe = {},
                                double threshold = 0.05);

} // namespace qotoc
