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

// Gate application. All stride math lives here; the arithmetic inner loops
// are delegated to the active kernels backend on contiguous spans. Controls
// that form the top bits of the register select a contiguous half of the
// amplitude array, so the common probe-controlled case runs at full
// uncontrolled-kernel speed on that half.

#include "qotoc/circuit.hpp"

#include <algorithm>
#include <stdexcept>

#include "qotoc/kernels.hpp"

namespace qotoc {

namespace {

using kernels::Backend;

void validate_gate(const Gate& g, int n_qubits) {
    std::vector<int> used;
    used.reserve(g.targets.size() + g.controls.size());
    for (int q : g.targets) {
        used.push_back(q);
    }
    for (int q : g.controls) {
        used.push_back(q);
    }
    for (int q : used) {
        if (q < 0 || q >= n_qubits) {
            throw std::out_of_range("gate qubit index out of range");
        }
    }
    std::sort(used.begin(), used.end());
    if (std::adjacent_find(used.begin(), used.end()) != used.end()) {
        throw std::invalid_argument("gate target/control indices collide");
    }

    switch (g.kind) {
    case GateKind::ZZ:
    case GateKind::Dense2Q:
        if (g.targets.size() != 2) {
            throw std::invalid_argument("two-qubit gate needs two targets");
        }
        break;
    case GateKind::DenseN: {
        for (std::size_t i = 0; i < g.targets.size(); ++i) {
            if (g.targets[i] != static_cast<int>(i)) {
                throw std::invalid_argument(
                    "dense multi-qubit gates act on qubits 0..k-1");
            }
        }
        const std::size_t dim = std::size_t{1} << g.targets.size();
        if (g.matrix.size() != dim * dim) {
            throw std::invalid_argument("dense gate matrix has wrong size");
        }
        break;
    }
    default:
        if (g.targets.size() != 1) {
            throw std::invalid_argument("single-qubit gate needs one target");
        }
        break;
    }
}

// Unitarity re-check for small dense gates built without the factories.
void validate_small_dense(const Gate& g) {
    if (g.kind != GateKind::Dense1Q && g.kind != GateKind::Dense2Q) {
        return;
    }
    const std::size_t dim = g.kind == GateKind::Dense1Q ? 2 : 4;
    if (g.matrix.size() != dim * dim) {
        throw std::invalid_argument("dense gate matrix has wrong size");
    }
    double worst = 0.0;
    for (std::size_t c1 = 0; c1 < dim; ++c1) {
        for (std::size_t c2 = 0; c2 < dim; ++c2) {
            cdouble dot{0.0, 0.0};
            for (std::size_t r = 0; r < dim; ++r) {
                dot += std::conj(g.matrix[c1 * dim + r]) * g.matrix[c2 * dim + r];
            }
            if (c1 == c2) {
                dot -= 1.0;
            }
            worst = std::max(worst, std::abs(dot));
        }
    }
    if (!(worst <= 1e-10)) {
        throw std::invalid_argument("dense gate matrix is not unitary");
    }
}

void apply_uncontrolled(cdouble* a, int n, const Gate& g, const Backend& k) {
    const std::size_t dim = std::size_t{1} << n;
    switch (g.kind) {
    case GateKind::X: {
        const std::size_t tb = std::size_t{1} << g.targets[0];
        for (std::size_t base = 0; base < dim; base += 2 * tb) {
            std::swap_ranges(a + base, a + base + tb, a + base + tb);
        }
        return;
    }
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Phase:
    case GateKind::RZ: {
        const auto d = g.diag_factors();
        const int t = g.targets[0];
        const std::size_t tb = std::size_t{1} << t;
        if (t == 0) {
            k.scale_pattern2(a, dim, d.data());
            return;
        }
        const bool skip0 = d[0] == cdouble{1.0, 0.0};
        for (std::size_t base = 0; base < dim; base += 2 * tb) {
            if (!skip0) {
                k.scale(a + base, tb, d[0]);
            }
            k.scale(a + base + tb, tb, d[1]);
        }
        return;
    }
    case GateKind::ZZ: {
        const auto f = g.zz_factors(); // {same parity, opposite parity}
        const int qa = std::min(g.targets[0], g.targets[1]);
        const int qb = std::max(g.targets[0], g.targets[1]);
        if (qa == 0 && qb == 1) {
            const cdouble pat[4] = {f[0], f[1], f[1], f[0]};
            k.scale_pattern4(a, dim, pat);
            return;
        }
        if (qa == 0) {
            const std::size_t run = std::size_t{1} << qb;
            const cdouble pat_even[2] = {f[0], f[1]};
            const cdouble pat_odd[2] = {f[1], f[0]};
            for (std::size_t base = 0; base < dim; base += run) {
                k.scale_pattern2(a + base, run,
                                 ((base >> qb) & 1) ? pat_odd : pat_even);
            }
            return;
        }
        const std::size_t run = std::size_t{1} << qa;
        for (std::size_t base = 0; base < dim; base += run) {
            const bool same = ((base >> qa) & 1) == ((base >> qb) & 1);
            k.scale(a + base, run, same ? f[0] : f[1]);
        }
        return;
    }
    case GateKind::H:
    case GateKind::Y:
    case GateKind::RX:
    case GateKind::Dense1Q: {
        const auto u = g.unitary2();
        const int t = g.targets[0];
        const std::size_t tb = std::size_t{1} << t;
        if (t == 0) {
            k.rotate_interleaved(a, dim / 2, u.data());
            return;
        }
        for (std::size_t base = 0; base < dim; base += 2 * tb) {
            k.rotate_pair_spans(a + base, a + base + tb, tb, u.data());
        }
        return;
    }
    case GateKind::Dense2Q: {
        const std::size_t m0 = std::size_t{1} << g.targets[0];
        const std::size_t m1 = std::size_t{1} << g.targets[1];
        const cdouble* m = g.matrix.data();
        for (std::size_t i = 0; i < dim; ++i) {
            if (i & (m0 | m1)) {
                continue;
            }
            const std::size_t idx[4] = {i, i | m0, i | m1, i | m0 | m1};
            cdouble x[4];
            for (int c = 0; c < 4; ++c) {
                x[c] = a[idx[c]];
            }
            for (int r = 0; r < 4; ++r) {
                a[idx[r]] = m[r] * x[0] + m[4 + r] * x[1] + m[8 + r] * x[2] +
                            m[12 + r] * x[3];
            }
        }
        return;
    }
    case GateKind::DenseN: {
        const std::size_t bdim = std::size_t{1} << g.targets.size();
        std::vector<cdouble> scratch(bdim);
        for (std::size_t base = 0; base < dim; base += bdim) {
            k.matvec_rows(scratch.data(), g.matrix.data(), a + base, bdim, 0,
                          bdim);
            std::copy(scratch.begin(), scratch.end(), a + base);
        }
        return;
    }
    }
}

// Scalar fallback for controls that do not form the top bits.
void apply_controlled_general(cdouble* a, int n, const Gate& g,
                              const std::vector<int>& ctrls,
                              const Backend& k) {
    const std::size_t dim = std::size_t{1} << n;
    std::size_t cmask = 0;
    for (int c : ctrls) {
        cmask |= std::size_t{1} << c;
    }
    switch (g.kind) {
    case GateKind::X: {
        const std::size_t tb = std::size_t{1} << g.targets[0];
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & cmask) == cmask && !(i & tb)) {
                std::swap(a[i], a[i | tb]);
            }
        }
        return;
    }
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Phase:
    case GateKind::RZ: {
        const auto d = g.diag_factors();
        const std::size_t tb = std::size_t{1} << g.targets[0];
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & cmask) == cmask) {
                a[i] *= (i & tb) ? d[1] : d[0];
            }
        }
        return;
    }
    case GateKind::ZZ: {
        const auto f = g.zz_factors();
        const std::size_t ma = std::size_t{1} << g.targets[0];
        const std::size_t mb = std::size_t{1} << g.targets[1];
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & cmask) == cmask) {
                const bool same = static_cast<bool>(i & ma) ==
                                  static_cast<bool>(i & mb);
                a[i] *= same ? f[0] : f[1];
            }
        }
        return;
    }
    case GateKind::H:
    case GateKind::Y:
    case GateKind::RX:
    case GateKind::Dense1Q: {
        const auto u = g.unitary2();
        const std::size_t tb = std::size_t{1} << g.targets[0];
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & cmask) == cmask && !(i & tb)) {
                const cdouble x0 = a[i];
                const cdouble x1 = a[i | tb];
                a[i] = u[0] * x0 + u[2] * x1;
                a[i | tb] = u[1] * x0 + u[3] * x1;
            }
        }
        return;
    }
    case GateKind::Dense2Q: {
        const std::size_t m0 = std::size_t{1} << g.targets[0];
        const std::size_t m1 = std::size_t{1} << g.targets[1];
        const cdouble* m = g.matrix.data();
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & cmask) != cmask || (i & (m0 | m1))) {
                continue;
            }
            const std::size_t idx[4] = {i, i | m0, i | m1, i | m0 | m1};
            cdouble x[4];
            for (int c = 0; c < 4; ++c) {
                x[c] = a[idx[c]];
            }
            for (int r = 0; r < 4; ++r) {
                a[idx[r]] = m[r] * x[0] + m[4 + r] * x[1] + m[8 + r] * x[2] +
                            m[12 + r] * x[3];
            }
        }
        return;
    }
    case GateKind::DenseN: {
        // Controls are distinct from targets 0..k-1, so they are constant
        // within each 2^k block.
        const std::size_t bdim = std::size_t{1} << g.targets.size();
        std::vector<cdouble> scratch(bdim);
        for (std::size_t base = 0; base < dim; base += bdim) {
            if ((base & cmask) != cmask) {
                continue;
            }
            k.matvec_rows(scratch.data(), g.matrix.data(), a + base, bdim, 0,
                          bdim);
            std::copy(scratch.begin(), scratch.end(), a + base);
        }
        return;
    }
    }
}

} // namespace

void Circuit::append(Gate gate) {
    if (gate.span_qubits() > n_qubits) {
        throw std::out_of_range("gate references qubits beyond the circuit");
    }
    gates.push_back(std::move(gate));
}

Circuit Circuit::inverse() const {
    Circuit inv(n_qubits);
    inv.gates.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        inv.gates.push_back(it->adjoint());
    }
    return inv;
}

Circuit controlled(const Circuit& circuit, int control) {
    if (control < 0) {
        throw std::out_of_range("control index out of range");
    }
    Circuit out(std::max(circuit.n_qubits, control + 1));
    out.gates.reserve(circuit.gates.size());
    for (const Gate& g : circuit.gates) {
        out.gates.push_back(g.with_control(control));
    }
    return out;
}

Circuit repeat(const Circuit& circuit, int times) {
    if (times < 0) {
        throw std::invalid_argument("repeat count must be >= 0");
    }
    Circuit out(circuit.n_qubits);
    out.gates.reserve(circuit.gates.size() * static_cast<std::size_t>(times));
    for (int i = 0; i < times; ++i) {
        out.gates.insert(out.gates.end(), circuit.gates.begin(),
                         circuit.gates.end());
    }
    return out;
}

StateVector apply_gate(StateVector state, const Gate& gate) {
    validate_gate(gate, state.n_qubits);
    validate_small_dense(gate);

    const Backend& k = kernels::active_backend();
    cdouble* a = state.amplitudes.data();
    int n = state.n_qubits;

    std::vector<int> ctrls = gate.controls;
    std::sort(ctrls.begin(), ctrls.end(), std::greater<int>());
    // Controls on the top bits restrict the update to the contiguous
    // control-on half; peel them off and shrink the register view.
    while (!ctrls.empty() && ctrls.front() == n - 1) {
        a += std::size_t{1} << (n - 1);
        ctrls.erase(ctrls.begin());
        --n;
    }
    if (ctrls.empty()) {
        apply_uncontrolled(a, n, gate, k);
    } else {
        apply_controlled_general(a, n, gate, ctrls, k);
    }
    return state;
}

StateVector apply_circuit(StateVector state, const Circuit& circuit) {
    if (state.n_qubits != circuit.n_qubits) {
        throw std::invalid_argument(
            "circuit and state qubit counts differ");
    }
    for (const Gate& g : circuit.gates) {
        state = apply_gate(std::move(state), g);
    }
    return state;
}

} // namespace qotoc
