#pragma once

// Shared model fixtures: enzyme kinetics (three states, reversible binding),
// two-state emitters, unidirectional rings, the laser-driven three-level atom
// and a resonantly driven two-level emitter.

#include <vector>

#include "ics/model.hpp"
#include "ics/rng.hpp"

namespace fixtures {

using ics::ModelKind;
using ics::ModelSpec;

// rates {k21, k12, k32, k13}, detector on 3 -> 1
inline ModelSpec enzyme(double k21 = 1.0, double k12 = 1.0, double k32 = 2.0, double k13 = 3.0) {
    ModelSpec spec;
    spec.kind = ModelKind::classical;
    spec.dimension = 3;
    spec.rates[{1, 0}] = k21;
    spec.rates[{0, 1}] = k12;
    spec.rates[{2, 1}] = k32;
    spec.rates[{0, 2}] = k13;
    spec.detector_from = 2;
    spec.detector_to = 0;
    return spec;
}

inline ModelSpec enzyme_alternative() { return enzyme(3.0, 1.0 / 3.0, 2.0 / 3.0, 3.0); }

// detector on 1 -> 2
inline ModelSpec two_state(double k21, double k12) {
    ModelSpec spec;
    spec.kind = ModelKind::classical;
    spec.dimension = 2;
    spec.rates[{1, 0}] = k21;
    spec.rates[{0, 1}] = k12;
    spec.detector_from = 0;
    spec.detector_to = 1;
    return spec;
}

inline ModelSpec symmetric_two_state() { return two_state(1.0, 1.0); }

// unidirectional ring 1 -> 2 -> ... -> N -> 1, detector on N -> 1
inline ModelSpec ring(const std::vector<double>& rates) {
    ModelSpec spec;
    spec.kind = ModelKind::classical;
    const int n = static_cast<int>(rates.size());
    spec.dimension = n;
    for (int i = 0; i < n; ++i) spec.rates[{(i + 1) % n, i}] = rates[i];
    spec.detector_from = n - 1;
    spec.detector_to = 0;
    return spec;
}

// three-level atom: decay 1 -> 2 (monitored, k21) and 3 -> 1 (k13), couplings
// Omega32, Omega21, Omega31 (H_ij = Omega_ij / 2)
inline ModelSpec lambda_atom(double k21 = 5.0, double k13 = 4.0, double omega32 = 3.0,
                             double omega21 = 2.0, double omega31 = 1.0) {
    ModelSpec spec;
    spec.kind = ModelKind::quantum;
    spec.dimension = 3;
    spec.rates[{1, 0}] = k21;
    spec.rates[{0, 2}] = k13;
    spec.detector_from = 0;
    spec.detector_to = 1;
    spec.hamiltonian = Eigen::MatrixXcd::Zero(3, 3);
    spec.hamiltonian(1, 0) = spec.hamiltonian(0, 1) = omega21 / 2.0;
    spec.hamiltonian(2, 0) = spec.hamiltonian(0, 2) = omega31 / 2.0;
    spec.hamiltonian(2, 1) = spec.hamiltonian(1, 2) = omega32 / 2.0;
    return spec;
}

// resonance fluorescence: decay 1 -> 2 (monitored), Rabi coupling Omega
inline ModelSpec driven_two_level(double k21 = 1.0, double omega = 1.0) {
    ModelSpec spec;
    spec.kind = ModelKind::quantum;
    spec.dimension = 2;
    spec.rates[{1, 0}] = k21;
    spec.detector_from = 0;
    spec.detector_to = 1;
    spec.hamiltonian = Eigen::MatrixXcd::Zero(2, 2);
    spec.hamiltonian(0, 1) = spec.hamiltonian(1, 0) = omega / 2.0;
    return spec;
}

// connected random classical model: ring backbone plus extra transitions
inline ModelSpec random_classical(int n, ics::CounterRng& rng) {
    ModelSpec spec;
    spec.kind = ModelKind::classical;
    spec.dimension = n;
    for (int i = 0; i < n; ++i) spec.rates[{(i + 1) % n, i}] = rng.uniform(0.3, 3.0);
    for (int from = 0; from < n; ++from)
        for (int to = 0; to < n; ++to) {
            if (to == from || spec.rates.count({to, from})) continue;
            if (rng.uniform() < 0.4) spec.rates[{to, from}] = rng.uniform(0.3, 3.0);
        }
    spec.detector_from = n - 1;
    spec.detector_to = 0;
    return spec;
}

// random quantum model: random stochastic part plus random Hermitian H
inline ModelSpec random_quantum(int n, ics::CounterRng& rng) {
    ModelSpec spec = random_classical(n, rng);
    spec.kind = ModelKind::quantum;
    spec.hamiltonian = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const std::complex<double> value(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5));
            spec.hamiltonian(i, j) = value;
            spec.hamiltonian(j, i) = std::conj(value);
        }
    return spec;
}

} // namespace fixtures
