#pragma once

// Model specifications and deformed generators. A model is a finite set of
// states connected by stochastic transitions (rates kappa) and, for quantum
// models, coherent couplings (Hermitian H). One stochastic transition
// (detector_from -> detector_to) is monitored; its gain matrix element is the
// rank-one jump part of the deformed generator.

#include <complex>
#include <map>
#include <utility>

#include <Eigen/Dense>

#include "ics/errors.hpp"

namespace ics {

enum class ModelKind { classical, quantum };

// Rates are keyed (to, from), zero-based: rate(i, j) generates |j> -> |i>.
struct ModelSpec {
    ModelKind kind = ModelKind::classical;
    int dimension = 0;
    std::map<std::pair<int, int>, double> rates;
    Eigen::MatrixXcd hamiltonian; // size 0 when absent
    int detector_to = -1;
    int detector_from = -1;

    double rate(int to, int from) const {
        auto it = rates.find({to, from});
        return it == rates.end() ? 0.0 : it->second;
    }
    double exit_rate(int state) const {
        double sum = 0.0;
        for (const auto& [key, value] : rates)
            if (key.second == state) sum += value;
        return sum;
    }
    double detector_rate() const { return rate(detector_to, detector_from); }
    bool has_hamiltonian() const { return hamiltonian.size() != 0; }

    void validate() const;
};

struct DeformedGenerator {
    int M = 0;             // N for classical models, N^2 for quantum models
    Eigen::MatrixXcd base; // everything except the monitored gain entry
    int jump_row = -1;
    int jump_col = -1;
    double jump_value = 0.0;

    Eigen::MatrixXcd at(double s) const {
        Eigen::MatrixXcd m = base;
        m(jump_row, jump_col) += s * jump_value;
        return m;
    }
    Eigen::MatrixXcd full() const { return at(1.0); }
};

struct SteadyState {
    Eigen::VectorXd occupations;
    int zero_eigenvalue_multiplicity = 1;
};

// Row-major vectorization of the density matrix: rho_ij -> index i*n + j.
inline int liouville_index(int i, int j, int n) { return i * n + j; }

DeformedGenerator build_classical_generator(const ModelSpec& spec);
DeformedGenerator build_quantum_generator(const ModelSpec& spec);
DeformedGenerator build_generator(const ModelSpec& spec);

// Same rates, H = 0, kind = quantum; the block structure of the resulting
// generator factorizes its characteristic polynomial into classical and
// coherence parts.
ModelSpec embed_classical(const ModelSpec& spec);

SteadyState steady_state(const DeformedGenerator& gen, int dimension);

} // namespace ics
