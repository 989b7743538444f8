#include "ics/model.hpp"

#include <string>

namespace ics {

namespace {

std::string pair_label(int to, int from) {
    // 1-based in messages, matching the file format
    return "(" + std::to_string(from + 1) + " -> " + std::to_string(to + 1) + ")";
}

} // namespace

void ModelSpec::validate() const {
    if (dimension < 2) fail(ErrorCode::bad_dimension, "dimension must be at least 2");
    for (const auto& [key, value] : rates) {
        const auto [to, from] = key;
        if (to < 0 || to >= dimension || from < 0 || from >= dimension)
            fail(ErrorCode::malformed_document, "rate index out of range " + pair_label(to, from));
        if (to == from)
            fail(ErrorCode::malformed_document, "diagonal rate entry " + pair_label(to, from));
        if (value < 0.0)
            fail(ErrorCode::malformed_document, "negative rate " + pair_label(to, from));
    }
    if (detector_to < 0 || detector_to >= dimension || detector_from < 0 ||
        detector_from >= dimension || detector_to == detector_from)
        fail(ErrorCode::malformed_document, "detector transition out of range");
    if (detector_rate() <= 0.0)
        fail(ErrorCode::missing_detector_rate,
             "monitored transition " + pair_label(detector_to, detector_from) + " has no rate");
    if (has_hamiltonian()) {
        if (hamiltonian.rows() != dimension || hamiltonian.cols() != dimension)
            fail(ErrorCode::malformed_document, "hamiltonian dimension mismatch");
        if (hamiltonian != hamiltonian.adjoint().eval())
            fail(ErrorCode::non_hermitian_hamiltonian, "hamiltonian is not Hermitian");
        if (kind == ModelKind::classical && !hamiltonian.isZero(0.0))
            fail(ErrorCode::malformed_document, "classical model with nonzero hamiltonian");
    }
}

DeformedGenerator build_classical_generator(const ModelSpec& spec) {
    spec.validate();
    if (spec.kind != ModelKind::classical)
        fail(ErrorCode::malformed_document, "classical generator requested for quantum model");
    const int n = spec.dimension;
    DeformedGenerator gen;
    gen.M = n;
    gen.base = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& [key, value] : spec.rates) {
        const auto [to, from] = key;
        gen.base(to, from) += value;
        gen.base(from, from) -= value;
    }
    gen.jump_row = spec.detector_to;
    gen.jump_col = spec.detector_from;
    gen.jump_value = spec.detector_rate();
    gen.base(gen.jump_row, gen.jump_col) -= gen.jump_value;
    return gen;
}

DeformedGenerator build_quantum_generator(const ModelSpec& spec) {
    spec.validate();
    if (spec.kind != ModelKind::quantum)
        fail(ErrorCode::malformed_document, "quantum generator requested for classical model");
    const int n = spec.dimension;
    const int m = n * n;
    const std::complex<double> iunit(0.0, 1.0);

    DeformedGenerator gen;
    gen.M = m;
    gen.base = Eigen::MatrixXcd::Zero(m, m);

    // -i (H rho - rho H)
    if (spec.has_hamiltonian()) {
        const auto& h = spec.hamiltonian;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    gen.base(liouville_index(i, j, n), liouville_index(k, j, n)) -= iunit * h(i, k);
                    gen.base(liouville_index(i, j, n), liouville_index(i, k, n)) += iunit * h(k, j);
                }
    }

    // dissipators: gain kappa rho_ll -> rho_kk, loss -kappa/2 (delta_il + delta_jl) rho_ij
    for (const auto& [key, value] : spec.rates) {
        const auto [to, from] = key;
        gen.base(liouville_index(to, to, n), liouville_index(from, from, n)) += value;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double loss = 0.0;
                if (i == from) loss += 0.5 * value;
                if (j == from) loss += 0.5 * value;
                if (loss != 0.0) {
                    const int idx = liouville_index(i, j, n);
                    gen.base(idx, idx) -= loss;
                }
            }
    }

    gen.jump_row = liouville_index(spec.detector_to, spec.detector_to, n);
    gen.jump_col = liouville_index(spec.detector_from, spec.detector_from, n);
    gen.jump_value = spec.detector_rate();
    gen.base(gen.jump_row, gen.jump_col) -= gen.jump_value;
    return gen;
}

DeformedGenerator build_generator(const ModelSpec& spec) {
    return spec.kind == ModelKind::classical ? build_classical_generator(spec)
                                             : build_quantum_generator(spec);
}

ModelSpec embed_classical(const ModelSpec& spec) {
    spec.validate();
    if (spec.kind != ModelKind::classical)
        fail(ErrorCode::malformed_document, "embedding expects a classical model");
    ModelSpec quantum = spec;
    quantum.kind = ModelKind::quantum;
    quantum.hamiltonian = Eigen::MatrixXcd::Zero(spec.dimension, spec.dimension);
    return quantum;
}

SteadyState steady_state(const DeformedGenerator& gen, int dimension) {
    const Eigen::MatrixXcd full = gen.full();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(full, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double scale = sv.size() > 0 ? sv(0) : 0.0;
    const double tol = 1e-10 * (scale > 0.0 ? scale : 1.0);

    int multiplicity = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) < tol) ++multiplicity;
    if (multiplicity == 0) fail(ErrorCode::no_steady_state, "generator has no numerical null vector");
    if (multiplicity > 1)
        fail(ErrorCode::non_unique_steady_state,
             "zero eigenvalue multiplicity " + std::to_string(multiplicity));

    Eigen::VectorXcd null_vec = svd.matrixV().col(full.cols() - 1);

    SteadyState state;
    state.zero_eigenvalue_multiplicity = multiplicity;
    state.occupations.resize(dimension);
    if (gen.M == dimension) {
        const std::complex<double> total = null_vec.sum();
        if (std::abs(total) < 1e-12)
            fail(ErrorCode::no_steady_state, "null vector is not normalizable");
        null_vec /= total;
        for (int i = 0; i < dimension; ++i) state.occupations(i) = null_vec(i).real();
    } else if (gen.M == dimension * dimension) {
        std::complex<double> trace(0.0, 0.0);
        for (int i = 0; i < dimension; ++i) trace += null_vec(liouville_index(i, i, dimension));
        if (std::abs(trace) < 1e-12)
            fail(ErrorCode::no_steady_state, "steady density has zero trace");
        null_vec /= trace;
        for (int i = 0; i < dimension; ++i)
            state.occupations(i) = null_vec(liouville_index(i, i, dimension)).real();
    } else {
        fail(ErrorCode::bad_dimension, "generator size matches neither N nor N^2");
    }
    return state;
}

} // namespace ics
