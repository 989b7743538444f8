#include "ics/recovery.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <thread>

#include "ics/poly_inverse.hpp"
#include "ics/rng.hpp"

namespace ics {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// ---------------------------------------------------------------- residuals

// Evaluates the scaled residual vector at theta; nullopt marks an infeasible
// point (invalid model, degenerate polynomial, ...).
using ResidualFn = std::function<std::optional<VectorXd>(const VectorXd&)>;

std::vector<double> to_std(const VectorXd& v) { return {v.data(), v.data() + v.size()}; }

VectorXd reflect_rates(const ParameterStructure& structure, VectorXd theta) {
    for (int k = 0; k < theta.size(); ++k)
        if (structure.unknowns[k].kind == Unknown::Kind::rate) theta(k) = std::abs(theta(k));
    return theta;
}

std::vector<double> target_components(const CharPolyPair& target) {
    std::vector<double> t;
    for (int mu = 1; mu <= target.degree - 1; ++mu) t.push_back(target.a[mu]);
    for (int mu = 0; mu <= target.degree - 2; ++mu) t.push_back(target.aprime[mu]);
    return t;
}

std::vector<double> component_scales(const std::vector<double>& targets) {
    double max_abs = 0.0;
    for (double t : targets) max_abs = std::max(max_abs, std::abs(t));
    const double floor = std::max(1e-2 * max_abs, 1e-12);
    std::vector<double> scales(targets.size());
    for (std::size_t k = 0; k < targets.size(); ++k)
        scales[k] = std::max(std::abs(targets[k]), floor);
    return scales;
}

// --------------------------------------------------------- start distribution

struct StartSampler {
    std::vector<Unknown::Kind> kinds;
    double rate_scale = 1.0;
    double coupling_scale = 1.0;

    VectorXd sample(CounterRng& rng) const {
        VectorXd theta(static_cast<int>(kinds.size()));
        for (std::size_t k = 0; k < kinds.size(); ++k) {
            if (kinds[k] == Unknown::Kind::rate)
                theta(k) = rate_scale * std::pow(10.0, rng.uniform(-2.0, 2.0));
            else
                theta(k) = rng.uniform(-coupling_scale, coupling_scale);
        }
        return theta;
    }
};

// The trace coefficient a_{M-1} pins the total rate: sum of rates for
// classical generators, N times that for quantum ones.
StartSampler make_sampler(const ParameterStructure& structure, double trace_coefficient) {
    StartSampler sampler;
    int n_rates = 0;
    for (const auto& u : structure.unknowns) {
        sampler.kinds.push_back(u.kind);
        if (u.kind == Unknown::Kind::rate) ++n_rates;
    }
    double total = trace_coefficient;
    if (structure.base.kind == ModelKind::quantum) total /= structure.base.dimension;
    double known = 0.0;
    for (const auto& [key, value] : structure.base.rates) known += value;
    double budget = total - known;
    if (!(budget > 0.0)) budget = std::max(total, 1.0);
    const double per_unknown = budget / std::max(1, n_rates);
    sampler.rate_scale = per_unknown > 0.0 ? per_unknown : 1.0;
    sampler.coupling_scale = std::max(sampler.rate_scale, budget);
    return sampler;
}

// ---------------------------------------------------------------- optimizer

struct LmOutcome {
    VectorXd x;
    double residual_inf = std::numeric_limits<double>::infinity();
    bool converged = false;
};

std::optional<MatrixXd> jacobian_fd(const ResidualFn& fn, const VectorXd& x, const VectorXd& r0) {
    MatrixXd jac(r0.size(), x.size());
    for (int k = 0; k < x.size(); ++k) {
        const double step = 1e-6 * std::max(1.0, std::abs(x(k)));
        VectorXd forward = x;
        forward(k) += step;
        auto rf = fn(forward);
        if (!rf) {
            forward(k) = x(k) - step;
            rf = fn(forward);
            if (!rf) return std::nullopt;
            jac.col(k) = (r0 - *rf) / step;
        } else {
            jac.col(k) = (*rf - r0) / step;
        }
    }
    return jac;
}

LmOutcome levenberg_marquardt(const ResidualFn& fn, const ParameterStructure& structure,
                              VectorXd x0, int max_iterations, double tol) {
    LmOutcome out;
    VectorXd x = reflect_rates(structure, std::move(x0));
    auto r = fn(x);
    if (!r) return out;
    double cost = r->squaredNorm();
    double mu = 0.0;

    for (int iter = 0; iter < max_iterations; ++iter) {
        out.x = x;
        out.residual_inf = r->cwiseAbs().maxCoeff();
        if (out.residual_inf <= tol) {
            out.converged = true;
            return out;
        }
        const auto jac = jacobian_fd(fn, x, *r);
        if (!jac) return out;
        const MatrixXd jtj = jac->transpose() * (*jac);
        const VectorXd gradient = jac->transpose() * (*r);
        VectorXd diagonal = jtj.diagonal();
        const double diag_max = diagonal.maxCoeff();
        for (int k = 0; k < diagonal.size(); ++k)
            diagonal(k) = std::max(diagonal(k), std::max(1e-12 * diag_max, 1e-300));
        if (mu == 0.0) mu = 1e-3;

        bool accepted = false;
        for (int inner = 0; inner < 50; ++inner) {
            MatrixXd damped = jtj;
            damped.diagonal() += mu * diagonal;
            const VectorXd step = damped.ldlt().solve(-gradient);
            const VectorXd x_try = reflect_rates(structure, x + step);
            const auto r_try = fn(x_try);
            if (r_try && r_try->squaredNorm() < cost) {
                x = x_try;
                r = r_try;
                cost = r_try->squaredNorm();
                mu = std::max(mu / 3.0, 1e-14);
                accepted = true;
                break;
            }
            mu *= 4.0;
            if (mu > 1e15) break;
        }
        if (!accepted) {
            out.x = x;
            out.residual_inf = r->cwiseAbs().maxCoeff();
            out.converged = out.residual_inf <= tol;
            return out;
        }
    }
    out.x = x;
    out.residual_inf = r->cwiseAbs().maxCoeff();
    out.converged = out.residual_inf <= tol;
    return out;
}

// -------------------------------------------------------------- rank probing

MatrixXd stacked_jacobian(const ResidualFn& fn, const StartSampler& sampler,
                          std::uint64_t seed, int points, int residual_size, int n_params) {
    MatrixXd stacked(0, n_params);
    CounterRng rng(seed, 0x5EEDu);
    for (int p = 0; p < points; ++p) {
        VectorXd theta = sampler.sample(rng);
        const auto r = fn(theta);
        if (!r) continue;
        const auto jac = jacobian_fd(fn, theta, *r);
        if (!jac) continue;
        const int offset = static_cast<int>(stacked.rows());
        stacked.conservativeResize(offset + residual_size, Eigen::NoChange);
        stacked.middleRows(offset, residual_size) = *jac;
    }
    return stacked;
}

int numerical_rank(const MatrixXd& matrix) {
    if (matrix.rows() == 0 || matrix.cols() == 0) return 0;
    Eigen::JacobiSVD<MatrixXd> svd(matrix);
    const auto& sv = svd.singularValues();
    const double largest = sv(0);
    if (!(largest > 0.0)) return 0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-7 * largest) ++rank;
    return rank;
}

// ------------------------------------------------------------- deduplication

bool same_point(const std::vector<double>& a, const std::vector<double>& b, double radius) {
    double diff = 0.0, scale = 1.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        diff = std::max(diff, std::abs(a[k] - b[k]));
        scale = std::max({scale, std::abs(a[k]), std::abs(b[k])});
    }
    return diff <= radius * scale;
}

void dedup_insert(std::vector<RecoverySolution>& list, RecoverySolution candidate, double radius,
                  double RecoverySolution::*quality) {
    for (auto& existing : list) {
        if (same_point(existing.params, candidate.params, radius)) {
            if (candidate.*quality < existing.*quality) existing = std::move(candidate);
            return;
        }
    }
    list.push_back(std::move(candidate));
}

void attach_steady_state(const ParameterStructure& structure, RecoverySolution& solution) {
    try {
        const ModelSpec spec = structure.instantiate(solution.params);
        const SteadyState state = steady_state(build_generator(spec), spec.dimension);
        solution.steady_occupations.assign(state.occupations.data(),
                                           state.occupations.data() + state.occupations.size());
    } catch (const Error&) {
        solution.steady_occupations.clear();
    }
}

struct EquationSet {
    std::vector<int> indices;         // into the full residual vector
    std::vector<std::string> labels;
};

// Greedy selection of |S| independent equations, smallest polynomial degree
// first (degree of both a_mu and a'_mu conditions is M - mu).
EquationSet select_square_subsystem(const ResidualFn& full_fn, const StartSampler& sampler,
                                    std::uint64_t seed, int degree, int n_params) {
    struct Candidate {
        int index;
        int poly_degree;
        std::string label;
    };
    std::vector<Candidate> candidates;
    for (int mu = 1; mu <= degree - 1; ++mu)
        candidates.push_back({mu - 1, degree - mu, "a" + std::to_string(mu)});
    for (int mu = 0; mu <= degree - 2; ++mu)
        candidates.push_back({(degree - 1) + mu, degree - mu, "a'" + std::to_string(mu)});
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& lhs, const Candidate& rhs) {
                         return lhs.poly_degree < rhs.poly_degree;
                     });

    constexpr int kProbePoints = 4;
    std::vector<MatrixXd> jacobians;
    CounterRng rng(seed, 0xB10C5u);
    for (int p = 0; p < kProbePoints && static_cast<int>(jacobians.size()) < kProbePoints; ++p) {
        for (int attempt = 0; attempt < 8; ++attempt) {
            VectorXd theta = sampler.sample(rng);
            const auto r = full_fn(theta);
            if (!r) continue;
            const auto jac = jacobian_fd(full_fn, theta, *r);
            if (!jac) continue;
            jacobians.push_back(*jac);
            break;
        }
    }
    if (jacobians.empty())
        fail(ErrorCode::no_solution_found, "no feasible point for equation selection");

    EquationSet selected;
    MatrixXd stacked(0, n_params);
    int rank = 0;
    for (const auto& candidate : candidates) {
        if (static_cast<int>(selected.indices.size()) == n_params) break;
        MatrixXd trial(stacked.rows() + static_cast<int>(jacobians.size()), n_params);
        trial.topRows(stacked.rows()) = stacked;
        for (std::size_t p = 0; p < jacobians.size(); ++p)
            trial.row(stacked.rows() + static_cast<int>(p)) = jacobians[p].row(candidate.index);
        const int trial_rank = numerical_rank(trial);
        if (trial_rank > rank) {
            stacked = std::move(trial);
            rank = trial_rank;
            selected.indices.push_back(candidate.index);
            selected.labels.push_back(candidate.label);
        }
    }
    if (static_cast<int>(selected.indices.size()) < n_params)
        fail(ErrorCode::underdetermined,
             "only " + std::to_string(selected.indices.size()) +
                 " independent coefficient conditions for " + std::to_string(n_params) +
                 " parameters");
    return selected;
}

// --------------------------------------------------------------- main driver

RecoveryReport run_multistart(const ParameterStructure& structure, const ResidualFn& full_fn,
                              const ResidualFn& solver_fn, const StartSampler& sampler,
                              const RecoveryConfig& config, RecoveryMode mode,
                              const std::function<bool(const RecoverySolution&)>& extra_check,
                              int n_equations, std::vector<std::string> selected_labels,
                              int jacobian_rank) {
    struct StartResult {
        bool converged = false;
        RecoverySolution solution;
    };
    std::vector<StartResult> results(config.starts);

    const auto worker_body = [&](int index) {
        CounterRng rng(config.seed, static_cast<std::uint64_t>(index) + 1);
        const VectorXd theta0 = sampler.sample(rng);
        const LmOutcome outcome = levenberg_marquardt(solver_fn, structure, theta0,
                                                      config.max_iterations, config.converge_tol);
        if (!outcome.converged) return;
        StartResult& slot = results[index];
        slot.converged = true;
        slot.solution.params = to_std(outcome.x);
        const auto full = full_fn(outcome.x);
        const double full_residual =
            full ? full->cwiseAbs().maxCoeff() : std::numeric_limits<double>::infinity();
        if (mode == RecoveryMode::cumulant_match) {
            slot.solution.cumulant_residual = full_residual;
            slot.solution.coefficient_residual = full_residual;
        } else {
            slot.solution.coefficient_residual = full_residual;
        }
        slot.solution.verified = full_residual <= config.verify_tol;
        if (slot.solution.verified && extra_check) slot.solution.verified = extra_check(slot.solution);
    };

    int n_threads = config.threads > 0 ? config.threads
                                       : static_cast<int>(std::thread::hardware_concurrency());
    n_threads = std::clamp(n_threads, 1, std::max(1, config.starts));
    if (n_threads == 1) {
        for (int i = 0; i < config.starts; ++i) worker_body(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (int t = 0; t < n_threads; ++t)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < config.starts; i = next.fetch_add(1))
                    worker_body(i);
            });
        for (auto& thread : pool) thread.join();
    }

    RecoveryReport report;
    report.mode = mode;
    report.n_starts = config.starts;
    report.seed = config.seed;
    report.dedup_radius = config.dedup_radius;
    report.verify_tol = config.verify_tol;
    report.converge_tol = config.converge_tol;
    report.n_equations = n_equations;
    report.selected_equations = std::move(selected_labels);
    report.jacobian_rank = jacobian_rank;

    for (int i = 0; i < config.starts; ++i) {
        if (!results[i].converged) continue;
        ++report.n_converged;
        auto& list = results[i].solution.verified ? report.solutions : report.unverified;
        dedup_insert(list, std::move(results[i].solution), config.dedup_radius,
                     &RecoverySolution::coefficient_residual);
    }
    if (report.n_converged == 0)
        fail(ErrorCode::no_solution_found, "no start converged within the iteration budget");

    for (auto& solution : report.solutions) attach_steady_state(structure, solution);
    const auto by_params = [](const RecoverySolution& lhs, const RecoverySolution& rhs) {
        return lhs.params < rhs.params;
    };
    std::sort(report.solutions.begin(), report.solutions.end(), by_params);
    std::sort(report.unverified.begin(), report.unverified.end(), by_params);
    return report;
}

} // namespace

// ------------------------------------------------------------------- public

std::string Unknown::label() const {
    if (kind == Kind::rate)
        return "rate(" + std::to_string(from + 1) + "->" + std::to_string(to + 1) + ")";
    return "coupling(" + std::to_string(to + 1) + "," + std::to_string(from + 1) + ")";
}

ModelSpec ParameterStructure::instantiate(const std::vector<double>& theta) const {
    if (theta.size() != unknowns.size())
        fail(ErrorCode::usage_error, "parameter vector length mismatch");
    ModelSpec spec = base;
    if (spec.kind == ModelKind::quantum && !spec.has_hamiltonian())
        spec.hamiltonian = Eigen::MatrixXcd::Zero(spec.dimension, spec.dimension);
    for (std::size_t k = 0; k < unknowns.size(); ++k) {
        const Unknown& u = unknowns[k];
        if (u.kind == Unknown::Kind::rate) {
            spec.rates[{u.to, u.from}] = theta[k];
        } else {
            spec.hamiltonian(u.to, u.from) = 0.5 * theta[k];
            spec.hamiltonian(u.from, u.to) = 0.5 * theta[k];
        }
    }
    return spec;
}

std::vector<std::array<double, 2>> two_state_closed_form(double c1, double c2) {
    if (!(c1 > 0.0)) fail(ErrorCode::usage_error, "mean current must be positive");
    if (c2 > c1)
        fail(ErrorCode::no_real_solution,
             "super-Poissonian statistics (c2 > c1) admit no two-state generator");
    if (2.0 * c2 < c1)
        fail(ErrorCode::no_real_solution,
             "negative discriminant (2 c2 < c1) admits no real two-state generator");
    if (c1 == c2)
        fail(ErrorCode::no_real_solution, "Poissonian statistics (c1 = c2) are degenerate");
    const double root = std::sqrt(c1) * c1 * std::sqrt(2.0 * c2 - c1);
    const double kp = (c1 * c1 + root) / (c1 - c2);
    const double km = (c1 * c1 - root) / (c1 - c2);
    return {{kp, km}, {km, kp}};
}

std::vector<double> coefficient_residuals(const ParameterStructure& structure,
                                          const std::vector<double>& theta,
                                          const CharPolyPair& target) {
    const ModelSpec spec = structure.instantiate(theta);
    const CharPolyPair pair = affine_split(build_generator(spec));
    if (pair.degree != target.degree)
        fail(ErrorCode::bad_dimension, "structure and target degree mismatch");
    std::vector<double> residuals;
    for (int mu = 1; mu <= target.degree - 1; ++mu) residuals.push_back(pair.a[mu] - target.a[mu]);
    for (int mu = 0; mu <= target.degree - 2; ++mu)
        residuals.push_back(pair.aprime[mu] - target.aprime[mu]);
    return residuals;
}

RecoveryReport recover_multistart(const ParameterStructure& structure, const CharPolyPair& target,
                                  const RecoveryConfig& config) {
    const int n_params = static_cast<int>(structure.unknowns.size());
    const int degree = structure.implied_M();
    if (target.degree != degree)
        fail(ErrorCode::bad_dimension, "target degree does not match the structure");
    if (n_params > 2 * (degree - 1))
        fail(ErrorCode::underdetermined,
             std::to_string(n_params) + " parameters exceed the " +
                 std::to_string(2 * (degree - 1)) + " coefficient conditions");

    const std::vector<double> targets = target_components(target);
    const std::vector<double> scales = component_scales(targets);

    const ResidualFn full_fn = [&](const VectorXd& theta) -> std::optional<VectorXd> {
        try {
            const std::vector<double> raw = coefficient_residuals(structure, to_std(theta), target);
            VectorXd out(static_cast<int>(raw.size()));
            for (std::size_t k = 0; k < raw.size(); ++k) out(k) = raw[k] / scales[k];
            return out;
        } catch (const Error&) {
            return std::nullopt;
        }
    };

    const StartSampler sampler = make_sampler(structure, target.a[degree - 1]);

    const MatrixXd probe = stacked_jacobian(full_fn, sampler, config.seed, 5,
                                            static_cast<int>(targets.size()), n_params);
    const int rank = numerical_rank(probe);
    if (rank < n_params)
        fail(ErrorCode::underdetermined,
             "residual Jacobian rank " + std::to_string(rank) + " below parameter count " +
                 std::to_string(n_params));

    const EquationSet selected =
        select_square_subsystem(full_fn, sampler, config.seed, degree, n_params);
    const ResidualFn solver_fn = [&, selected](const VectorXd& theta) -> std::optional<VectorXd> {
        const auto full = full_fn(theta);
        if (!full) return std::nullopt;
        VectorXd out(static_cast<int>(selected.indices.size()));
        for (std::size_t k = 0; k < selected.indices.size(); ++k)
            out(k) = (*full)(selected.indices[k]);
        return out;
    };

    return run_multistart(structure, full_fn, solver_fn, sampler, config,
                          RecoveryMode::coefficient_match, nullptr,
                          static_cast<int>(targets.size()), selected.labels, rank);
}

RecoveryReport cumulant_match_recover(const ParameterStructure& structure,
                                      const CumulantVector& cumulants,
                                      const RecoveryConfig& config) {
    const int n_params = static_cast<int>(structure.unknowns.size());
    const int available = cumulants.orders();
    if (available < n_params)
        fail(ErrorCode::underdetermined,
             std::to_string(available) + " cumulants cannot determine " +
                 std::to_string(n_params) + " parameters");

    const std::vector<double>& targets = cumulants.values;
    const std::vector<double> scales = component_scales(targets);

    const ResidualFn full_fn = [&](const VectorXd& theta) -> std::optional<VectorXd> {
        try {
            const ModelSpec spec = structure.instantiate(to_std(theta));
            const CharPolyPair pair = affine_split(build_generator(spec));
            const CumulantVector forward = cumulants_from_charpoly(pair, available);
            VectorXd out(available);
            for (int k = 0; k < available; ++k)
                out(k) = (forward.values[k] - targets[k]) / scales[k];
            return out;
        } catch (const Error&) {
            return std::nullopt;
        }
    };

    // trace coefficient from the trace identity: c-data do not expose it
    // directly, so reconstruct the classical block when possible, else fall
    // back to a unit scale.
    double trace_coefficient = 1.0;
    try {
        const int n = structure.base.dimension;
        if (available >= 2 * (n - 1)) {
            CumulantVector head;
            const int need = 2 * (n - 1);
            head.values.assign(cumulants.values.begin(), cumulants.values.begin() + need);
            trace_coefficient = reconstruct_charpoly(head, n).pair.a[n - 1];
            if (structure.base.kind == ModelKind::quantum)
                trace_coefficient *= structure.base.dimension;
        }
    } catch (const Error&) {
    }
    const StartSampler sampler = make_sampler(structure, trace_coefficient);

    const MatrixXd probe = stacked_jacobian(full_fn, sampler, config.seed, 5, available, n_params);
    const int rank = numerical_rank(probe);
    if (rank < n_params)
        fail(ErrorCode::underdetermined,
             "cumulant Jacobian rank " + std::to_string(rank) + " below parameter count " +
                 std::to_string(n_params));

    // classical-block cross-check: the classical characteristic polynomial of
    // a verified solution must match the one reconstructed from the data
    std::function<bool(const RecoverySolution&)> extra_check;
    if (structure.base.kind == ModelKind::classical) {
        const int n = structure.base.dimension;
        if (available >= 2 * (n - 1)) {
            try {
                CumulantVector head;
                head.values.assign(cumulants.values.begin(),
                                   cumulants.values.begin() + 2 * (n - 1));
                const Reconstruction recon = reconstruct_charpoly(head, n);
                if (recon.unique) {
                    const CharPolyPair block = recon.pair;
                    const ParameterStructure* struct_ptr = &structure;
                    const double tol = config.cross_check_tol;
                    extra_check = [struct_ptr, block, tol](const RecoverySolution& solution) {
                        const std::vector<double> raw =
                            coefficient_residuals(*struct_ptr, solution.params, block);
                        const std::vector<double> t = target_components(block);
                        const std::vector<double> s = component_scales(t);
                        for (std::size_t k = 0; k < raw.size(); ++k)
                            if (std::abs(raw[k]) > tol * s[k]) return false;
                        return true;
                    };
                }
            } catch (const Error&) {
            }
        }
    }

    return run_multistart(structure, full_fn, full_fn, sampler, config,
                          RecoveryMode::cumulant_match, extra_check, available, {}, rank);
}

RecoveryReport recover_two_state(double c1, double c2, const RecoveryConfig& config) {
    const auto pairs = two_state_closed_form(c1, c2);

    // implied target pair for the residual bookkeeping
    CharPolyPair target;
    target.degree = 2;
    target.a = {0.0, 2.0 * c1 * c1 / (c1 - c2), 1.0};
    target.aprime = {-2.0 * c1 * c1 * c1 / (c1 - c2), 0.0, 0.0};

    ParameterStructure structure;
    structure.base.kind = ModelKind::classical;
    structure.base.dimension = 2;
    structure.base.detector_from = 0;
    structure.base.detector_to = 1;
    structure.unknowns = {{Unknown::Kind::rate, 1, 0}, {Unknown::Kind::rate, 0, 1}};

    RecoveryReport report;
    report.mode = RecoveryMode::closed_form;
    report.seed = config.seed;
    report.dedup_radius = config.dedup_radius;
    report.verify_tol = config.verify_tol;
    report.n_equations = 2;
    for (const auto& rates : pairs) {
        RecoverySolution solution;
        solution.params = {rates[0], rates[1]};
        const std::vector<double> raw = coefficient_residuals(structure, solution.params, target);
        const std::vector<double> t = target_components(target);
        const std::vector<double> s = component_scales(t);
        double rel = 0.0;
        for (std::size_t k = 0; k < raw.size(); ++k)
            rel = std::max(rel, std::abs(raw[k]) / s[k]);
        solution.coefficient_residual = rel;
        solution.verified = rel <= config.verify_tol;
        dedup_insert(report.solutions, std::move(solution), config.dedup_radius,
                     &RecoverySolution::coefficient_residual);
    }
    for (auto& solution : report.solutions) attach_steady_state(structure, solution);
    std::sort(report.solutions.begin(), report.solutions.end(),
              [](const RecoverySolution& lhs, const RecoverySolution& rhs) {
                  return lhs.params < rhs.params;
              });
    return report;
}

} // namespace ics
