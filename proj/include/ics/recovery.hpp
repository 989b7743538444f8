#pragma once

// Recovery of structured generator parameters. The coefficient conditions
// a_mu(theta) = target_a_mu, a'_mu(theta) = target_a'_mu form a polynomial
// system; it is solved by damped least squares from many random starts, and
// every converged point is verified against the full set of conditions.
// Cumulant matching covers the rank-deficient embedded-classical case.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ics/charpoly.hpp"
#include "ics/cumulants.hpp"
#include "ics/model.hpp"

namespace ics {

struct Unknown {
    enum class Kind { rate, coupling };
    Kind kind = Kind::rate;
    // rate: transition from -> to; coupling: H(i,j) = H(j,i) = theta / 2
    // (symmetric real coupling in angular-frequency convention)
    int to = -1;
    int from = -1;

    std::string label() const;
};

struct ParameterStructure {
    ModelSpec base;
    std::vector<Unknown> unknowns;

    int implied_M() const {
        return base.kind == ModelKind::classical ? base.dimension
                                                 : base.dimension * base.dimension;
    }
    ModelSpec instantiate(const std::vector<double>& theta) const;
};

enum class RecoveryMode { closed_form, coefficient_match, cumulant_match };

inline const char* to_string(RecoveryMode mode) {
    switch (mode) {
        case RecoveryMode::closed_form: return "closed-form";
        case RecoveryMode::coefficient_match: return "coefficient-match";
        case RecoveryMode::cumulant_match: return "cumulant-match";
    }
    return "?";
}

struct RecoveryConfig {
    int starts = 512;
    std::uint64_t seed = 0;
    int max_iterations = 200;
    double converge_tol = 1e-10;   // scaled residual, inf norm
    double verify_tol = 1e-8;      // relative residual over the full condition set
    double dedup_radius = 1e-6;    // relative, max norm
    double cross_check_tol = 1e-6; // classical-block check in cumulant mode
    int threads = 0;               // 0 = hardware concurrency
};

struct RecoverySolution {
    std::vector<double> params;
    double coefficient_residual = 0.0; // relative, against the full coefficient set
    double cumulant_residual = 0.0;    // relative, cumulant mode only
    bool verified = false;
    std::vector<double> steady_occupations; // disambiguation aid; empty on failure
};

struct RecoveryReport {
    RecoveryMode mode = RecoveryMode::coefficient_match;
    std::vector<RecoverySolution> solutions;  // verified, deduplicated
    std::vector<RecoverySolution> unverified; // converged but failing full verification
    int n_starts = 0;
    int n_converged = 0;
    std::uint64_t seed = 0;
    double dedup_radius = 0.0;
    double verify_tol = 0.0;
    double converge_tol = 0.0;
    int jacobian_rank = 0;
    int n_equations = 0;
    std::vector<std::string> selected_equations;
};

// kappa_pm = (c1^2 +- c1^(3/2) sqrt(2 c2 - c1)) / (c1 - c2); both orderings
// returned. Real positive solutions exist only for c1 > c2 >= c1/2.
std::vector<std::array<double, 2>> two_state_closed_form(double c1, double c2);

// Residuals (a_1..a_{M-1}, a'_0..a'_{M-2}) of the instantiated structure
// against the target pair, unscaled.
std::vector<double> coefficient_residuals(const ParameterStructure& structure,
                                          const std::vector<double>& theta,
                                          const CharPolyPair& target);

RecoveryReport recover_multistart(const ParameterStructure& structure, const CharPolyPair& target,
                                  const RecoveryConfig& config);

RecoveryReport cumulant_match_recover(const ParameterStructure& structure,
                                      const CumulantVector& cumulants,
                                      const RecoveryConfig& config);

// Closed-form two-state recovery wrapped in the common report shape.
RecoveryReport recover_two_state(double c1, double c2, const RecoveryConfig& config);

} // namespace ics
