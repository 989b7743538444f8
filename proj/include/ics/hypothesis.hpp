#pragma once

// Cumulant-based tests: a hypothesized model class (classical/quantum,
// Markovian, dimension N) caps the number of independent cumulants at
// N_p = 2(M-1). The first N_p cumulants fix the characteristic polynomial,
// which predicts c_{N_p+1}; a measured value beyond threshold rejects the
// hypothesis.

#include <string>
#include <vector>

#include "ics/cumulants.hpp"
#include "ics/poly_inverse.hpp"

namespace ics {

struct Hypothesis {
    ModelKind kind = ModelKind::classical;
    int dimension = 0;
    bool markovian = true; // the hypothesized class is always generated by a Markovian generator

    int implied_M() const {
        return kind == ModelKind::classical ? dimension : dimension * dimension;
    }
    int np() const { return 2 * (implied_M() - 1); }
};

enum class Decision { reject, consistent, inconclusive };

inline const char* to_string(Decision d) {
    switch (d) {
        case Decision::reject: return "reject";
        case Decision::consistent: return "consistent";
        case Decision::inconclusive: return "inconclusive";
    }
    return "?";
}

struct Verdict {
    Decision decision = Decision::inconclusive;
    double predicted = 0.0;
    double measured = 0.0;
    double discrepancy = 0.0;
    double threshold = 0.0;
    double z_score = -1.0; // discrepancy / stderr when stderr is available
    std::string reason;
    double condition = 0.0; // reconstruction diagnostics
    int rank = 0;
};

struct DimensionScan {
    int lower_bound = 0;
    bool capped = false;     // scan stopped by the available cumulant count
    int max_testable = 0;    // largest N the cumulant count allows
    std::string annotation;  // e.g. degenerate reconstruction at the returned N
    std::vector<std::pair<int, Verdict>> trail;
};

// c_{N_p+1} under the hypothesis implied by `degree` = M, from the first
// 2(M-1) entries of c.
double predict_next_cumulant(const CumulantVector& cumulants, int degree);

// threshold <= 0 requests the default 3 * stderr of the measured c_{N_p+1}
// (requires stderr).
Verdict run_test(const CumulantVector& cumulants, const Hypothesis& hypothesis, double threshold);

DimensionScan dimension_lower_bound(const CumulantVector& cumulants, ModelKind kind,
                                    double threshold);

} // namespace ics
