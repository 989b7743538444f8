#include "ics/hypothesis.hpp"

#include <cmath>

namespace ics {

double predict_next_cumulant(const CumulantVector& cumulants, int degree) {
    const int np = 2 * (degree - 1);
    if (cumulants.orders() < np)
        fail(ErrorCode::insufficient_cumulants,
             "prediction needs " + std::to_string(np) + " cumulants");
    CumulantVector head;
    head.values.assign(cumulants.values.begin(), cumulants.values.begin() + np);
    const Reconstruction recon = reconstruct_charpoly(head, degree);
    if (!recon.unique)
        fail(ErrorCode::non_unique_reconstruction,
             "reconstruction has " + std::to_string(recon.null_space.cols()) +
                 "-dimensional solution freedom");
    const CumulantVector forward = cumulants_from_charpoly(recon.pair, np + 1);
    return forward.values[np];
}

Verdict run_test(const CumulantVector& cumulants, const Hypothesis& hypothesis, double threshold) {
    const int np = hypothesis.np();
    if (cumulants.orders() < np + 1)
        fail(ErrorCode::insufficient_cumulants,
             "test needs " + std::to_string(np + 1) + " cumulants");

    Verdict verdict;
    verdict.measured = cumulants.values[np];

    double stderr_next = -1.0;
    if (cumulants.has_stderr() && static_cast<int>(cumulants.stderrs.size()) > np)
        stderr_next = cumulants.stderrs[np];
    if (threshold <= 0.0) {
        if (stderr_next <= 0.0)
            fail(ErrorCode::usage_error,
                 "no threshold given and no standard error on the measured cumulant");
        threshold = 3.0 * stderr_next;
    }
    verdict.threshold = threshold;

    CumulantVector head;
    head.values.assign(cumulants.values.begin(), cumulants.values.begin() + np);
    if (cumulants.has_stderr() && static_cast<int>(cumulants.stderrs.size()) >= np)
        head.stderrs.assign(cumulants.stderrs.begin(), cumulants.stderrs.begin() + np);

    try {
        const Reconstruction recon = reconstruct_charpoly(head, hypothesis.implied_M());
        verdict.condition = recon.system.condition;
        verdict.rank = recon.system.rank;
        if (!recon.unique) {
            verdict.decision = Decision::inconclusive;
            verdict.reason = "reconstruction not unique (rank " + std::to_string(recon.system.rank) +
                             " of " + std::to_string(np) + ")";
            return verdict;
        }
        const CumulantVector forward = cumulants_from_charpoly(recon.pair, np + 1);
        verdict.predicted = forward.values[np];
    } catch (const Error& error) {
        if (error.code() == ErrorCode::singular_system ||
            error.code() == ErrorCode::non_unique_reconstruction ||
            error.code() == ErrorCode::degenerate_a1) {
            verdict.decision = Decision::inconclusive;
            verdict.reason = error.what();
            return verdict;
        }
        throw;
    }

    verdict.discrepancy = std::abs(verdict.predicted - verdict.measured);
    if (stderr_next > 0.0) verdict.z_score = verdict.discrepancy / stderr_next;
    verdict.decision = verdict.discrepancy > threshold ? Decision::reject : Decision::consistent;
    if (verdict.decision == Decision::reject)
        verdict.reason = "no generator of the hypothesized class reproduces the measured cumulant";
    return verdict;
}

DimensionScan dimension_lower_bound(const CumulantVector& cumulants, ModelKind kind,
                                    double threshold) {
    DimensionScan scan;
    const auto testable = [&](int n) {
        Hypothesis h{kind, n, true};
        return cumulants.orders() >= h.np() + 1;
    };
    if (!testable(2))
        fail(ErrorCode::insufficient_cumulants, "not enough cumulants for the N = 2 test");
    scan.max_testable = 2;
    while (testable(scan.max_testable + 1)) ++scan.max_testable;

    for (int n = 2;; ++n) {
        if (!testable(n)) {
            scan.lower_bound = n;
            scan.capped = true;
            scan.annotation = "all testable dimensions rejected; bound capped by cumulant count";
            return scan;
        }
        const Verdict verdict = run_test(cumulants, Hypothesis{kind, n, true}, threshold);
        scan.trail.emplace_back(n, verdict);
        if (verdict.decision == Decision::reject) continue;
        scan.lower_bound = n;
        if (verdict.decision == Decision::inconclusive)
            scan.annotation = "inconclusive at N = " + std::to_string(n) + ": " + verdict.reason;
        return scan;
    }
}

} // namespace ics
