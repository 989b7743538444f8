#pragma once

// Exact stochastic simulation of classical models (exponential holding times,
// jump selection proportional to rates) and cumulant estimation from window
// counts via unbiased k-statistics with batch-means standard errors.

#include <cstdint>
#include <string>
#include <vector>

#include "ics/cumulants.hpp"
#include "ics/model.hpp"

namespace ics {

struct EventTrace {
    std::string model_id; // hash of the generating model
    double total_time = 0.0;
    long long events = 0; // all monitored transitions in [0, total_time]
    std::vector<long long> window_counts;
    double burn_in = 0.0;
    double window_length = 0.0;
    std::uint64_t seed = 0;
};

struct EstimatedCumulants {
    CumulantVector cumulants; // stderr always populated
    int window_count = 0;
    double window_length = 0.0;
};

// burn_in < 0 selects the default 20 / min positive rate.
EventTrace gillespie_trajectory(const ModelSpec& spec, double total_time, std::uint64_t seed,
                                double window_length, double burn_in = -1.0);

// k-statistics of window counts, scaled by 1/T_w; orders capped at 4 because
// higher-order estimates carry useless standard errors at desk-scale sample
// sizes. Batch means over blocks of 10 windows.
EstimatedCumulants estimate_cumulants(const EventTrace& trace, int orders);

// Merge groups of `factor` consecutive windows (window counts are additive);
// the remainder is dropped. Used for finite-window bias checks.
EventTrace rewindow(const EventTrace& trace, int factor);

} // namespace ics
