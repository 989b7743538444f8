#include "ics/trajectory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "ics/io.hpp"
#include "ics/rng.hpp"

namespace ics {

namespace {

struct JumpTable {
    // per state: cumulative rates and jump targets
    std::vector<std::vector<double>> cumulative;
    std::vector<std::vector<int>> targets;
    std::vector<double> exit;
};

JumpTable build_jump_table(const ModelSpec& spec) {
    JumpTable table;
    const int n = spec.dimension;
    table.cumulative.resize(n);
    table.targets.resize(n);
    table.exit.assign(n, 0.0);
    for (int from = 0; from < n; ++from) {
        double running = 0.0;
        for (int to = 0; to < n; ++to) {
            const double kappa = spec.rate(to, from);
            if (kappa <= 0.0) continue;
            running += kappa;
            table.cumulative[from].push_back(running);
            table.targets[from].push_back(to);
        }
        table.exit[from] = running;
    }
    return table;
}

double min_positive_rate(const ModelSpec& spec) {
    double lo = std::numeric_limits<double>::infinity();
    for (const auto& [key, value] : spec.rates)
        if (value > 0.0) lo = std::min(lo, value);
    return lo;
}

// central sample moments m_r = (1/n) sum (x - mean)^r
std::array<double, 5> central_moments(const long long* data, int count) {
    double mean = 0.0;
    for (int i = 0; i < count; ++i) mean += static_cast<double>(data[i]);
    mean /= count;
    std::array<double, 5> m{};
    for (int i = 0; i < count; ++i) {
        const double d = static_cast<double>(data[i]) - mean;
        const double d2 = d * d;
        m[2] += d2;
        m[3] += d2 * d;
        m[4] += d2 * d2;
    }
    m[1] = mean;
    m[2] /= count;
    m[3] /= count;
    m[4] /= count;
    return m;
}

// unbiased k-statistics for orders 1..4
std::array<double, 4> k_statistics(const long long* data, int count) {
    const auto m = central_moments(data, count);
    const double n = count;
    std::array<double, 4> k{};
    k[0] = m[1];
    k[1] = n / (n - 1.0) * m[2];
    k[2] = n * n / ((n - 1.0) * (n - 2.0)) * m[3];
    k[3] = n * n * ((n + 1.0) * m[4] - 3.0 * (n - 1.0) * m[2] * m[2]) /
           ((n - 1.0) * (n - 2.0) * (n - 3.0));
    return k;
}

} // namespace

EventTrace gillespie_trajectory(const ModelSpec& spec, double total_time, std::uint64_t seed,
                                double window_length, double burn_in) {
    spec.validate();
    if (spec.kind != ModelKind::classical)
        fail(ErrorCode::usage_error, "the simulator covers classical models only");
    if (window_length <= 0.0) fail(ErrorCode::usage_error, "window length must be positive");
    if (burn_in < 0.0) burn_in = 20.0 / min_positive_rate(spec);
    if (total_time <= burn_in + window_length)
        fail(ErrorCode::usage_error, "total time must exceed burn-in plus one window");

    const JumpTable table = build_jump_table(spec);
    const int window_total = static_cast<int>((total_time - burn_in) / window_length);

    EventTrace trace;
    trace.model_id = model_hash(spec);
    trace.total_time = total_time;
    trace.burn_in = burn_in;
    trace.window_length = window_length;
    trace.seed = seed;
    trace.window_counts.assign(window_total, 0);

    CounterRng rng(seed);
    int state = 0;
    double t = 0.0;
    while (true) {
        const double exit = table.exit[state];
        if (exit <= 0.0)
            fail(ErrorCode::absorbing_state,
                 "state " + std::to_string(state + 1) + " has no outgoing rate");
        t += rng.exponential(exit);
        if (t > total_time) break;
        const double pick = rng.uniform() * exit;
        const auto& cumulative = table.cumulative[state];
        std::size_t choice = 0;
        while (choice + 1 < cumulative.size() && pick > cumulative[choice]) ++choice;
        const int next = table.targets[state][choice];
        if (state == spec.detector_from && next == spec.detector_to) {
            ++trace.events;
            if (t > burn_in) {
                const auto w = static_cast<long long>((t - burn_in) / window_length);
                if (w < window_total) ++trace.window_counts[w];
            }
        }
        state = next;
    }
    return trace;
}

EstimatedCumulants estimate_cumulants(const EventTrace& trace, int orders) {
    if (orders < 1 || orders > 4)
        fail(ErrorCode::usage_error, "estimator supports orders 1 to 4");
    const int windows = static_cast<int>(trace.window_counts.size());
    if (windows < 30)
        fail(ErrorCode::too_few_windows,
             std::to_string(windows) + " windows; at least 30 required");

    const auto full = k_statistics(trace.window_counts.data(), windows);

    constexpr int kBlock = 10;
    const int blocks = windows / kBlock;
    std::vector<std::array<double, 4>> block_stats(blocks);
    for (int b = 0; b < blocks; ++b)
        block_stats[b] = k_statistics(trace.window_counts.data() + b * kBlock, kBlock);

    EstimatedCumulants out;
    out.window_count = windows;
    out.window_length = trace.window_length;
    out.cumulants.values.resize(orders);
    out.cumulants.stderrs.resize(orders);
    for (int nu = 0; nu < orders; ++nu) {
        out.cumulants.values[nu] = full[nu] / trace.window_length;
        double mean = 0.0;
        for (const auto& s : block_stats) mean += s[nu];
        mean /= blocks;
        double var = 0.0;
        for (const auto& s : block_stats) var += (s[nu] - mean) * (s[nu] - mean);
        var /= (blocks - 1);
        out.cumulants.stderrs[nu] = std::sqrt(var / blocks) / trace.window_length;
    }
    return out;
}

EventTrace rewindow(const EventTrace& trace, int factor) {
    if (factor < 1) fail(ErrorCode::usage_error, "window merge factor must be positive");
    EventTrace out = trace;
    out.window_length = trace.window_length * factor;
    out.window_counts.clear();
    const int merged = static_cast<int>(trace.window_counts.size()) / factor;
    out.window_counts.reserve(merged);
    for (int w = 0; w < merged; ++w) {
        long long sum = 0;
        for (int k = 0; k < factor; ++k) sum += trace.window_counts[w * factor + k];
        out.window_counts.push_back(sum);
    }
    return out;
}

} // namespace ics
