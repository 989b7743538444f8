#include "ics/cumulants.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

namespace ics {

namespace {

using LongComplex = std::complex<long double>;
using LongMatrix = Eigen::Matrix<LongComplex, Eigen::Dynamic, Eigen::Dynamic>;

void check_a1(const CharPolyPair& pair) {
    double scale = 0.0;
    for (double c : pair.a) scale = std::max(scale, std::abs(c));
    if (std::abs(pair.a[1]) <= 1e-12 * scale)
        fail(ErrorCode::degenerate_a1, "zero eigenvalue not simple or no current");
}

// lambda at the stencil points m * (step/2), m = -2r .. 2r, tracked
// continuously from the zero eigenvalue at xi = 0.
std::vector<long double> track_branch(const DeformedGenerator& gen, int radius, double step) {
    const int m = gen.M;
    LongMatrix base(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            base(i, j) = LongComplex(static_cast<long double>(gen.base(i, j).real()),
                                     static_cast<long double>(gen.base(i, j).imag()));

    const auto spectrum_at = [&](long double xi) {
        LongMatrix a = base;
        a(gen.jump_row, gen.jump_col) +=
            std::exp(LongComplex(xi, 0)) * static_cast<long double>(gen.jump_value);
        Eigen::ComplexEigenSolver<LongMatrix> solver(a, false);
        std::vector<LongComplex> eigs(m);
        for (int i = 0; i < m; ++i) eigs[i] = solver.eigenvalues()(i);
        return eigs;
    };

    const auto nearest = [](const std::vector<LongComplex>& eigs, LongComplex target) {
        long double best = -1.0L, second = -1.0L;
        LongComplex value{};
        for (const auto& e : eigs) {
            const long double d = std::abs(e - target);
            if (best < 0 || d < best) {
                second = best;
                best = d;
                value = e;
            } else if (second < 0 || d < second) {
                second = d;
            }
        }
        if (second >= 0 && best >= 0.5L * second)
            fail(ErrorCode::branch_tracking_failed, "eigenvalue crossing within stencil");
        return value;
    };

    const auto eigs0 = spectrum_at(0.0L);
    long double scale = 1.0L;
    for (const auto& e : eigs0) scale = std::max(scale, std::abs(e));
    int near_zero = 0;
    for (const auto& e : eigs0)
        if (std::abs(e) < 1e-9L * scale) ++near_zero;
    if (near_zero == 0) fail(ErrorCode::no_steady_state, "no zero eigenvalue at xi = 0");
    if (near_zero > 1) fail(ErrorCode::non_simple_zero, "zero eigenvalue is not simple");

    const long double half = static_cast<long double>(step) / 2.0L;
    std::vector<LongComplex> branch(4 * radius + 1);
    branch[2 * radius] = nearest(eigs0, LongComplex(0, 0));
    for (int dir : {+1, -1}) {
        LongComplex previous = branch[2 * radius];
        for (int k = 1; k <= 2 * radius; ++k) {
            const LongComplex value = nearest(spectrum_at(dir * k * half), previous);
            branch[2 * radius + dir * k] = value;
            previous = value;
        }
    }

    std::vector<long double> values(branch.size());
    for (std::size_t i = 0; i < branch.size(); ++i) values[i] = branch[i].real();
    return values;
}

// Central-difference stencil for the nu-th derivative, spacing 1, accuracy
// O(h^2): m applications of [1,-2,1] plus [-1/2,0,1/2] when nu is odd.
std::vector<long double> central_stencil(int nu) {
    std::vector<long double> w{1.0L};
    const auto convolve = [](const std::vector<long double>& a, const std::vector<long double>& b) {
        std::vector<long double> out(a.size() + b.size() - 1, 0.0L);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        return out;
    };
    for (int k = 0; k < nu / 2; ++k) w = convolve(w, {1.0L, -2.0L, 1.0L});
    if (nu % 2 == 1) w = convolve(w, {-0.5L, 0.0L, 0.5L});
    return w; // length 2*ceil(nu/2)+1, centered
}

long double apply_stencil(const std::vector<long double>& samples, int center, int spacing,
                          const std::vector<long double>& weights, long double h, int nu) {
    const int radius = (static_cast<int>(weights.size()) - 1) / 2;
    long double acc = 0.0L;
    for (int j = -radius; j <= radius; ++j)
        acc += weights[j + radius] * samples[center + j * spacing];
    return acc / std::pow(h, static_cast<long double>(nu));
}

} // namespace

CumulantVector cumulants_from_charpoly(const CharPolyPair& pair, int orders) {
    if (orders < 1) fail(ErrorCode::usage_error, "order count must be at least 1");
    if (orders > 64) fail(ErrorCode::overflow, "order count exceeds cap 64");
    check_a1(pair);
    CumulantVector out;
    out.values = cumulants_from_coeffs(pair.a, pair.aprime, orders);
    return out;
}

double fano_factor(const CharPolyPair& pair) {
    check_a1(pair);
    const double a1 = pair.a[1];
    const double a2 = pair.degree >= 2 ? pair.a[2] : 0.0;
    return 1.0 + 2.0 * pair.aprime[0] * a2 / (a1 * a1) - 2.0 * pair.aprime[1] / a1;
}

CumulantVector eigenvalue_fd_oracle(const DeformedGenerator& gen, int orders, double step) {
    if (orders < 1 || orders > 6)
        fail(ErrorCode::usage_error, "oracle supports orders 1 to 6");
    if (step < 1e-3 || step > 1e-1)
        fail(ErrorCode::usage_error, "oracle step must lie in [1e-3, 1e-1]");

    const int radius = (orders + 1) / 2;
    const std::vector<long double> samples = track_branch(gen, radius, step);
    const int center = 2 * radius;
    const long double h = static_cast<long double>(step);

    CumulantVector out;
    out.values.resize(orders);
    for (int nu = 1; nu <= orders; ++nu) {
        const std::vector<long double> weights = central_stencil(nu);
        const long double coarse = apply_stencil(samples, center, 2, weights, h, nu);
        const long double fine = apply_stencil(samples, center, 1, weights, h / 2.0L, nu);
        out.values[nu - 1] = static_cast<double>((4.0L * fine - coarse) / 3.0L);
    }
    return out;
}

} // namespace ics
