#pragma once

// Forward direction: scaled cumulants of the counting statistics from a
// characteristic-polynomial pair, order by order. The xi^l coefficient of
// P_xi(lambda(xi)) is linear in the unknown c_l with slope a_1 / l!, so each
// order is solved by one division. An independent finite-difference
// eigenvalue oracle cross-checks the recursion.

#include <vector>

#include "ics/charpoly.hpp"
#include "ics/errors.hpp"
#include "ics/model.hpp"
#include "ics/power_series.hpp"

namespace ics {

struct CumulantVector {
    std::vector<double> values;  // c_1 .. c_K, scaled per unit time
    std::vector<double> stderrs; // empty for exact data

    int orders() const { return static_cast<int>(values.size()); }
    bool has_stderr() const { return !stderrs.empty(); }
};

// Generic recursion; exact when T = Rational. a and aprime are indexed by
// power of x, a.back() monic.
template <typename T>
std::vector<T> cumulants_from_coeffs(const std::vector<T>& a, const std::vector<T>& aprime,
                                     int orders) {
    if (a[1] == T(0)) fail(ErrorCode::degenerate_a1, "a_1 vanishes; recursion undefined");
    Series<T> lambda(orders);
    std::vector<T> cumulants;
    cumulants.reserve(orders);
    T factorial(1);
    for (int l = 1; l <= orders; ++l) {
        factorial = factorial * T(l);
        const Series<T> composed = charpoly_composed(a, aprime, lambda);
        lambda[l] = -composed[l] / a[1];
        cumulants.push_back(factorial * lambda[l]);
    }
    return cumulants;
}

CumulantVector cumulants_from_charpoly(const CharPolyPair& pair, int orders);

// F = c_2 / c_1 = 1 + 2 a'_0 a_2 / a_1^2 - 2 a'_1 / a_1.
double fano_factor(const CharPolyPair& pair);

// Tracks the eigenvalue branch of B + e^xi J through 0 on a symmetric stencil
// and differentiates numerically (central differences, Richardson h and h/2).
// Agreement with the recursion: ~1e-8 relative for orders 1-2, ~1e-6 for
// orders 3-4; orders 5-6 lose several more digits to roundoff.
CumulantVector eigenvalue_fd_oracle(const DeformedGenerator& gen, int orders, double step = 0.01);

} // namespace ics
