#pragma once

// Characteristic polynomials of deformed generators. Because the jump part is
// rank one, every coefficient of det(xI - (B + sJ)) is affine in s; the pair
// (a, aprime) with P_xi(x) = sum_mu (a_mu + aprime_mu (e^xi - 1)) x^mu fully
// parametrizes the polynomial near xi = 0.

#include <complex>
#include <type_traits>
#include <utility>
#include <vector>

#include "ics/model.hpp"
#include "ics/rational.hpp"

namespace ics {

struct CharPolyPair {
    int degree = 0;
    std::vector<double> a;      // a[mu] multiplies x^mu; a[degree] = 1, a[0] = 0
    std::vector<double> aprime; // aprime[degree] = aprime[degree-1] = 0

    std::vector<double> coeffs_at(double s) const {
        std::vector<double> out(a.size());
        for (std::size_t mu = 0; mu < a.size(); ++mu) out[mu] = a[mu] + (s - 1.0) * aprime[mu];
        return out;
    }
};

// Monic coefficients (index = power of x) of det(xI - (B + sJ)).
std::vector<double> charpoly_at(const DeformedGenerator& gen, double s);

CharPolyPair affine_split(const DeformedGenerator& gen);

// Exact path over rationals; requires real generator entries that are small
// dyadic rationals (integer and half-integer fixtures qualify).
std::vector<Rational> charpoly_at_exact(const DeformedGenerator& gen, const Rational& s);
std::pair<std::vector<Rational>, std::vector<Rational>> affine_split_exact(const DeformedGenerator& gen);

// Plain coefficient-vector convolution (index = power of x).
std::vector<double> poly_mul(const std::vector<double>& p, const std::vector<double>& q);

namespace detail {

template <typename T>
inline constexpr bool is_compensatable_v =
    std::is_floating_point_v<T> || std::is_same_v<T, std::complex<float>> ||
    std::is_same_v<T, std::complex<double>> || std::is_same_v<T, std::complex<long double>>;

} // namespace detail

// Faddeev-LeVerrier on a flat row-major M x M matrix; returns monic
// coefficients [0..M] of det(xI - A). Trace accumulations are Kahan
// compensated for floating-point scalars.
template <typename Scalar>
std::vector<Scalar> charpoly_flat(const std::vector<Scalar>& matrix, int size) {
    const int m = size;
    std::vector<Scalar> coeff(static_cast<std::size_t>(m) + 1, Scalar(0));
    coeff[m] = Scalar(1);

    std::vector<Scalar> b(static_cast<std::size_t>(m) * m, Scalar(0)); // B_0 = I
    for (int i = 0; i < m; ++i) b[i * m + i] = Scalar(1);
    std::vector<Scalar> ab(b.size());

    for (int k = 1; k <= m; ++k) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                Scalar acc{};
                for (int l = 0; l < m; ++l) acc += matrix[i * m + l] * b[l * m + j];
                ab[i * m + j] = acc;
            }
        Scalar trace{};
        if constexpr (detail::is_compensatable_v<Scalar>) {
            Scalar comp{};
            for (int i = 0; i < m; ++i) {
                const Scalar y = ab[i * m + i] - comp;
                const Scalar t = trace + y;
                comp = (t - trace) - y;
                trace = t;
            }
        } else {
            for (int i = 0; i < m; ++i) trace += ab[i * m + i];
        }
        coeff[m - k] = -trace / Scalar(k);
        if (k < m) {
            b = ab;
            for (int i = 0; i < m; ++i) b[i * m + i] += coeff[m - k];
        }
    }
    return coeff;
}

} // namespace ics
