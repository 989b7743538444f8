#pragma once

// Truncated power series in the counting field xi. The truncation order is
// fixed at construction and all arithmetic is closed at that order. Cumulants
// are carried in derivative normalization c_nu = nu! * [xi^nu]; the two
// conversion helpers below are the only places factorials appear.

#include <cstddef>
#include <vector>

namespace ics {

template <typename T>
class Series {
public:
    explicit Series(int order) : coeff_(static_cast<std::size_t>(order) + 1, T{}) {}

    int order() const { return static_cast<int>(coeff_.size()) - 1; }

    T& operator[](int k) { return coeff_[static_cast<std::size_t>(k)]; }
    const T& operator[](int k) const { return coeff_[static_cast<std::size_t>(k)]; }

    Series& operator+=(const Series& rhs) {
        for (int k = 0; k <= order(); ++k) coeff_[k] += rhs[k];
        return *this;
    }
    Series& operator-=(const Series& rhs) {
        for (int k = 0; k <= order(); ++k) coeff_[k] -= rhs[k];
        return *this;
    }
    Series& operator*=(const T& scale) {
        for (auto& c : coeff_) c *= scale;
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const T& s) { return a *= s; }

    friend Series operator*(const Series& a, const Series& b) {
        Series out(a.order());
        for (int k = 0; k <= out.order(); ++k) {
            T acc{};
            for (int i = 0; i <= k; ++i) acc += a[i] * b[k - i];
            out[k] = acc;
        }
        return out;
    }

private:
    std::vector<T> coeff_;
};

// e^xi - 1 truncated at `order`: coefficients 1/k! for k >= 1.
template <typename T>
Series<T> exp_minus_one(int order) {
    Series<T> e(order);
    T term(1);
    for (int k = 1; k <= order; ++k) {
        term = term / T(k);
        e[k] = term;
    }
    return e;
}

// lambda(xi) as a series from cumulants: [xi^nu] = c_nu / nu!.
template <typename T>
Series<T> series_from_cumulants(const std::vector<T>& cumulants, int order) {
    Series<T> lam(order);
    T fact(1);
    for (int nu = 1; nu <= order; ++nu) {
        fact = fact * T(nu);
        if (nu <= static_cast<int>(cumulants.size())) lam[nu] = cumulants[nu - 1] / fact;
    }
    return lam;
}

// Inverse of the above: c_nu = nu! * [xi^nu].
template <typename T>
std::vector<T> cumulants_from_series(const Series<T>& lam, int count) {
    std::vector<T> out;
    out.reserve(count);
    T fact(1);
    for (int nu = 1; nu <= count; ++nu) {
        fact = fact * T(nu);
        out.push_back(fact * lam[nu]);
    }
    return out;
}

// P_xi evaluated on a lambda series: sum_mu (a_mu + aprime_mu (e^xi-1)) lambda^mu.
// The h functions are h_l = l! * [xi^l] of this composition.
template <typename T>
Series<T> charpoly_composed(const std::vector<T>& a, const std::vector<T>& aprime,
                            const Series<T>& lambda) {
    const int order = lambda.order();
    const Series<T> expm1 = exp_minus_one<T>(order);
    Series<T> total(order);
    Series<T> lam_pow(order);
    lam_pow[0] = T(1);
    for (std::size_t mu = 0; mu < a.size(); ++mu) {
        if (mu > 0) lam_pow = lam_pow * lambda;
        total += lam_pow * a[mu];
        total += (expm1 * lam_pow) * aprime[mu];
    }
    return total;
}

template <typename T>
std::vector<T> h_values(const std::vector<T>& a, const std::vector<T>& aprime,
                        const std::vector<T>& cumulants, int count) {
    const Series<T> lam = series_from_cumulants(cumulants, count);
    const Series<T> composed = charpoly_composed(a, aprime, lam);
    return cumulants_from_series(composed, count);
}

} // namespace ics
