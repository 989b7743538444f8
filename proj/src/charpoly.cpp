#include "ics/charpoly.hpp"

#include <algorithm>
#include <cmath>

namespace ics {

namespace {

constexpr int kMaxDegree = 64;

void check_degree(int m) {
    if (m > kMaxDegree)
        fail(ErrorCode::overflow, "generator dimension " + std::to_string(m) + " exceeds cap 64");
    if (m < 1) fail(ErrorCode::bad_dimension, "empty generator");
}

std::vector<std::complex<double>> flatten(const Eigen::MatrixXcd& a) {
    std::vector<std::complex<double>> flat(static_cast<std::size_t>(a.rows()) * a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) flat[i * a.cols() + j] = a(i, j);
    return flat;
}

std::vector<double> realize(const std::vector<std::complex<double>>& coeff) {
    double scale = 1.0;
    for (const auto& c : coeff) scale = std::max(scale, std::abs(c));
    std::vector<double> out(coeff.size());
    for (std::size_t mu = 0; mu < coeff.size(); ++mu) {
        if (std::abs(coeff[mu].imag()) > 1e-10 * scale)
            fail(ErrorCode::complex_residue,
                 "coefficient of x^" + std::to_string(mu) + " has imaginary residue " +
                     std::to_string(coeff[mu].imag()));
        out[mu] = coeff[mu].real();
    }
    return out;
}

std::vector<Rational> rational_matrix(const DeformedGenerator& gen, const Rational& s) {
    const int m = gen.M;
    std::vector<Rational> flat(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const std::complex<double> entry = gen.base(i, j);
            if (entry.imag() != 0.0)
                fail(ErrorCode::not_rational, "exact path requires a real generator");
            flat[i * m + j] = Rational::from_double_exact(entry.real());
        }
    flat[gen.jump_row * m + gen.jump_col] += s * Rational::from_double_exact(gen.jump_value);
    return flat;
}

} // namespace

std::vector<double> charpoly_at(const DeformedGenerator& gen, double s) {
    check_degree(gen.M);
    return realize(charpoly_flat(flatten(gen.at(s)), gen.M));
}

CharPolyPair affine_split(const DeformedGenerator& gen) {
    const std::vector<double> p1 = charpoly_at(gen, 1.0);
    const std::vector<double> p2 = charpoly_at(gen, 2.0);
    const std::vector<double> p3 = charpoly_at(gen, 3.0);

    CharPolyPair pair;
    pair.degree = gen.M;
    pair.a = p1;
    pair.aprime.resize(p1.size());
    for (std::size_t mu = 0; mu < p1.size(); ++mu) pair.aprime[mu] = p2[mu] - p1[mu];

    double scale = 1.0;
    for (double c : p1) scale = std::max(scale, std::abs(c));
    for (double c : pair.aprime) scale = std::max(scale, std::abs(c));

    // affinity in s is structural for a rank-one jump; verify at a third point
    for (std::size_t mu = 0; mu < p1.size(); ++mu) {
        const double predicted = pair.a[mu] + 2.0 * pair.aprime[mu];
        if (std::abs(p3[mu] - predicted) > 1e-9 * scale)
            fail(ErrorCode::affinity_violated,
                 "coefficient of x^" + std::to_string(mu) + " is not affine in e^xi");
    }

    const int m = pair.degree;
    if (std::abs(pair.a[0]) > 1e-8 * scale)
        fail(ErrorCode::affinity_violated, "constant coefficient does not vanish at xi = 0");
    if (std::abs(pair.aprime[m]) > 1e-8 * scale || std::abs(pair.aprime[m - 1]) > 1e-8 * scale)
        fail(ErrorCode::affinity_violated, "trace coefficient depends on the counting field");
    pair.a[0] = 0.0;
    pair.aprime[m] = 0.0;
    pair.aprime[m - 1] = 0.0;
    return pair;
}

std::vector<Rational> charpoly_at_exact(const DeformedGenerator& gen, const Rational& s) {
    check_degree(gen.M);
    return charpoly_flat(rational_matrix(gen, s), gen.M);
}

std::pair<std::vector<Rational>, std::vector<Rational>> affine_split_exact(
    const DeformedGenerator& gen) {
    const std::vector<Rational> p1 = charpoly_at_exact(gen, Rational(1));
    const std::vector<Rational> p2 = charpoly_at_exact(gen, Rational(2));
    const std::vector<Rational> p3 = charpoly_at_exact(gen, Rational(3));

    std::vector<Rational> a = p1;
    std::vector<Rational> aprime(p1.size());
    for (std::size_t mu = 0; mu < p1.size(); ++mu) {
        aprime[mu] = p2[mu] - p1[mu];
        if (p3[mu] != a[mu] + Rational(2) * aprime[mu])
            fail(ErrorCode::affinity_violated, "exact coefficients not affine in e^xi");
    }
    return {a, aprime};
}

std::vector<double> poly_mul(const std::vector<double>& p, const std::vector<double>& q) {
    std::vector<double> out(p.size() + q.size() - 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    return out;
}

} // namespace ics
