#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Eigenvalues>

#include "fixtures.hpp"
#include "ics/charpoly.hpp"

using ics::CharPolyPair;
using ics::DeformedGenerator;
using ics::Rational;

namespace {

double rel_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double diff = 0.0, scale = 1.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        diff = std::max(diff, std::abs(a[k] - b[k]));
        scale = std::max({scale, std::abs(a[k]), std::abs(b[k])});
    }
    return diff / scale;
}

// coherence factor of an embedded classical model: one root -(r_i + r_j)/2
// per ordered coherence pair
std::vector<double> coherence_poly(const ics::ModelSpec& spec) {
    std::vector<double> poly{1.0};
    for (int i = 0; i < spec.dimension; ++i)
        for (int j = 0; j < spec.dimension; ++j) {
            if (i == j) continue;
            poly = ics::poly_mul(poly, {0.5 * (spec.exit_rate(i) + spec.exit_rate(j)), 1.0});
        }
    return poly;
}

} // namespace

TEST_SUITE_BEGIN("charpoly");

TEST_CASE("enzyme polynomial at fixed counting field values") {
    const DeformedGenerator gen = ics::build_classical_generator(fixtures::enzyme());
    const auto at1 = ics::charpoly_at(gen, 1.0);
    CHECK(at1[3] == doctest::Approx(1.0));
    CHECK(at1[2] == doctest::Approx(7.0));
    CHECK(at1[1] == doctest::Approx(14.0));
    CHECK(at1[0] == doctest::Approx(0.0));
    const auto at0 = ics::charpoly_at(gen, 0.0);
    CHECK(at0[0] == doctest::Approx(6.0));
    CHECK(at0[1] == doctest::Approx(14.0));
}

TEST_CASE("symmetric two-state polynomial") {
    const auto coeffs =
        ics::charpoly_at(ics::build_classical_generator(fixtures::symmetric_two_state()), 1.0);
    CHECK(coeffs[2] == doctest::Approx(1.0));
    CHECK(coeffs[1] == doctest::Approx(2.0));
    CHECK(coeffs[0] == doctest::Approx(0.0));
}

TEST_CASE("affine split of the enzyme generator") {
    const CharPolyPair pair =
        ics::affine_split(ics::build_classical_generator(fixtures::enzyme()));
    CHECK(pair.degree == 3);
    CHECK(pair.a[0] == 0.0);
    CHECK(pair.a[1] == doctest::Approx(14.0));
    CHECK(pair.a[2] == doctest::Approx(7.0));
    CHECK(pair.a[3] == doctest::Approx(1.0));
    CHECK(pair.aprime[0] == doctest::Approx(-6.0));
    CHECK(pair.aprime[1] == doctest::Approx(0.0));
    CHECK(pair.aprime[2] == 0.0);
    CHECK(pair.aprime[3] == 0.0);
}

TEST_CASE("affine split of a general two-state model") {
    ics::CounterRng rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        const double k21 = rng.uniform(0.2, 4.0);
        const double k12 = rng.uniform(0.2, 4.0);
        const CharPolyPair pair =
            ics::affine_split(ics::build_classical_generator(fixtures::two_state(k21, k12)));
        CHECK(pair.a[1] == doctest::Approx(k21 + k12).epsilon(1e-12));
        CHECK(pair.aprime[0] == doctest::Approx(-k21 * k12).epsilon(1e-12));
        CHECK(pair.aprime[1] == 0.0);
    }
}

TEST_CASE("uniform ring splits into binomial coefficients") {
    const CharPolyPair pair =
        ics::affine_split(ics::build_classical_generator(fixtures::ring({1.0, 1.0, 1.0})));
    CHECK(pair.a[1] == doctest::Approx(3.0));
    CHECK(pair.a[2] == doctest::Approx(3.0));
    CHECK(pair.aprime[0] == doctest::Approx(-1.0));
    CHECK(pair.aprime[1] == doctest::Approx(0.0));
}

TEST_CASE("trace identity") {
    ics::CounterRng rng(1234);
    for (int trial = 0; trial < 20; ++trial) {
        const ics::ModelSpec spec = trial % 2 == 0 ? fixtures::random_classical(2 + trial % 3, rng)
                                                   : fixtures::random_quantum(2 + trial % 2, rng);
        const DeformedGenerator gen = ics::build_generator(spec);
        const CharPolyPair pair = ics::affine_split(gen);
        const double trace = gen.full().trace().real();
        CHECK(pair.a[pair.degree - 1] ==
              doctest::Approx(-trace).epsilon(1e-12));
    }

    // for classical models the trace coefficient is the total rate
    const CharPolyPair enzyme_pair =
        ics::affine_split(ics::build_classical_generator(fixtures::enzyme()));
    CHECK(enzyme_pair.a[2] == doctest::Approx(7.0).epsilon(1e-14));
}

TEST_CASE("ring polynomial is invariant under rate permutations") {
    ics::CounterRng rng(99);
    std::vector<double> rates{rng.uniform(0.3, 3.0), rng.uniform(0.3, 3.0), rng.uniform(0.3, 3.0),
                              rng.uniform(0.3, 3.0)};
    std::sort(rates.begin(), rates.end());
    const CharPolyPair reference =
        ics::affine_split(ics::build_classical_generator(fixtures::ring(rates)));
    int permutations = 0;
    do {
        const CharPolyPair pair =
            ics::affine_split(ics::build_classical_generator(fixtures::ring(rates)));
        CHECK(rel_diff(pair.a, reference.a) <= 1e-12);
        CHECK(rel_diff(pair.aprime, reference.aprime) <= 1e-12);
        ++permutations;
    } while (std::next_permutation(rates.begin(), rates.end()));
    CHECK(permutations == 24);
}

TEST_CASE("embedding factorizes the polynomial") {
    const auto check_factorization = [](const ics::ModelSpec& spec) {
        const CharPolyPair classical =
            ics::affine_split(ics::build_classical_generator(spec));
        const CharPolyPair quantum =
            ics::affine_split(ics::build_quantum_generator(ics::embed_classical(spec)));
        const std::vector<double> coh = coherence_poly(spec);
        const std::vector<double> a_expected = ics::poly_mul(classical.a, coh);
        const std::vector<double> ap_expected = ics::poly_mul(classical.aprime, coh);
        CHECK(rel_diff(quantum.a, a_expected) <= 1e-10);
        CHECK(rel_diff(quantum.aprime, ap_expected) <= 1e-10);
    };

    check_factorization(fixtures::enzyme());

    // for the enzyme embedding the coherence factor is (x+2)^4 (x+3)^2
    const std::vector<double> coh = coherence_poly(fixtures::enzyme());
    std::vector<double> expected{1.0};
    for (int k = 0; k < 4; ++k) expected = ics::poly_mul(expected, {2.0, 1.0});
    for (int k = 0; k < 2; ++k) expected = ics::poly_mul(expected, {3.0, 1.0});
    CHECK(rel_diff(coh, expected) <= 1e-12);

    ics::CounterRng rng(5150);
    for (int trial = 0; trial < 20; ++trial)
        check_factorization(fixtures::random_classical(2 + trial % 3, rng));
}

TEST_CASE("polynomial vanishes on the spectrum") {
    ics::CounterRng rng(321);
    for (int trial = 0; trial < 10; ++trial) {
        const ics::ModelSpec spec = trial % 2 == 0 ? fixtures::random_classical(2 + trial % 3, rng)
                                                   : fixtures::random_quantum(2 + trial % 2, rng);
        const DeformedGenerator gen = ics::build_generator(spec);
        const double s = rng.uniform(0.5, 2.0);
        const auto coeffs = ics::charpoly_at(gen, s);
        double norm = 0.0;
        for (double c : coeffs) norm += std::abs(c);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(gen.at(s), false);
        for (int k = 0; k < gen.M; ++k) {
            const std::complex<double> x = solver.eigenvalues()(k);
            std::complex<double> value(0.0, 0.0);
            for (int mu = gen.M; mu >= 0; --mu) value = value * x + coeffs[mu];
            CHECK(std::abs(value) <= 1e-8 * norm);
        }
    }
}

TEST_CASE("atom coefficients match their closed forms") {
    const double k21 = 5, k13 = 4, o32 = 3, o21 = 2, o31 = 1;
    const CharPolyPair pair =
        ics::affine_split(ics::build_quantum_generator(fixtures::lambda_atom()));
    CHECK(pair.a[8] == doctest::Approx(3 * (k13 + k21)).epsilon(1e-12));
    CHECK(pair.a[7] ==
          doctest::Approx(3.5 * (k21 * k21 + k13 * k13) + 8.5 * k13 * k21 +
                          1.5 * (o31 * o31 + o32 * o32 + o21 * o21))
              .epsilon(1e-12));
    CHECK(pair.a[6] == doctest::Approx(4.0 * (k21 * o32 * o32 + k13 * o21 * o21) +
                                       (37.0 / 4.0) * (k21 * k13 * k13 + k13 * k21 * k21) +
                                       (13.0 / 4.0) * (k21 * o31 * o31 + k13 * o32 * o32) +
                                       2.0 * (k13 * k13 * k13 + k21 * k21 * k21) +
                                       (11.0 / 4.0) * (k21 * o21 * o21 + k13 * o31 * o31))
                           .epsilon(1e-12));
    CHECK(pair.aprime[6] == doctest::Approx(-0.5 * k21 * o21 * o21).epsilon(1e-12));
    CHECK(pair.aprime[5] == doctest::Approx(-1.5 * k13 * k21 * o21 * o21 -
                                            0.5 * k13 * k21 * o32 * o32 -
                                            0.75 * k21 * k21 * o21 * o21)
                                .epsilon(1e-12));
}

TEST_CASE("exact rational path") {
    const auto [a, aprime] =
        ics::affine_split_exact(ics::build_classical_generator(fixtures::enzyme()));
    CHECK(a[0] == Rational(0));
    CHECK(a[1] == Rational(14));
    CHECK(a[2] == Rational(7));
    CHECK(a[3] == Rational(1));
    CHECK(aprime[0] == Rational(-6));
    CHECK(aprime[1] == Rational(0));
    CHECK(aprime[2] == Rational(0));
    CHECK(aprime[3] == Rational(0));

    // the embedded generator has half-integer entries and stays exact
    const auto [qa, qap] = ics::affine_split_exact(
        ics::build_quantum_generator(ics::embed_classical(fixtures::enzyme())));
    CHECK(qa[9] == Rational(1));
    CHECK(qa[8] == Rational(7 + 2 + 2 + 2 + 2 + 3 + 3)); // total trace
    // product structure: P^cl * (x+2)^4 (x+3)^2 has constant term 0 and
    // aprime constant term -6 * 2^4 * 3^2
    CHECK(qa[0] == Rational(0));
    CHECK(qap[0] == Rational(-6 * 16 * 9));
}

TEST_CASE("dyadic conversion is exact") {
    CHECK(Rational::from_double_exact(0.5) == Rational(1, 2));
    CHECK(Rational::from_double_exact(-2.75) == Rational(-11, 4));
    CHECK(Rational::from_double_exact(3.0) == Rational(3));
    // the double nearest to 1/3 is a dyadic with a 2^54 denominator
    const Rational third = Rational::from_double_exact(1.0 / 3.0);
    CHECK(third.den() == (1LL << 54));
}

TEST_CASE("dimension cap") {
    DeformedGenerator gen;
    gen.M = 65;
    gen.base = Eigen::MatrixXcd::Zero(65, 65);
    gen.jump_row = 1;
    gen.jump_col = 0;
    gen.jump_value = 1.0;
    CHECK_THROWS_AS(static_cast<void>(ics::charpoly_at(gen, 1.0)), ics::Error);
}

TEST_SUITE_END();
