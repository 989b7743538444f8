#include <doctest.h>

#include <cmath>
#include <vector>

#include "fixtures.hpp"
#include "ics/charpoly.hpp"
#include "ics/cumulants.hpp"
#include "ics/model.hpp"
#include "ics/rational.hpp"

using ics::CharPolyPair;
using ics::CumulantVector;
using ics::Rational;

namespace {

CharPolyPair pair_of(const ics::ModelSpec& spec) {
    return ics::affine_split(ics::build_generator(spec));
}

} // namespace

TEST_SUITE_BEGIN("cumulants");

TEST_CASE("enzyme cumulants are exact rationals") {
    // exact recursion over rationals, frozen against the double path
    const std::vector<Rational> a{0, 14, 7, 1};
    const std::vector<Rational> aprime{-6, 0, 0, 0};
    const auto exact = ics::cumulants_from_coeffs(a, aprime, 3);
    CHECK(exact[0] == Rational(3, 7));
    CHECK(exact[1] == Rational(12, 49));
    CHECK(exact[2] == Rational(192, 2401));

    const CumulantVector c = ics::cumulants_from_charpoly(pair_of(fixtures::enzyme()), 3);
    CHECK(c.values[0] == doctest::Approx(3.0 / 7.0).epsilon(1e-13));
    CHECK(c.values[1] == doctest::Approx(12.0 / 49.0).epsilon(1e-13));
    CHECK(c.values[2] == doctest::Approx(192.0 / 2401.0).epsilon(1e-13));
}

TEST_CASE("symmetric two-state cumulants halve order by order") {
    // lambda(xi) = e^(xi/2) - 1, so c_nu = 2^-nu
    const CumulantVector c =
        ics::cumulants_from_charpoly(pair_of(fixtures::symmetric_two_state()), 6);
    for (int nu = 1; nu <= 6; ++nu)
        CHECK(c.values[nu - 1] == doctest::Approx(std::pow(0.5, nu)).epsilon(1e-12));
}

TEST_CASE("uniform ring cumulants are powers of 1/3") {
    const CumulantVector c =
        ics::cumulants_from_charpoly(pair_of(fixtures::ring({1.0, 1.0, 1.0})), 5);
    for (int nu = 1; nu <= 5; ++nu)
        CHECK(c.values[nu - 1] == doctest::Approx(std::pow(1.0 / 3.0, nu)).epsilon(1e-12));
}

TEST_CASE("first cumulant equals the steady-state detector flux") {
    ics::CounterRng rng(2718);
    for (int trial = 0; trial < 25; ++trial) {
        const ics::ModelSpec spec = trial % 2 == 0
                                        ? fixtures::random_classical(2 + trial % 3, rng)
                                        : fixtures::random_quantum(2 + trial % 2, rng);
        const ics::DeformedGenerator gen = ics::build_generator(spec);
        const CumulantVector c = ics::cumulants_from_charpoly(ics::affine_split(gen), 1);
        const auto state = ics::steady_state(gen, spec.dimension);
        const double flux = spec.detector_rate() * state.occupations(spec.detector_from);
        CHECK(c.values[0] == doctest::Approx(flux).epsilon(1e-10));
    }
}

TEST_CASE("printed low-order h patterns") {
    // h_1 = a'_0 + a_1 c_1
    // h_2 = a'_0 + a_1 c_2 + 2 a'_1 c_1 + 2 a_2 c_1^2
    // h_3 = a'_0 + a_1 c_3 + 3 a'_1 (c_1 + c_2) + 6 a_2 c_1 c_2 + 6 a'_2 c_1^2 + 6 a_3 c_1^3
    ics::CounterRng rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> a(4), aprime(4), c(3);
        for (auto& x : a) x = rng.uniform(-2.0, 2.0);
        for (auto& x : aprime) x = rng.uniform(-2.0, 2.0);
        for (auto& x : c) x = rng.uniform(-2.0, 2.0);
        const auto h = ics::h_values(a, aprime, c, 3);
        const double h1 = aprime[0] + a[1] * c[0];
        const double h2 = aprime[0] + a[1] * c[1] + 2 * aprime[1] * c[0] + 2 * a[2] * c[0] * c[0];
        const double h3 = aprime[0] + a[1] * c[2] + 3 * aprime[1] * (c[0] + c[1]) +
                          6 * a[2] * c[0] * c[1] + 6 * aprime[2] * c[0] * c[0] +
                          6 * a[3] * c[0] * c[0] * c[0];
        CHECK(h[0] == doctest::Approx(h1).epsilon(1e-12));
        CHECK(h[1] == doctest::Approx(h2).epsilon(1e-12));
        CHECK(h[2] == doctest::Approx(h3).epsilon(1e-12));
    }
}

TEST_CASE("Fano factor") {
    CHECK(ics::fano_factor(pair_of(fixtures::enzyme())) == doctest::Approx(4.0 / 7.0));
    CHECK(ics::fano_factor(pair_of(fixtures::symmetric_two_state())) == doctest::Approx(0.5));

    // single exponential stage is Poissonian
    CharPolyPair poisson;
    poisson.degree = 2;
    poisson.a = {0.0, 1.0, 0.0};
    poisson.aprime = {-0.7, 0.0, 0.0};
    CHECK(ics::fano_factor(poisson) == doctest::Approx(1.0));

    // consistency with the recursion
    ics::CounterRng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const CharPolyPair pair = pair_of(fixtures::random_classical(3, rng));
        const CumulantVector c = ics::cumulants_from_charpoly(pair, 2);
        CHECK(ics::fano_factor(pair) ==
              doctest::Approx(c.values[1] / c.values[0]).epsilon(1e-12));
    }
}

TEST_CASE("finite-difference oracle on closed-form fixtures") {
    const auto enzyme_oracle = ics::eigenvalue_fd_oracle(
        ics::build_classical_generator(fixtures::enzyme()), 3, 0.01);
    CHECK(enzyme_oracle.values[0] == doctest::Approx(3.0 / 7.0).epsilon(1e-7));
    CHECK(enzyme_oracle.values[1] == doctest::Approx(12.0 / 49.0).epsilon(1e-7));
    CHECK(enzyme_oracle.values[2] == doctest::Approx(192.0 / 2401.0).epsilon(1e-6));

    const auto two_state_oracle = ics::eigenvalue_fd_oracle(
        ics::build_classical_generator(fixtures::symmetric_two_state()), 2, 0.01);
    CHECK(two_state_oracle.values[0] == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(two_state_oracle.values[1] == doctest::Approx(0.25).epsilon(1e-8));
}

TEST_CASE("recursion and oracle agree on random models") {
    ics::CounterRng rng(1618);
    for (int tested = 0; tested < 100; ++tested) {
        ics::ModelSpec spec;
        if (tested % 2 == 0)
            spec = fixtures::random_classical(2 + tested % 3, rng);
        else
            spec = fixtures::random_quantum(2 + tested % 2, rng);
        const ics::DeformedGenerator gen = ics::build_generator(spec);
        const CharPolyPair pair = ics::affine_split(gen);
        const CumulantVector recursion = ics::cumulants_from_charpoly(pair, 4);
        const CumulantVector oracle = ics::eigenvalue_fd_oracle(gen, 4, 0.01);
        for (int nu = 0; nu < 4; ++nu) {
            const double tol = 1e-6 * std::max(1.0, std::abs(recursion.values[nu]));
            CHECK(std::abs(recursion.values[nu] - oracle.values[nu]) <= tol);
        }
    }
}

TEST_CASE("rate rescaling rescales every cumulant") {
    const double alpha = 2.25;
    const ics::ModelSpec base = fixtures::enzyme();
    ics::ModelSpec scaled = base;
    for (auto& [key, value] : scaled.rates) value *= alpha;
    const CumulantVector c0 = ics::cumulants_from_charpoly(pair_of(base), 5);
    const CumulantVector c1 = ics::cumulants_from_charpoly(pair_of(scaled), 5);
    for (int nu = 0; nu < 5; ++nu)
        CHECK(c1.values[nu] == doctest::Approx(alpha * c0.values[nu]).epsilon(1e-12));
}

TEST_CASE("degenerate a_1 is a typed error") {
    CharPolyPair degenerate;
    degenerate.degree = 2;
    degenerate.a = {0.0, 0.0, 1.0};
    degenerate.aprime = {-1.0, 0.0, 0.0};
    try {
        static_cast<void>(ics::cumulants_from_charpoly(degenerate, 2));
        CHECK(false);
    } catch (const ics::Error& error) {
        CHECK(error.code() == ics::ErrorCode::degenerate_a1);
    }
    CHECK_THROWS_AS(static_cast<void>(ics::fano_factor(degenerate)), ics::Error);
}

TEST_CASE("oracle rejects non-simple zero eigenvalues") {
    ics::ModelSpec disconnected;
    disconnected.kind = ics::ModelKind::classical;
    disconnected.dimension = 4;
    disconnected.rates[{1, 0}] = 1.0;
    disconnected.rates[{0, 1}] = 1.0;
    disconnected.rates[{3, 2}] = 1.0;
    disconnected.rates[{2, 3}] = 1.0;
    disconnected.detector_from = 0;
    disconnected.detector_to = 1;
    try {
        static_cast<void>(
            ics::eigenvalue_fd_oracle(ics::build_classical_generator(disconnected), 2, 0.01));
        CHECK(false);
    } catch (const ics::Error& error) {
        CHECK(error.code() == ics::ErrorCode::non_simple_zero);
    }
}

TEST_SUITE_END();
