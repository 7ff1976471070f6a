#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "spinsq/dicke.hpp"
#include "spinsq/families.hpp"
#include "spinsq/oracle.hpp"
#include "test_helpers.hpp"

using namespace spinsq;
constexpr double pi = std::numbers::pi;

TEST_CASE("expand: canonical small cases") {
    const FullStateVector ground = expand(SymmetricState::dicke(2, 0));
    CHECK(ground.amplitudes[0b00] == Complex{1.0, 0.0});
    for (size_t x = 1; x < 4; ++x) CHECK(std::abs(ground.amplitudes[x]) == 0.0);

    const FullStateVector one = expand(SymmetricState::dicke(2, 1));
    const double r = std::sqrt(0.5);
    CHECK(std::abs(one.amplitudes[0b01] - r) <= 1e-15);
    CHECK(std::abs(one.amplitudes[0b10] - r) <= 1e-15);
    CHECK(std::abs(one.amplitudes[0b00]) == 0.0);
    CHECK(std::abs(one.amplitudes[0b11]) == 0.0);
}

TEST_CASE("expand: isometry on random states") {
    std::mt19937_64 rng(61);
    for (int n_particles : {2, 5, 9, 12}) {
        const SymmetricState a = random_symmetric_state(n_particles, rng);
        const SymmetricState b = random_symmetric_state(n_particles, rng);
        const FullStateVector va = expand(a);
        const FullStateVector vb = expand(b);
        CHECK(std::abs(inner(va.amplitudes, va.amplitudes).real() - 1.0) <= 1e-12);
        const Complex dicke_inner = inner(a.amplitudes(), b.amplitudes());
        CHECK(std::abs(inner(va.amplitudes, vb.amplitudes) - dicke_inner) <= 1e-12);
    }
}

TEST_CASE("expand: resource ceiling") {
    CHECK_THROWS_AS(expand(SymmetricState::dicke(15, 0)), invalid_input);
    CHECK_THROWS_AS(expand(SymmetricState::dicke(11, 0), 10), invalid_input);
    CHECK_NOTHROW(expand(SymmetricState::dicke(11, 0), 11));
}

TEST_CASE("brute-force moments: known values and the multiplet identity") {
    const CollectiveMoments w = oracle_moments(expand(SymmetricState::dicke(3, 1)));
    CHECK(w.j1[2] == doctest::Approx(-0.5).epsilon(1e-14));

    for (int n_particles : {2, 6, 10}) {
        const CollectiveMoments g = oracle_moments(expand(SymmetricState::dicke(n_particles, 0)));
        CHECK(g.g[2][2] == doctest::Approx(n_particles * n_particles / 4.0).epsilon(1e-13));
    }

    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 30; ++trial) {
        const int n_particles = 2 + static_cast<int>(rng() % 11);
        const CollectiveMoments m =
            oracle_moments(expand(random_symmetric_state(n_particles, rng)));
        const double j = 0.5 * n_particles;
        CHECK(std::abs(m.total_j_sq() - j * (j + 1.0)) <= 1e-10);
    }
}

TEST_CASE("partial trace: projector of the maximal two-qubit superposition") {
    const SymmetricState bell = build(FamilySpec{FamilyKind::even_pair, 2, 0, 2, pi / 4, 0.0});
    const TwoQubitDensity rho = partial_trace_pair(expand(bell), 0, 1);
    // (|00> + |11>)/sqrt(2) projector in the excited-first basis
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const double expected = ((i == 0 || i == 3) && (j == 0 || j == 3)) ? 0.5 : 0.0;
            CHECK(std::abs(rho.matrix()(i, j) - expected) <= 1e-14);
        }
}

TEST_CASE("partial trace: one-excitation N=3 pattern, for every qubit pair") {
    const FullStateVector v = expand(SymmetricState::dicke(3, 1));
    const double third = 1.0 / 3.0;
    const double expected[4][4] = {{0.0, 0.0, 0.0, 0.0},
                                   {0.0, third, third, 0.0},
                                   {0.0, third, third, 0.0},
                                   {0.0, 0.0, 0.0, third}};
    const int pairs[3][2] = {{0, 1}, {0, 2}, {2, 1}};
    for (const auto& pq : pairs) {
        const TwoQubitDensity rho = partial_trace_pair(v, pq[0], pq[1]);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) CHECK(std::abs(rho.matrix()(i, j) - expected[i][j]) <= 1e-14);
    }
}

TEST_CASE("partial trace: pair independence on random symmetric states") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        const int n_particles = 4 + static_cast<int>(rng() % 6);
        const FullStateVector v = expand(random_symmetric_state(n_particles, rng));
        const TwoQubitDensity base = partial_trace_pair(v, 0, 1);
        for (int i = 0; i < n_particles; ++i)
            for (int j = 0; j < n_particles; ++j) {
                if (i == j) continue;
                CHECK(max_abs_diff(partial_trace_pair(v, i, j).matrix(), base.matrix()) <= 1e-12);
            }
    }
}

TEST_CASE("partial trace: index validation") {
    const FullStateVector v = expand(SymmetricState::dicke(4, 2));
    CHECK_THROWS_AS(partial_trace_pair(v, 1, 1), invalid_input);
    CHECK_THROWS_AS(partial_trace_pair(v, 0, 4), invalid_input);
    CHECK_THROWS_AS(partial_trace_pair(v, -1, 2), invalid_input);
}

TEST_CASE("end-to-end brute-force report: reference states") {
    const OracleReport w = oracle_report(SymmetricState::dicke(3, 1));
    CHECK(w.squeezing.xi_s2 == doctest::Approx(7.0 / 3.0).epsilon(1e-12));
    CHECK(w.squeezing.xi_t2 == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
    CHECK(w.concurrence == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

    const OracleReport ground = oracle_report(SymmetricState::dicke(5, 0));
    CHECK(ground.squeezing.xi_s2 == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(ground.squeezing.varsigma2 == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(ground.squeezing.xi_t2 == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(ground.concurrence == 0.0);

    const OracleReport crossing =
        oracle_report(build(FamilySpec{FamilyKind::even_pair, 3, 0, 2, pi / 3, 0.0}));
    CHECK(crossing.squeezing.xi_s2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(crossing.squeezing.varsigma2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(crossing.concurrence <= 1e-12);
}

TEST_CASE("deterministic random states: same seed, same state") {
    std::mt19937_64 a(99), b(99);
    for (int trial = 0; trial < 5; ++trial) {
        const SymmetricState sa = random_symmetric_state(7, a);
        const SymmetricState sb = random_symmetric_state(7, b);
        for (int n = 0; n <= 7; ++n) CHECK(sa.amplitude(n) == sb.amplitude(n));
    }
}
