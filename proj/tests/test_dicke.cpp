#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "spinsq/dicke.hpp"
#include "spinsq/families.hpp"
#include "spinsq/oracle.hpp"
#include "spinsq/state_io.hpp"
#include "test_helpers.hpp"

using namespace spinsq;
constexpr double pi = std::numbers::pi;

TEST_CASE("state construction: shape, norm, finiteness") {
    CHECK_THROWS_AS(SymmetricState::dicke(1, 0), invalid_input);
    CHECK_THROWS_AS(SymmetricState::from_amplitudes(2, {1.0, 0.0}), invalid_input);
    CHECK_THROWS_AS(SymmetricState::from_amplitudes(2, {0.9, 0.0, 0.0}), invalid_input);
    const double nan = std::nan("");
    CHECK_THROWS_AS(SymmetricState::from_amplitudes(2, {Complex{nan, 0.0}, 0.0, 1.0}),
                    invalid_input);

    // the loose factory renormalizes inside 1e-6 and rejects outside
    const double eps = 3e-7;
    const SymmetricState fixed =
        SymmetricState::from_raw_amplitudes(2, {std::sqrt(1.0 + eps), 0.0, 0.0});
    CHECK(fixed.norm_deviation() <= 1e-14);
    CHECK_THROWS_AS(SymmetricState::from_raw_amplitudes(2, {1.1, 0.0, 0.0}), invalid_input);
}

TEST_CASE("diagonal action: J_z on Dicke states") {
    const auto low = apply_jz(SymmetricState::dicke(4, 0));
    CHECK(low[0] == Complex{-2.0, 0.0});
    for (int n = 1; n <= 4; ++n) CHECK(low[static_cast<size_t>(n)] == Complex{0.0, 0.0});

    const auto half = apply_jz(SymmetricState::dicke(4, 2));
    for (const Complex& c : half) CHECK(std::abs(c) == 0.0);
}

TEST_CASE("ladder action: boundaries and matrix elements") {
    for (int n_particles : {2, 5, 9}) {
        const auto img = apply_jminus(SymmetricState::dicke(n_particles, 0));
        for (const Complex& c : img) CHECK(std::abs(c) == 0.0);
    }
    // J+ |n> = sqrt((n+1)(N-n)) |n+1>
    const auto up = apply_jplus(SymmetricState::dicke(5, 2));
    CHECK(up[3].real() == doctest::Approx(std::sqrt(3.0 * 3.0)).epsilon(1e-15));
}

TEST_CASE("first moment of the two-component gap-2 family: m + 2 sin^2(theta)") {
    for (double theta : {0.1, 0.7, pi / 3, 2.2, 3.0}) {
        FamilySpec spec{FamilyKind::even_pair, 3, 0, 2, theta, 0.0};
        const CollectiveMoments m = moments(build(spec));
        CHECK(m.j1[2] ==
              doctest::Approx(-1.5 + 2.0 * std::sin(theta) * std::sin(theta)).epsilon(1e-13));
    }
}

TEST_CASE("two-step lowering expectation matches the closed matrix element") {
    // <J_-^2> = e^{i phi} sin(2 theta) sqrt(mu_n) / 2, and <J_+^2> is its
    // conjugate as computed through the independent raising route
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const int n_particles = 2 + static_cast<int>(rng() % 9);
        const int n = static_cast<int>(rng() % static_cast<unsigned>(n_particles - 1));
        const double theta = 0.5 * (testutil::urand(rng) + 1.0) * 3.1;
        const double phi = (testutil::urand(rng) + 1.0) * 3.1;
        FamilySpec spec{FamilyKind::even_pair, n_particles, n, 2, theta, phi};
        const SymmetricState state = build(spec);
        const auto& psi = state.amplitudes();

        const auto jm = apply_jminus(state);
        const auto jmm = apply_jminus(n_particles, jm);
        const Complex lower2 = inner(psi, jmm);
        const Complex expected = std::polar(0.5 * std::sin(2.0 * theta), phi) *
                                 std::sqrt(pair_coupling_mu(n_particles, n));
        CHECK(std::abs(lower2 - expected) <= 1e-12);

        const auto jp = apply_jplus(state);
        const auto jpp = apply_jplus(n_particles, jp);
        CHECK(std::abs(inner(psi, jpp) - std::conj(lower2)) <= 1e-12);
    }
}

TEST_CASE("ladder identity: J+J- + J-J+ + 2 J_z^2 = 2 J^2 on random states") {
    std::mt19937_64 rng(5);
    for (int n_particles : {2, 3, 6, 11}) {
        for (int trial = 0; trial < 10; ++trial) {
            const SymmetricState state = random_symmetric_state(n_particles, rng);
            const auto jm = apply_jminus(state);
            const auto jp = apply_jplus(state);
            const auto jz = apply_jz(state);
            const double value = inner(jm, jm).real() + inner(jp, jp).real() +
                                 2.0 * inner(jz, jz).real();
            const double j = 0.5 * n_particles;
            CHECK(std::abs(value - 2.0 * j * (j + 1.0)) <= 1e-10);
        }
    }
}

TEST_CASE("moments of the single-excitation N=3 state") {
    const CollectiveMoments m = moments(SymmetricState::dicke(3, 1));
    CHECK(m.j1[2] == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(m.g[0][0] == doctest::Approx(7.0 / 4.0).epsilon(1e-14));
    CHECK(m.g[1][1] == doctest::Approx(7.0 / 4.0).epsilon(1e-14));
    CHECK(m.g[2][2] == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("moments of the ground state") {
    for (int n_particles : {2, 5, 10}) {
        const CollectiveMoments m = moments(SymmetricState::dicke(n_particles, 0));
        const double nn = n_particles;
        CHECK(m.j1[2] == doctest::Approx(-nn / 2.0).epsilon(1e-14));
        CHECK(m.g[0][0] == doctest::Approx(nn / 4.0).epsilon(1e-14));
        CHECK(m.g[1][1] == doctest::Approx(nn / 4.0).epsilon(1e-14));
        CHECK(m.g[2][2] == doctest::Approx(nn * nn / 4.0).epsilon(1e-14));
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) CHECK(std::abs(m.g[a][b]) <= 1e-14);
    }
}

TEST_CASE("gap-2 family at theta = pi/3: zero mean spin, G_zz = 3/4") {
    FamilySpec spec{FamilyKind::even_pair, 3, 0, 2, pi / 3, 0.0};
    const CollectiveMoments m = moments(build(spec));
    CHECK(std::abs(m.j1[2]) <= 1e-15);
    CHECK(m.g[2][2] == doctest::Approx(0.75).epsilon(1e-14));
    // confirmed through the brute-force path
    const CollectiveMoments om = oracle_moments(expand(build(spec)));
    CHECK(std::abs(om.j1[2]) <= 1e-15);
    CHECK(om.g[2][2] == doctest::Approx(0.75).epsilon(1e-13));
}

TEST_CASE("trace identity and Hermiticity residues on random states") {
    std::mt19937_64 rng(17);
    for (int n_particles = 2; n_particles <= 12; ++n_particles) {
        for (int trial = 0; trial < 20; ++trial) {
            const SymmetricState state = random_symmetric_state(n_particles, rng);
            const CollectiveMoments m = moments(state);
            const double j = 0.5 * n_particles;
            CHECK(std::abs(m.total_j_sq() - j * (j + 1.0)) <= 1e-10);
            // Hermitian expectations must be real: imaginary residues of the
            // plain inner products stay below 1e-12
            const auto& psi = state.amplitudes();
            CHECK(std::abs(inner(psi, apply_jz(state)).imag()) <= 1e-12);
            const auto jm = apply_jminus(state);
            CHECK(std::abs(inner(jm, jm).imag()) <= 1e-12);
        }
    }
}

TEST_CASE("moment agreement with the brute-force path on random states") {
    std::mt19937_64 rng(29);
    double worst = 0.0;
    for (int n_particles = 2; n_particles <= 12; ++n_particles) {
        for (int trial = 0; trial < 20; ++trial) {
            const SymmetricState state = random_symmetric_state(n_particles, rng);
            const CollectiveMoments a = moments(state);
            const CollectiveMoments b = oracle_moments(expand(state));
            for (int i = 0; i < 3; ++i) {
                worst = std::max(worst, std::abs(a.j1[i] - b.j1[i]));
                for (int j = 0; j < 3; ++j)
                    worst = std::max(worst, std::abs(a.g[i][j] - b.g[i][j]));
            }
        }
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("mean spin direction: aligned, anti-aligned, degenerate") {
    const MeanSpin down = mean_spin_direction(moments(SymmetricState::dicke(6, 0)));
    CHECK(!down.degenerate);
    CHECK(down.direction[2] == doctest::Approx(-1.0).epsilon(1e-14));

    // gap-2 states with nonzero <J_z> point along +-z
    FamilySpec spec{FamilyKind::even_pair, 5, 1, 2, 0.4, 1.1};
    const MeanSpin axial = mean_spin_direction(moments(build(spec)));
    CHECK(!axial.degenerate);
    CHECK(std::abs(axial.direction[0]) <= 1e-12);
    CHECK(std::abs(axial.direction[1]) <= 1e-12);
    CHECK(std::abs(std::abs(axial.direction[2]) - 1.0) <= 1e-14);

    const MeanSpin half = mean_spin_direction(moments(SymmetricState::dicke(6, 3)));
    CHECK(half.degenerate);
}

TEST_CASE("state files: load, renormalize, reject, round-trip") {
    const nlohmann::json good = {{"N", 2},
                                 {"amplitudes", {{std::sqrt(0.5), 0.0}, {0.0, 0.0}, {std::sqrt(0.5), 0.0}}}};
    const SymmetricState bell = state_from_json(good);
    CHECK(bell.n_particles() == 2);
    CHECK(std::abs(bell.amplitude(0) - Complex{std::sqrt(0.5), 0.0}) <= 1e-15);

    nlohmann::json off = good;
    off["amplitudes"][0][0] = std::sqrt(0.5) * (1.0 + 2e-7);
    CHECK(state_from_json(off).norm_deviation() <= 1e-14);

    nlohmann::json bad = good;
    bad["amplitudes"][0][0] = 0.9;
    CHECK_THROWS_AS(state_from_json(bad), invalid_input);
    CHECK_THROWS_AS(state_from_json(nlohmann::json{{"N", 2}}), invalid_input);
    CHECK_THROWS_AS(state_from_json(nlohmann::json{{"N", 2}, {"amplitudes", {1.0, 0.0, 0.0}}}),
                    invalid_input);

    const nlohmann::json round = state_to_json(bell);
    const SymmetricState back = state_from_json(round);
    for (int n = 0; n <= 2; ++n) CHECK(std::abs(back.amplitude(n) - bell.amplitude(n)) <= 1e-15);
}
