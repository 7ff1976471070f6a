// Brute-force cross-validation path: expand a Dicke-basis state to the full
// 2^N product basis, evaluate the collective operators by summing per-qubit
// Pauli actions, and partial-trace to a qubit pair.  Everything here works
// from the exponential representation and touches none of the O(N)
// Dicke-basis arithmetic it is meant to check.
//
// Bitstring convention: bit k of the index belongs to qubit k; bit value 1
// is the excited (spin-up, sigma_z = +1) state, so the all-zeros bitstring
// is the collective ground state.  The two-qubit basis label |0> is spin-up,
// hence a qubit with bit b maps to label 1-b.
#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "spinsq/core.hpp"
#include "spinsq/dicke.hpp"
#include "spinsq/pairwise.hpp"
#include "spinsq/squeezing.hpp"

namespace spinsq {

inline constexpr int oracle_default_max_n = 14;

struct FullStateVector {
    int n_particles = 0;
    std::vector<Complex> amplitudes;  // length 2^N, unit norm
};

namespace detail {
inline double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / i;
    return r;
}
}  // namespace detail

/// |n> maps to the equal-phase sum over all bitstrings with n set bits,
/// weighted binom(N,n)^{-1/2}; extends linearly over amplitudes.
inline FullStateVector expand(const SymmetricState& state, int max_n = oracle_default_max_n) {
    const int n_particles = state.n_particles();
    if (n_particles > max_n)
        throw invalid_input("expand: N = " + std::to_string(n_particles) +
                            " exceeds the brute-force ceiling " + std::to_string(max_n));
    std::vector<double> weight(static_cast<size_t>(n_particles) + 1);
    for (int n = 0; n <= n_particles; ++n)
        weight[static_cast<size_t>(n)] = 1.0 / std::sqrt(detail::binomial(n_particles, n));
    FullStateVector v;
    v.n_particles = n_particles;
    v.amplitudes.resize(size_t{1} << n_particles);
    for (size_t x = 0; x < v.amplitudes.size(); ++x) {
        const int n = std::popcount(x);
        v.amplitudes[x] = state.amplitude(n) * weight[static_cast<size_t>(n)];
    }
    return v;
}

/// J_a v = (1/2) sum_k sigma_ka v by direct per-qubit action.
inline std::vector<Complex> apply_collective(const FullStateVector& v, int axis) {
    const size_t dim = v.amplitudes.size();
    std::vector<Complex> out(dim, Complex{0.0, 0.0});
    if (axis == 2) {
        for (size_t x = 0; x < dim; ++x) {
            const double mz = std::popcount(x) - 0.5 * v.n_particles;
            out[x] = mz * v.amplitudes[x];
        }
        return out;
    }
    for (int k = 0; k < v.n_particles; ++k) {
        const size_t mask = size_t{1} << k;
        if (axis == 0) {  // sigma_x: flips the bit
            for (size_t x = 0; x < dim; ++x) out[x] += 0.5 * v.amplitudes[x ^ mask];
        } else {          // sigma_y psi|_x = i (+-1) psi|_{x^mask}, sign from the source bit
            for (size_t x = 0; x < dim; ++x) {
                const double sign = ((x ^ mask) & mask) ? 1.0 : -1.0;
                out[x] += Complex{0.0, 0.5 * sign} * v.amplitudes[x ^ mask];
            }
        }
    }
    return out;
}

inline CollectiveMoments oracle_moments(const FullStateVector& v) {
    CollectiveMoments m;
    m.n_particles = v.n_particles;
    std::array<std::vector<Complex>, 3> img;
    for (int a = 0; a < 3; ++a) img[static_cast<size_t>(a)] = apply_collective(v, a);
    for (int a = 0; a < 3; ++a)
        m.j1[a] = inner(v.amplitudes, img[static_cast<size_t>(a)]).real();
    for (int a = 0; a < 3; ++a)
        for (int b = a; b < 3; ++b) {
            const double g = inner(img[static_cast<size_t>(a)], img[static_cast<size_t>(b)]).real();
            m.g[a][b] = g;
            m.g[b][a] = g;
        }
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) m.gamma[a][b] = m.g[a][b] - m.j1[a] * m.j1[b];
    return m;
}

/// Reduced density matrix of qubits (i, j) by tracing out the rest.
inline TwoQubitDensity partial_trace_pair(const FullStateVector& v, int i, int j) {
    const int n_particles = v.n_particles;
    if (i == j || i < 0 || j < 0 || i >= n_particles || j >= n_particles)
        throw invalid_input("partial_trace_pair: qubit indices must be distinct and < N");
    CMatrix rho(4);
    const size_t mi = size_t{1} << i;
    const size_t mj = size_t{1} << j;
    const size_t dim = v.amplitudes.size();
    // iterate over bitstrings of the remaining qubits, composing the pair bits
    for (size_t x = 0; x < dim; ++x) {
        if (x & (mi | mj)) continue;  // x ranges over rest-configurations only
        Complex a4[4];
        for (int bi = 0; bi < 2; ++bi)
            for (int bj = 0; bj < 2; ++bj) {
                const size_t idx = x | (bi ? mi : 0) | (bj ? mj : 0);
                // basis label |0> = spin-up = bit 1
                a4[2 * (1 - bi) + (1 - bj)] = v.amplitudes[idx];
            }
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) rho(r, c) += a4[r] * std::conj(a4[c]);
    }
    for (int i2 = 0; i2 < 4; ++i2) {
        rho(i2, i2) = Complex{rho(i2, i2).real(), 0.0};
        for (int j2 = i2 + 1; j2 < 4; ++j2) {
            const Complex h = 0.5 * (rho(i2, j2) + std::conj(rho(j2, i2)));
            rho(i2, j2) = h;
            rho(j2, i2) = std::conj(h);
        }
    }
    return TwoQubitDensity(std::move(rho));
}

struct OracleReport {
    CollectiveMoments moments;
    TwoQubitDensity rho;
    SqueezingReport squeezing;
    double concurrence = 0.0;
    double entanglement_margin = 0.0;
};

/// End-to-end recomputation through the 2^N path.
inline OracleReport oracle_report(const SymmetricState& state, int max_n = oracle_default_max_n) {
    const FullStateVector v = expand(state, max_n);
    CollectiveMoments m = oracle_moments(v);
    TwoQubitDensity rho = partial_trace_pair(v, 0, 1);
    SqueezingReport sq = analyze_squeezing(m);
    const double margin = entanglement_margin_general(rho);
    return OracleReport{m, std::move(rho), sq, std::max(0.0, margin), margin};
}

/// Haar-agnostic random symmetric state for cross-validation sweeps.  Uses
/// raw mt19937_64 output so identical seeds give identical states on any
/// standard library.
inline SymmetricState random_symmetric_state(int n_particles, std::mt19937_64& rng) {
    auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0; };
    std::vector<Complex> amps(static_cast<size_t>(n_particles) + 1);
    double nrm2 = 0.0;
    do {
        nrm2 = 0.0;
        for (Complex& c : amps) {
            c = Complex{uniform(), uniform()};
            nrm2 += std::norm(c);
        }
    } while (nrm2 < 1e-12);
    const double inv = 1.0 / std::sqrt(nrm2);
    for (Complex& c : amps) c *= inv;
    return SymmetricState::from_amplitudes(n_particles, std::move(amps));
}

}  // namespace spinsq
