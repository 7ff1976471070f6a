// Symmetric N-qubit states in the Dicke basis |n>, n = 0..N counting excited
// spins, plus the collective angular-momentum moments computed from O(N)
// ladder-operator applications.  The ground state |0> is the J_z = -N/2
// eigenstate; the state never leaves the maximal multiplet j = N/2.
#pragma once

#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spinsq/core.hpp"

namespace spinsq {

class SymmetricState {
  public:
    /// Amplitudes must already be normalized (sum |c|^2 = 1 within 1e-12).
    static SymmetricState from_amplitudes(int n_particles, std::vector<Complex> amplitudes) {
        validate_shape(n_particles, amplitudes);
        const double nrm2 = norm_sq(amplitudes);
        if (std::abs(nrm2 - 1.0) > tol::state_norm)
            throw invalid_input("SymmetricState: amplitudes are not normalized (|1 - norm^2| = " +
                                std::to_string(std::abs(nrm2 - 1.0)) + ")");
        return SymmetricState(n_particles, std::move(amplitudes));
    }

    /// File-loading path: renormalizes when the norm is off by at most 1e-6,
    /// rejects anything worse.
    static SymmetricState from_raw_amplitudes(int n_particles, std::vector<Complex> amplitudes) {
        validate_shape(n_particles, amplitudes);
        const double nrm2 = norm_sq(amplitudes);
        if (std::abs(nrm2 - 1.0) > tol::state_norm_file)
            throw invalid_input("SymmetricState: norm deviates from 1 by " +
                                std::to_string(std::abs(nrm2 - 1.0)) + " (limit 1e-6)");
        const double inv = 1.0 / std::sqrt(nrm2);
        for (Complex& c : amplitudes) c *= inv;
        return SymmetricState(n_particles, std::move(amplitudes));
    }

    /// The Dicke basis state |n> with n excited spins.
    static SymmetricState dicke(int n_particles, int n) {
        if (n_particles < 2) throw invalid_input("SymmetricState: need at least 2 particles");
        if (n < 0 || n > n_particles)
            throw invalid_input("SymmetricState: excitation number out of range");
        std::vector<Complex> amps(static_cast<size_t>(n_particles) + 1, Complex{0.0, 0.0});
        amps[static_cast<size_t>(n)] = 1.0;
        return SymmetricState(n_particles, std::move(amps));
    }

    int n_particles() const { return n_; }
    const std::vector<Complex>& amplitudes() const { return amps_; }
    Complex amplitude(int n) const { return amps_[static_cast<size_t>(n)]; }

    double norm_deviation() const { return std::abs(norm_sq(amps_) - 1.0); }

  private:
    SymmetricState(int n_particles, std::vector<Complex> amplitudes)
        : n_(n_particles), amps_(std::move(amplitudes)) {}

    static void validate_shape(int n_particles, const std::vector<Complex>& amplitudes) {
        if (n_particles < 2) throw invalid_input("SymmetricState: need at least 2 particles");
        if (amplitudes.size() != static_cast<size_t>(n_particles) + 1)
            throw invalid_input("SymmetricState: expected " + std::to_string(n_particles + 1) +
                                " amplitudes, got " + std::to_string(amplitudes.size()));
        for (const Complex& c : amplitudes)
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
                throw invalid_input("SymmetricState: non-finite amplitude");
    }

    static double norm_sq(const std::vector<Complex>& amplitudes) {
        double s = 0.0;
        for (const Complex& c : amplitudes) s += std::norm(c);
        return s;
    }

    int n_;
    std::vector<Complex> amps_;
};

// ---- ladder / diagonal actions on amplitude vectors (unnormalized images) --

/// J_z |n> = (n - N/2) |n>.
inline std::vector<Complex> apply_jz(int n_particles, std::span<const Complex> amps) {
    std::vector<Complex> out(amps.size());
    for (size_t n = 0; n < amps.size(); ++n)
        out[n] = (static_cast<double>(n) - 0.5 * n_particles) * amps[n];
    return out;
}

/// J_+ |n> = sqrt((n+1)(N-n)) |n+1>.
inline std::vector<Complex> apply_jplus(int n_particles, std::span<const Complex> amps) {
    std::vector<Complex> out(amps.size(), Complex{0.0, 0.0});
    for (size_t n = 0; n + 1 < amps.size(); ++n) {
        const double k = static_cast<double>(n);
        out[n + 1] = std::sqrt((k + 1.0) * (n_particles - k)) * amps[n];
    }
    return out;
}

/// J_- |n> = sqrt(n(N-n+1)) |n-1>.
inline std::vector<Complex> apply_jminus(int n_particles, std::span<const Complex> amps) {
    std::vector<Complex> out(amps.size(), Complex{0.0, 0.0});
    for (size_t n = 1; n < amps.size(); ++n) {
        const double k = static_cast<double>(n);
        out[n - 1] = std::sqrt(k * (n_particles - k + 1.0)) * amps[n];
    }
    return out;
}

inline std::vector<Complex> apply_jz(const SymmetricState& s) {
    return apply_jz(s.n_particles(), s.amplitudes());
}
inline std::vector<Complex> apply_jplus(const SymmetricState& s) {
    return apply_jplus(s.n_particles(), s.amplitudes());
}
inline std::vector<Complex> apply_jminus(const SymmetricState& s) {
    return apply_jminus(s.n_particles(), s.amplitudes());
}

inline Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
    Complex s{0.0, 0.0};
    for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

// ---- collective moments ----------------------------------------------------

/// First moments <J_a>, the symmetrized second-moment matrix
/// G_kl = <J_k J_l + J_l J_k>/2 and the covariance gamma_kl = G_kl - <J_k><J_l>.
struct CollectiveMoments {
    int n_particles = 0;
    Vec3 j1{};    // (<J_x>, <J_y>, <J_z>)
    Mat3 g{};     // symmetric
    Mat3 gamma{}; // symmetric

    /// trace(G) = <J^2>; equals (N/2)(N/2+1) for symmetric states.
    double total_j_sq() const { return trace(g); }
};

/// All moments from one pass of ladder/diagonal actions: with the images
/// u_a = J_a psi, every entry is an inner product, G_ab = Re <u_a|u_b>.
inline CollectiveMoments moments(const SymmetricState& state) {
    if (state.norm_deviation() > tol::state_norm)
        throw invalid_input("moments: state is not normalized");

    const int n_particles = state.n_particles();
    const auto& psi = state.amplitudes();
    const std::vector<Complex> uz = apply_jz(n_particles, psi);
    const std::vector<Complex> up = apply_jplus(n_particles, psi);
    const std::vector<Complex> um = apply_jminus(n_particles, psi);

    // J_x = (J_+ + J_-)/2, J_y = (J_+ - J_-)/(2i)
    std::vector<Complex> ux(psi.size()), uy(psi.size());
    const Complex half_over_i{0.0, -0.5};
    for (size_t k = 0; k < psi.size(); ++k) {
        ux[k] = 0.5 * (up[k] + um[k]);
        uy[k] = half_over_i * (up[k] - um[k]);
    }

    CollectiveMoments m;
    m.n_particles = n_particles;
    const std::array<const std::vector<Complex>*, 3> img{&ux, &uy, &uz};
    for (int a = 0; a < 3; ++a) m.j1[a] = inner(psi, *img[a]).real();
    for (int a = 0; a < 3; ++a)
        for (int b = a; b < 3; ++b) {
            const double v = inner(*img[a], *img[b]).real();
            m.g[a][b] = v;
            m.g[b][a] = v;
        }
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) m.gamma[a][b] = m.g[a][b] - m.j1[a] * m.j1[b];
    return m;
}

/// <J_-^2> read back from the moment matrix.
inline Complex jminus_sq_from_moments(const CollectiveMoments& m) {
    return Complex{m.g[0][0] - m.g[1][1], -2.0 * m.g[0][1]};
}

struct MeanSpin {
    Vec3 direction{0.0, 0.0, 0.0};  // unit vector; only valid when !degenerate
    bool degenerate = false;
};

/// Direction of <J>, or a degenerate flag when |<J>| < 1e-9.
inline MeanSpin mean_spin_direction(const CollectiveMoments& m) {
    const double len = norm(m.j1);
    if (len < tol::degenerate_mean_spin) return {{0.0, 0.0, 0.0}, true};
    return {scaled(m.j1, 1.0 / len), false};
}

}  // namespace spinsq
