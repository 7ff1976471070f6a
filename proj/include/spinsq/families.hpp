// Two-component Dicke superposition families cos(theta)|n> +
// e^{i phi} sin(theta)|n + gap>, with gap 2 (parity preserving), 1
// (adjacent, no parity), >= 3 (general), or 0 (a single Dicke state),
// plus closed-form moments for the gap-2 family.
#pragma once

#include <cmath>
#include <string>

#include "spinsq/core.hpp"
#include "spinsq/dicke.hpp"

namespace spinsq {

enum class FamilyKind { even_pair, adjacent_pair, general_pair, single_dicke };

inline const char* to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::even_pair: return "even-pair";
        case FamilyKind::adjacent_pair: return "adjacent-pair";
        case FamilyKind::general_pair: return "general-pair";
        default: return "single-dicke";
    }
}

inline FamilyKind family_kind_from_string(const std::string& s) {
    if (s == "even-pair") return FamilyKind::even_pair;
    if (s == "adjacent-pair") return FamilyKind::adjacent_pair;
    if (s == "general-pair") return FamilyKind::general_pair;
    if (s == "single-dicke") return FamilyKind::single_dicke;
    throw invalid_input("unknown family kind: " + s);
}

struct FamilySpec {
    FamilyKind kind = FamilyKind::even_pair;
    int n_particles = 2;
    int n = 0;
    int n_prime = 3;         // used by general_pair only
    double theta = 0.0;      // [0, pi)
    double phi = 0.0;        // [0, 2 pi)

    /// Excitation-number gap between the two superposed components.
    int gap() const {
        switch (kind) {
            case FamilyKind::even_pair: return 2;
            case FamilyKind::adjacent_pair: return 1;
            case FamilyKind::general_pair: return n_prime;
            default: return 0;
        }
    }

    void validate() const {
        if (n_particles < 2) throw invalid_input("family: need at least 2 particles");
        if (kind == FamilyKind::general_pair && n_prime < 3)
            throw invalid_input("family: general-pair requires n_prime >= 3");
        const int g = gap();
        if (n < 0 || n > n_particles - g)
            throw invalid_input("family: excitation n=" + std::to_string(n) +
                                " out of range 0.." + std::to_string(n_particles - g));
        if (!std::isfinite(theta) || !std::isfinite(phi))
            throw invalid_input("family: non-finite angle");
    }
};

/// cos(theta) at slot n, e^{i phi} sin(theta) at slot n+gap.  A single Dicke
/// state ignores the angles.
inline SymmetricState build(const FamilySpec& spec) {
    spec.validate();
    if (spec.kind == FamilyKind::single_dicke) return SymmetricState::dicke(spec.n_particles, spec.n);
    std::vector<Complex> amps(static_cast<size_t>(spec.n_particles) + 1, Complex{0.0, 0.0});
    amps[static_cast<size_t>(spec.n)] = std::cos(spec.theta);
    amps[static_cast<size_t>(spec.n + spec.gap())] =
        std::polar(std::sin(spec.theta), spec.phi);
    return SymmetricState::from_amplitudes(spec.n_particles, std::move(amps));
}

/// mu_n = (n+1)(n+2)(N-n)(N-n-1), the squared J_-^2 matrix element between
/// |n> and |n+2>.
inline double pair_coupling_mu(int n_particles, int n) {
    const double k = n;
    const double nn = n_particles;
    return (k + 1.0) * (k + 2.0) * (nn - k) * (nn - k - 1.0);
}

struct EvenPairMoments {
    double jz = 0.0;          // m + 2 sin^2(theta), m = n - N/2
    double jz_sq = 0.0;       // m^2 + (4m + 4) sin^2(theta)
    Complex jminus_sq{0.0, 0.0};  // e^{i phi} sin(2 theta) sqrt(mu_n) / 2
};

/// Closed-form moments for the gap-2 family.  Note the jz_sq coefficient is
/// (4m+4): (m+2)^2 sin^2 + m^2 cos^2 = m^2 + (4m+4) sin^2.
inline EvenPairMoments closed_form_moments(const FamilySpec& spec) {
    spec.validate();
    if (spec.kind != FamilyKind::even_pair)
        throw invalid_input("closed_form_moments: defined for the even-pair family only");
    const double m = spec.n - 0.5 * spec.n_particles;
    const double s2 = std::sin(spec.theta) * std::sin(spec.theta);
    EvenPairMoments out;
    out.jz = m + 2.0 * s2;
    out.jz_sq = m * m + (4.0 * m + 4.0) * s2;
    out.jminus_sq = std::polar(0.5 * std::sin(2.0 * spec.theta), spec.phi) *
                    std::sqrt(pair_coupling_mu(spec.n_particles, spec.n));
    return out;
}

enum class Parity { even, odd, none };

inline const char* to_string(Parity p) {
    switch (p) {
        case Parity::even: return "even";
        case Parity::odd: return "odd";
        default: return "none";
    }
}

/// Support-based parity: even (odd) iff every amplitude above 1e-12 sits on
/// an even (odd) excitation number.
inline Parity state_parity(const SymmetricState& state) {
    bool has_even = false, has_odd = false;
    for (int n = 0; n <= state.n_particles(); ++n) {
        if (std::abs(state.amplitude(n)) <= 1e-12) continue;
        (n % 2 == 0 ? has_even : has_odd) = true;
    }
    if (has_even && has_odd) return Parity::none;
    return has_odd ? Parity::odd : Parity::even;
}

}  // namespace spinsq
