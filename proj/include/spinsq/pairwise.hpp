// Two-qubit reduction of a symmetric ensemble and the Wootters concurrence.
//
// Local Pauli expectations follow from the collective moments through
//   <sigma_1a>          = 2 <J_a> / N
//   <sigma_1a sigma_2b> = (4 G_ab - N delta_ab) / (N (N-1)),
// which determine the pair density matrix completely (exchange symmetry
// makes the cross expectations symmetric in a, b).  The two-qubit basis is
// {|00>, |01>, |10>, |11>} with |0> the excited (spin-up) single-qubit state,
// so v_+ = rho_00,00 = (1 + 2<sigma_1z> + <sigma_1z sigma_2z>)/4.
#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "spinsq/core.hpp"
#include "spinsq/dicke.hpp"
#include "spinsq/smallmat.hpp"
#include "spinsq/squeezing.hpp"

namespace spinsq {

struct PairExpectations {
    int n_particles = 0;
    Vec3 sigma1{};             // <sigma_1a>
    Mat3 sigma_corr{};         // <sigma_1a sigma_2b>, symmetric
    Complex sigma_mm{0.0, 0.0};  // <sigma_1- sigma_2-> = <J_-^2> / (N(N-1))
};

inline PairExpectations local_expectations(const CollectiveMoments& m) {
    if (m.n_particles < 2) throw invalid_input("local_expectations: need at least 2 particles");
    const double nn = m.n_particles;
    PairExpectations p;
    p.n_particles = m.n_particles;
    for (int a = 0; a < 3; ++a) p.sigma1[a] = 2.0 * m.j1[a] / nn;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            p.sigma_corr[a][b] = (4.0 * m.g[a][b] - (a == b ? nn : 0.0)) / (nn * (nn - 1.0));
    p.sigma_mm = jminus_sq_from_moments(m) / (nn * (nn - 1.0));
    return p;
}

/// Connected two-spin correlation along z: <sigma_1z sigma_2z> - <sigma_1z>^2.
inline double czz(const CollectiveMoments& m) {
    const PairExpectations p = local_expectations(m);
    return p.sigma_corr[2][2] - p.sigma1[2] * p.sigma1[2];
}

class TwoQubitDensity {
  public:
    /// Validates trace 1, Hermiticity, exchange symmetry and positivity
    /// (eigenvalues >= -1e-8; worse is a numerical failure of the caller).
    explicit TwoQubitDensity(CMatrix rho) : rho_(std::move(rho)) {
        if (rho_.dim() != 4) throw invalid_input("TwoQubitDensity: needs a 4x4 matrix");
        if (std::abs(matrix_trace(rho_) - Complex{1.0, 0.0}) > 1e-12)
            throw invalid_input("TwoQubitDensity: trace differs from 1");
        if (hermiticity_defect(rho_) > 1e-12)
            throw invalid_input("TwoQubitDensity: matrix is not Hermitian");
        // swap of the two qubits permutes basis indices 1 <-> 2
        static constexpr int swapped[4] = {0, 2, 1, 3};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (std::abs(rho_(i, j) - rho_(swapped[i], swapped[j])) > 1e-12)
                    throw invalid_input("TwoQubitDensity: matrix is not exchange symmetric");
        const HermEig eig = herm_eig(rho_);
        if (eig.values[0] < -tol::psd_hard)
            throw numerical_failure("TwoQubitDensity: negative eigenvalue " +
                                    std::to_string(eig.values[0]));
    }

    const CMatrix& matrix() const { return rho_; }

  private:
    CMatrix rho_;
};

namespace detail {
inline const CMatrix& pauli(int a) {
    static const CMatrix sx = [] {
        CMatrix m(2);
        m(0, 1) = 1.0;
        m(1, 0) = 1.0;
        return m;
    }();
    static const CMatrix sy = [] {
        CMatrix m(2);
        m(0, 1) = Complex{0.0, -1.0};
        m(1, 0) = Complex{0.0, 1.0};
        return m;
    }();
    static const CMatrix sz = [] {
        CMatrix m(2);
        m(0, 0) = 1.0;
        m(1, 1) = -1.0;
        return m;
    }();
    return a == 0 ? sx : (a == 1 ? sy : sz);
}

inline CMatrix kron2(const CMatrix& a, const CMatrix& b) {
    CMatrix r(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

/// sigma_y (x) sigma_y, the spin-flip kernel (real, antidiagonal -1,1,1,-1).
inline const CMatrix& spin_flip() {
    static const CMatrix y = kron2(pauli(1), pauli(1));
    return y;
}
}  // namespace detail

/// Pair density matrix, entry by entry, over the common denominator
/// 4N(N-1).  This is the Pauli expansion
///   rho = [I(x)I + sum_a s_a (sigma_a(x)I + I(x)sigma_a)
///          + sum_ab t_ab sigma_a(x)sigma_b] / 4
/// evaluated without intermediate cancellation: where a population like
/// rho_00,00 = (N^2 - 2N + 4<J_z^2> + 4(N-1)<J_z>) / (4N(N-1)) vanishes
/// structurally the numerator terms are exactly representable and sum to an
/// exact zero.  Splitting the terms across separate Pauli summands would
/// leave ~1e-17 residues there, which the concurrence amplifies to ~1e-9
/// (it responds to rank-breaking perturbations as their square root).
inline TwoQubitDensity reduced_density(const CollectiveMoments& m) {
    if (m.n_particles < 2) throw invalid_input("reduced_density: need at least 2 particles");
    const double nn = m.n_particles;
    const double den = 4.0 * nn * (nn - 1.0);
    const double jz = m.j1[2];
    const double jz2 = m.g[2][2];

    CMatrix rho(4);
    // z sector: diagonal populations
    rho(0, 0) = (nn * nn - 2.0 * nn + 4.0 * jz2 + 4.0 * (nn - 1.0) * jz) / den;
    rho(3, 3) = (nn * nn - 2.0 * nn + 4.0 * jz2 - 4.0 * (nn - 1.0) * jz) / den;
    rho(1, 1) = (nn * nn - 4.0 * jz2) / den;
    rho(2, 2) = rho(1, 1);
    // transverse sector: central coherence and the two-excitation corner
    rho(1, 2) = (4.0 * (m.g[0][0] + m.g[1][1]) - 2.0 * nn) / den;
    rho(2, 1) = rho(1, 2);
    const Complex u = jminus_sq_from_moments(m) / (nn * (nn - 1.0));
    rho(0, 3) = u;
    rho(3, 0) = std::conj(u);
    // cross sector: couples z to the transverse plane; vanishes exactly for
    // axial states because those moment entries are exact zeros
    const Complex jperp{m.j1[0], -m.j1[1]};       // <J_x> - i <J_y>
    const Complex gperp{m.g[0][2], -m.g[1][2]};   // G_xz - i G_yz
    const Complex upper = (2.0 * (nn - 1.0) * jperp + 4.0 * gperp) / den;
    const Complex lower = (2.0 * (nn - 1.0) * jperp - 4.0 * gperp) / den;
    rho(0, 1) = upper;
    rho(0, 2) = upper;
    rho(1, 0) = std::conj(upper);
    rho(2, 0) = std::conj(upper);
    rho(1, 3) = lower;
    rho(2, 3) = lower;
    rho(3, 1) = std::conj(lower);
    rho(3, 2) = std::conj(lower);
    return TwoQubitDensity(std::move(rho));
}

/// X-form parameterization of the axial-state pair density matrix:
/// diagonal (v+, y, y, v-), central off-diagonal y, corners u.
struct XStateParams {
    double v_plus = 0.0;
    double v_minus = 0.0;
    double y = 0.0;
    Complex u{0.0, 0.0};

    double sqrt_vpvm() const {
        const double prod = v_plus * v_minus;
        if (prod < -1e-12) throw numerical_failure("XStateParams: v+ v- < -1e-12");
        return std::sqrt(std::max(0.0, prod));
    }
};

inline XStateParams xstate_params(const CollectiveMoments& m) {
    const double viol = axial_violation(m);
    if (viol > tol::axial_conditions)
        throw invalid_input("xstate_params: axial conditions violated by " + std::to_string(viol));
    // fused single-denominator forms of v+- = (1 +- 2<s_z> + <s_z s_z>)/4 and
    // y = (1 - <s_z s_z>)/4; see reduced_density for why
    const double nn = m.n_particles;
    const double den = 4.0 * nn * (nn - 1.0);
    XStateParams x;
    x.v_plus = (nn * nn - 2.0 * nn + 4.0 * m.g[2][2] + 4.0 * (nn - 1.0) * m.j1[2]) / den;
    x.v_minus = (nn * nn - 2.0 * nn + 4.0 * m.g[2][2] - 4.0 * (nn - 1.0) * m.j1[2]) / den;
    x.y = (nn * nn - 4.0 * m.g[2][2]) / den;
    x.u = jminus_sq_from_moments(m) / (nn * (nn - 1.0));
    if (std::abs(x.v_plus + x.v_minus + 2.0 * x.y - 1.0) > 1e-12)
        throw numerical_failure("xstate_params: v+ + v- + 2y deviates from 1");
    if (x.v_plus < -1e-12 || x.v_minus < -1e-12 || x.y < -1e-12)
        throw numerical_failure("xstate_params: negative population");
    // positivity bound sqrt(v+ v-) >= |u|, validated in squares: taking the
    // root first would amplify the ~eps error of a vanishing population to
    // ~1e-10 and reject valid states right next to the family endpoints
    if (std::norm(x.u) > x.v_plus * x.v_minus + 1e-13)
        throw numerical_failure("xstate_params: positivity bound sqrt(v+ v-) >= |u| violated");
    return x;
}

/// Signed entanglement margin 2 max{|u| - y, y - sqrt(v+ v-)}; the
/// concurrence is its positive part.  Positivity of rho keeps the two
/// branch terms from being positive at the same time.
inline double entanglement_margin_x(const XStateParams& x) {
    return 2.0 * std::max(std::abs(x.u) - x.y, x.y - x.sqrt_vpvm());
}

inline double concurrence_x(const XStateParams& x) {
    return std::max(0.0, entanglement_margin_x(x));
}

/// Wootters lambdas, descending: singular values of S = B^T (sy x sy) B
/// where rho = B B^dagger.  The nonzero eigenvalues of rho rho~ equal those
/// of S S^dagger, so the lambdas are the singular values of S, computed by
/// one-sided Jacobi so the structurally zero ones stay at round-off level
/// instead of inflating to sqrt(eps).
inline std::array<double, 4> wootters_lambdas(const TwoQubitDensity& rho) {
    const HermEig eig = herm_eig(rho.matrix());
    // Eigenvalue weights below 1e-14 are round-off on structurally zero
    // populations; carrying them into B would re-break the rank and shift
    // the lambdas by sqrt(weight).
    CMatrix b(4);
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            b(i, k) = eig.vectors(i, k) *
                      (eig.values[k] < 1e-14 ? 0.0 : std::sqrt(eig.values[k]));
    const CMatrix& y = detail::spin_flip();
    CMatrix s(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Complex acc{0.0, 0.0};
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) acc += b(k, i) * y(k, l) * b(l, j);
            s(i, j) = acc;
        }
    return singular_values(s);
}

inline double entanglement_margin_general(const TwoQubitDensity& rho) {
    const auto lam = wootters_lambdas(rho);
    return lam[0] - lam[1] - lam[2] - lam[3];
}

/// max{lambda_1 - lambda_2 - lambda_3 - lambda_4, 0}.
inline double concurrence_general(const TwoQubitDensity& rho) {
    return std::max(0.0, entanglement_margin_general(rho));
}

}  // namespace spinsq
