// Spin squeezing parameters.
//
//   xi_s2:     4/N times the minimum variance of a spin component
//              perpendicular to the mean spin direction (planar squeezing).
//   varsigma2: (4/N^2) [N (dJ_a)^2 + <J_a>^2] along the mean-spin axis a;
//              equals 1 + (N-1) C_zz when the axis is z.
//   xi_t2:     lambda_min of Gamma = (N-1) gamma + G over (<J^2> - N/2);
//              for states with <J_x> = <J_y> = 0 and vanishing xz/yz
//              covariances it reduces to min{xi_s2, varsigma2}.
#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "spinsq/core.hpp"
#include "spinsq/dicke.hpp"
#include "spinsq/smallmat.hpp"

namespace spinsq {

/// How far the moments are from the axial (parity-state) conditions
/// <J_x> = <J_y> = 0, G_xz = G_yz = 0.
inline double axial_violation(const CollectiveMoments& m) {
    return std::max({std::abs(m.j1[0]), std::abs(m.j1[1]), std::abs(m.g[0][2]),
                     std::abs(m.g[1][2])});
}

inline bool is_axial(const CollectiveMoments& m) {
    return axial_violation(m) <= tol::axial_conditions;
}

namespace detail {
/// Deterministic orthonormal basis {e1, e2} of the plane perpendicular to
/// axis: e1 = normalize(z x axis), falling back to x when axis is (anti-)
/// parallel to z.
inline std::pair<Vec3, Vec3> perpendicular_basis(const Vec3& axis) {
    const Vec3 zhat{0.0, 0.0, 1.0};
    Vec3 e1 = cross(zhat, axis);
    if (norm(e1) < 1e-9)
        e1 = Vec3{1.0, 0.0, 0.0};
    else
        e1 = normalized(e1);
    const Vec3 e2 = cross(axis, e1);
    return {e1, e2};
}

/// Minimum eigenvalue of the symmetric 2x2 [[a, b], [b, d]].
inline double sym2_eig_min(double a, double b, double d) {
    const double mean = 0.5 * (a + d);
    const double rad = std::hypot(0.5 * (a - d), b);
    return mean - rad;
}
}  // namespace detail

/// Planar squeezing parameter from the moment matrices.  In the plane
/// perpendicular to the mean spin the first moment vanishes, so the variance
/// is the quadratic form of gamma (= G there).  With a degenerate mean spin
/// the minimization extends over all directions: 4/N times the smallest
/// eigenvalue of gamma.
inline double xi_s_general(const CollectiveMoments& m) {
    const MeanSpin ms = mean_spin_direction(m);
    if (ms.degenerate) return 4.0 / m.n_particles * sym3_eig_min(m.gamma);
    const auto [e1, e2] = detail::perpendicular_basis(ms.direction);
    const double a = quad_form(m.gamma, e1, e1);
    const double b = quad_form(m.gamma, e1, e2);
    const double d = quad_form(m.gamma, e2, e2);
    return 4.0 / m.n_particles * detail::sym2_eig_min(a, b, d);
}

/// Axial-state shortcut (2/N)(<J_x^2 + J_y^2> - |<J_-^2>|); requires the
/// axial conditions and names the violated one otherwise.
inline double xi_s_parity(const CollectiveMoments& m) {
    const auto check = [](double v, const char* name) {
        if (std::abs(v) > tol::axial_conditions)
            throw invalid_input(std::string("xi_s_parity: axial condition violated: |") + name +
                                "| = " + std::to_string(std::abs(v)));
    };
    check(m.j1[0], "<J_x>");
    check(m.j1[1], "<J_y>");
    check(m.g[0][2], "G_xz");
    check(m.g[1][2], "G_yz");
    return 2.0 / m.n_particles *
           (m.g[0][0] + m.g[1][1] - std::abs(jminus_sq_from_moments(m)));
}

/// Mean-spin-axis squeezing term.  The axis is the mean spin direction, or z
/// when the mean spin is degenerate.
inline double varsigma(const CollectiveMoments& m) {
    const MeanSpin ms = mean_spin_direction(m);
    const Vec3 axis = ms.degenerate ? Vec3{0.0, 0.0, 1.0} : ms.direction;
    const double var = quad_form(m.gamma, axis, axis);
    const double first = dot(m.j1, axis);
    const double nn = m.n_particles;
    return 4.0 / (nn * nn) * (nn * var + first * first);
}

enum class Branch { planar, axial, general };

inline const char* to_string(Branch b) {
    switch (b) {
        case Branch::planar: return "planar";
        case Branch::axial: return "axial";
        default: return "general";
    }
}

struct SqueezingReport {
    double xi_s2 = 0.0;
    double varsigma2 = 0.0;
    double xi_t2 = 0.0;
    double lambda_min = 0.0;
    double denominator = 0.0;  // <J^2> - N/2
    Branch branch = Branch::general;
    Vec3 mean_spin{0.0, 0.0, 0.0};
    bool degenerate_mean_spin = false;
    bool mean_spin_along_z = false;  // varsigma axis coincides with +-z
    bool axial = false;              // axial conditions hold on the moments
};

/// Full eigenvalue-criterion evaluation: builds Gamma = (N-1) gamma + G,
/// divides its smallest eigenvalue by <J^2> - N/2 (computed from trace(G),
/// not hardcoded to N^2/4), and packages the companion parameters.
inline SqueezingReport analyze_squeezing(const CollectiveMoments& m) {
    SqueezingReport r;
    const double nn = m.n_particles;

    Mat3 big_gamma{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) big_gamma[i][j] = (nn - 1.0) * m.gamma[i][j] + m.g[i][j];
    r.lambda_min = sym3_eig_min(big_gamma);
    r.denominator = m.total_j_sq() - 0.5 * nn;
    if (r.denominator <= 0.0)
        throw numerical_failure("analyze_squeezing: nonpositive denominator <J^2> - N/2; "
                                "moments are inconsistent with a symmetric state");
    r.xi_t2 = r.lambda_min / r.denominator;

    const MeanSpin ms = mean_spin_direction(m);
    r.degenerate_mean_spin = ms.degenerate;
    r.mean_spin = ms.direction;
    r.mean_spin_along_z =
        ms.degenerate || (std::abs(ms.direction[0]) <= 1e-9 && std::abs(ms.direction[1]) <= 1e-9);

    r.xi_s2 = xi_s_general(m);
    r.varsigma2 = varsigma(m);
    r.axial = is_axial(m);
    if (r.axial)
        r.branch = xi_s_parity(m) <= r.varsigma2 ? Branch::planar : Branch::axial;
    else
        r.branch = Branch::general;
    return r;
}

}  // namespace spinsq
