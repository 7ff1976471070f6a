// Shared scalar types, error taxonomy and numeric policy constants.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace spinsq {

using Complex = std::complex<double>;

/// Bad parameters, violated preconditions, malformed input files.
class invalid_input : public std::runtime_error {
  public:
    explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

/// Iteration did not converge, or a matrix failed a positivity check that
/// valid inputs cannot fail.
class numerical_failure : public std::runtime_error {
  public:
    explicit numerical_failure(const std::string& what) : std::runtime_error(what) {}
};

namespace tol {
// One definition for every threshold comparison against 1 (squeezing) and
// against 0 (entanglement).  Values inside the band are "boundary", so grid
// points sitting on a crossing can never flap between yes and no.
inline constexpr double threshold_band = 1e-9;
// |<J>| below this is treated as a degenerate (undefined) mean spin direction.
inline constexpr double degenerate_mean_spin = 1e-9;
// Max allowed |<J_x>|, |<J_y>|, |G_xz|, |G_yz| for the axial shortcut paths.
inline constexpr double axial_conditions = 1e-9;
// Hermiticity / symmetry gate ahead of eigensolves (scaled by matrix size).
inline constexpr double hermiticity = 1e-12;
// State normalization: strict for constructed states, loose for loaded files
// (the loader renormalizes inside the loose band and rejects outside it).
inline constexpr double state_norm = 1e-12;
inline constexpr double state_norm_file = 1e-6;
// Density-matrix eigenvalues below -psd_hard are an error; negatives above
// it are round-off from partial traces and are clamped to zero.
inline constexpr double psd_hard = 1e-8;
}  // namespace tol

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline Vec3 scaled(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }

inline Vec3 normalized(const Vec3& a) { return scaled(a, 1.0 / norm(a)); }

/// u^T m v for a 3x3 matrix.
inline double quad_form(const Mat3& m, const Vec3& u, const Vec3& v) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += u[i] * m[i][j] * v[j];
    return s;
}

inline double trace(const Mat3& m) { return m[0][0] + m[1][1] + m[2][2]; }

/// Three-way classification against a threshold with the shared band.
enum class Flag { yes, no, boundary };

/// yes iff value < threshold - band (used for squeezing: xi^2 < 1).
inline Flag classify_below(double value, double threshold) {
    if (value < threshold - tol::threshold_band) return Flag::yes;
    if (value > threshold + tol::threshold_band) return Flag::no;
    return Flag::boundary;
}

/// yes iff value > band (used for the signed entanglement margin).
inline Flag classify_positive(double value) {
    if (value > tol::threshold_band) return Flag::yes;
    if (value < -tol::threshold_band) return Flag::no;
    return Flag::boundary;
}

inline const char* to_string(Flag f) {
    switch (f) {
        case Flag::yes: return "yes";
        case Flag::no: return "no";
        default: return "boundary";
    }
}

}  // namespace spinsq
