// Dense complex matrix kernel sized for this problem: Hermitian
// eigendecomposition up to 4x4 (cyclic Jacobi), real-symmetric 3x3 minimum
// eigenvalue (trigonometric closed form with a Jacobi fallback near
// degeneracies), and the PSD matrix square root.
#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "spinsq/core.hpp"

namespace spinsq {

/// Row-major complex matrix with dim in {1..4}; capacity is fixed so values
/// live on the stack and are cheap to copy.
class CMatrix {
  public:
    explicit CMatrix(int dim) : dim_(dim) {
        if (dim < 1 || dim > 4) throw invalid_input("CMatrix: dim must be in 1..4");
        e_.fill(Complex{0.0, 0.0});
    }

    static CMatrix identity(int dim) {
        CMatrix m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    int dim() const { return dim_; }
    Complex& operator()(int i, int j) { return e_[static_cast<size_t>(i) * 4 + j]; }
    const Complex& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * 4 + j]; }

  private:
    int dim_;
    std::array<Complex, 16> e_;
};

inline CMatrix multiply(const CMatrix& a, const CMatrix& b) {
    const int d = a.dim();
    CMatrix r(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Complex s{0.0, 0.0};
            for (int k = 0; k < d; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

inline CMatrix adjoint(const CMatrix& a) {
    const int d = a.dim();
    CMatrix r(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) r(i, j) = std::conj(a(j, i));
    return r;
}

inline CMatrix conjugate(const CMatrix& a) {
    const int d = a.dim();
    CMatrix r(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) r(i, j) = std::conj(a(i, j));
    return r;
}

inline double max_abs(const CMatrix& a) {
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j)));
    return m;
}

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

/// max_ij |M - M^dagger|.
inline double hermiticity_defect(const CMatrix& a) {
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    return m;
}

inline Complex matrix_trace(const CMatrix& a) {
    Complex s{0.0, 0.0};
    for (int i = 0; i < a.dim(); ++i) s += a(i, i);
    return s;
}

struct HermEig {
    int dim;
    std::array<double, 4> values;  // ascending; entries past dim are zero
    CMatrix vectors;               // orthonormal columns, vectors(:,k) <-> values[k]
};

namespace detail {
inline double offdiag_frobenius(const CMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

inline double frobenius(const CMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) s += std::norm(a(i, j));
    return std::sqrt(s);
}
}  // namespace detail

/// Eigendecomposition of a Hermitian matrix, dim <= 4, by cyclic Jacobi
/// rotations.  Eigenvalues ascending, eigenvector columns orthonormal.
/// The convergence target scales with the input norm so large-N moment
/// matrices (entries grow like N^3) diagonalize as reliably as unit-scale
/// density matrices.
inline HermEig herm_eig(const CMatrix& m) {
    const int d = m.dim();
    if (hermiticity_defect(m) > tol::hermiticity * std::max(1.0, max_abs(m)))
        throw invalid_input("herm_eig: input is not Hermitian");

    CMatrix a = m;
    // symmetrize away representation round-off so the iteration sees an
    // exactly Hermitian matrix
    for (int i = 0; i < d; ++i) {
        a(i, i) = Complex{a(i, i).real(), 0.0};
        for (int j = i + 1; j < d; ++j) {
            Complex h = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = h;
            a(j, i) = std::conj(h);
        }
    }

    CMatrix v = CMatrix::identity(d);
    const double target = 1e-13 * std::max(1.0, detail::frobenius(a));
    constexpr int max_sweeps = 100;

    int sweep = 0;
    for (; sweep < max_sweeps && detail::offdiag_frobenius(a) > target; ++sweep) {
        for (int p = 0; p < d - 1; ++p) {
            for (int q = p + 1; q < d; ++q) {
                const Complex w = a(p, q);
                const double aw = std::abs(w);
                if (aw == 0.0) continue;
                const Complex phase = w / aw;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // Givens angle from tan(2t) = 2|w|/(a_pp - a_qq), |t| <= pi/4
                const double tau = (app - aqq) / (2.0 * aw);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex upq = -s * phase;             // U(p,q)
                const Complex uqp = s * std::conj(phase);   // U(q,p)
                for (int k = 0; k < d; ++k) {               // A <- A U
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * c + akq * uqp;
                    a(k, q) = akp * upq + akq * c;
                }
                for (int k = 0; k < d; ++k) {               // A <- U^H A
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk + std::conj(uqp) * aqk;
                    a(q, k) = std::conj(upq) * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int k = 0; k < d; ++k) {               // V <- V U
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * c + vkq * uqp;
                    v(k, q) = vkp * upq + vkq * c;
                }
            }
        }
    }
    if (sweep == max_sweeps && detail::offdiag_frobenius(a) > target)
        throw numerical_failure("herm_eig: Jacobi iteration did not converge");

    HermEig out{d, {0.0, 0.0, 0.0, 0.0}, v};
    for (int i = 0; i < d; ++i) out.values[i] = a(i, i).real();
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (out.values[j] < out.values[i]) {
                std::swap(out.values[i], out.values[j]);
                for (int k = 0; k < d; ++k) std::swap(out.vectors(k, i), out.vectors(k, j));
            }
    return out;
}

namespace detail {
inline CMatrix embed_sym3(const Mat3& m) {
    CMatrix a(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a(i, j) = 0.5 * (m[i][j] + m[j][i]);
    return a;
}
}  // namespace detail

/// Smallest eigenvalue of a real symmetric 3x3 matrix.  Uses the
/// trigonometric (Cardano) closed form; hands off to Jacobi when the
/// normalized discriminant 1-r^2 is small, because the closed form loses
/// ~eps/sqrt(1-r^2) of accuracy right where eigenvalues collide -- and
/// colliding eigenvalues are exactly the squeezing-crossing points we must
/// resolve to 1e-10.
inline double sym3_eig_min(const Mat3& m) {
    double scale = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) scale = std::max(scale, std::abs(m[i][j]));
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::abs(m[i][j] - m[j][i]) > tol::hermiticity * std::max(1.0, scale))
                throw invalid_input("sym3_eig_min: input is not symmetric");

    const double p1 = m[0][1] * m[0][1] + m[0][2] * m[0][2] + m[1][2] * m[1][2];
    if (p1 == 0.0) return std::min({m[0][0], m[1][1], m[2][2]});

    const double q = trace(m) / 3.0;
    const double p2 = (m[0][0] - q) * (m[0][0] - q) + (m[1][1] - q) * (m[1][1] - q) +
                      (m[2][2] - q) * (m[2][2] - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);

    Mat3 b{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b[i][j] = (m[i][j] - (i == j ? q : 0.0)) / p;
    const double det_b = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                         b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                         b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    const double r = std::clamp(det_b / 2.0, -1.0, 1.0);

    if (1.0 - r * r < 1e-6) {
        const HermEig eig = herm_eig(detail::embed_sym3(m));
        return eig.values[0];
    }
    const double phi = std::acos(r) / 3.0;
    return q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
}

/// Singular values of a complex matrix, dim <= 4, descending, by one-sided
/// Jacobi (column orthogonalization).  Each singular value emerges as a
/// column norm, so the small ones carry absolute error ~eps*||M|| -- forming
/// M^dagger M instead would square the condition and lift structural zeros
/// to sqrt(eps).
inline std::array<double, 4> singular_values(const CMatrix& m) {
    const int d = m.dim();
    CMatrix w = m;
    constexpr int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < d - 1; ++p) {
            for (int q = p + 1; q < d; ++q) {
                double a = 0.0, b = 0.0;
                Complex c{0.0, 0.0};
                for (int k = 0; k < d; ++k) {
                    a += std::norm(w(k, p));
                    b += std::norm(w(k, q));
                    c += std::conj(w(k, p)) * w(k, q);
                }
                const double ac = std::abs(c);
                if (ac <= 1e-14 * std::sqrt(a * b) || a == 0.0 || b == 0.0) continue;
                rotated = true;
                const Complex phase = c / ac;
                const double tau = (a - b) / (2.0 * ac);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = t * cs;
                const Complex upq = -sn * phase;
                const Complex uqp = sn * std::conj(phase);
                // [w_p, w_q] <- [w_p, w_q] U with U = [[cs, upq], [uqp, cs]]
                for (int k = 0; k < d; ++k) {
                    const Complex wkp = w(k, p), wkq = w(k, q);
                    w(k, p) = wkp * cs + wkq * uqp;
                    w(k, q) = wkp * upq + wkq * cs;
                }
            }
        }
        if (!rotated) break;
    }
    std::array<double, 4> sv{};
    for (int j = 0; j < d; ++j) {
        double s = 0.0;
        for (int k = 0; k < d; ++k) s += std::norm(w(k, j));
        sv[j] = std::sqrt(s);
    }
    std::sort(sv.begin(), sv.begin() + d, std::greater<double>());
    return sv;
}

/// Hermitian PSD square root via eigendecomposition.  Eigenvalues below
/// -psd_hard are an error; negatives above that are partial-trace round-off
/// and are clamped to zero.
inline CMatrix psd_sqrt(const CMatrix& m) {
    const HermEig eig = herm_eig(m);
    const int d = m.dim();
    std::array<double, 4> roots{};
    for (int i = 0; i < d; ++i) {
        if (eig.values[i] < -tol::psd_hard)
            throw numerical_failure("psd_sqrt: matrix is not positive semidefinite (eigenvalue " +
                                    std::to_string(eig.values[i]) + ")");
        roots[i] = std::sqrt(std::max(0.0, eig.values[i]));
    }
    CMatrix r(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Complex s{0.0, 0.0};
            for (int k = 0; k < d; ++k) s += eig.vectors(i, k) * roots[k] * std::conj(eig.vectors(j, k));
            r(i, j) = s;
        }
    return r;
}

}  // namespace spinsq
