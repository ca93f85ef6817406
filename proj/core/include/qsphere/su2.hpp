#pragma once

// Complex 2x2 matrix algebra for the qubit: Pauli decomposition, Killing
// form, adjoint action and its SO(3) image, Euler rotations, and the
// closed-form matrix exponential used as the dynamics oracle.

#include <array>
#include <complex>
#include <stdexcept>

namespace qsphere {

using cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;
using CVec3 = std::array<cplx, 3>;

inline constexpr double kDefaultTol = 1e-12;

// --- small vector helpers -------------------------------------------------

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Vec3 operator*(double s, const Vec3& a) {
    return {s * a[0], s * a[1], s * a[2]};
}
inline double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline CVec3 operator+(const CVec3& a, const CVec3& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline CVec3 operator-(const CVec3& a, const CVec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline CVec3 operator*(cplx s, const CVec3& a) {
    return {s * a[0], s * a[1], s * a[2]};
}
// Unconjugated bilinear dot; the star product and quaternion algebra use
// this form, not the Hermitian inner product.
inline cplx dot(const CVec3& a, const CVec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline CVec3 cross(const CVec3& a, const CVec3& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}
// Euclidean norm of a complex coefficient vector (sum of |.|^2).  Kept
// separate from the Killing form, whose literal sign convention makes
// kappa(J_i, J_i) negative with Hermitian generators.
inline double euclidean_norm(const CVec3& a) {
    return std::sqrt(std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]));
}
inline CVec3 to_complex(const Vec3& a) { return {a[0], a[1], a[2]}; }

// --- Matrix2 --------------------------------------------------------------

struct Matrix2 {
    // row-major: m[0]=a11, m[1]=a12, m[2]=a21, m[3]=a22
    std::array<cplx, 4> m{};

    cplx& operator()(int i, int j) { return m[2 * i + j]; }
    const cplx& operator()(int i, int j) const { return m[2 * i + j]; }
};

Matrix2 operator+(const Matrix2& a, const Matrix2& b);
Matrix2 operator-(const Matrix2& a, const Matrix2& b);
Matrix2 operator*(const Matrix2& a, const Matrix2& b);
Matrix2 operator*(cplx s, const Matrix2& a);

Matrix2 identity2();
Matrix2 zero2();
Matrix2 sigma_x();
Matrix2 sigma_y();
Matrix2 sigma_z();
Matrix2 pauli(int i);  // i in {1,2,3}

Matrix2 dagger(const Matrix2& a);
cplx trace(const Matrix2& a);
cplx det(const Matrix2& a);
double max_norm(const Matrix2& a);
bool approx_equal(const Matrix2& a, const Matrix2& b, double tol = kDefaultTol);

bool is_finite(const Matrix2& a);
bool is_hermitian(const Matrix2& a, double tol = kDefaultTol);
bool is_unitary(const Matrix2& a, double tol = kDefaultTol);
bool is_traceless(const Matrix2& a, double tol = kDefaultTol);
bool is_su2_element(const Matrix2& a, double tol = kDefaultTol);

// --- Pauli decomposition --------------------------------------------------

// A = a0 * 1 + a . sigma.  Also serves as the complexified quaternion
// q_A = a0 + i a under the Hamilton product (see star.hpp).
struct PauliCoefficients {
    cplx a0{};
    CVec3 a{};
};

PauliCoefficients pauli_decompose(const Matrix2& M);
Matrix2 pauli_compose(const PauliCoefficients& c);

// kappa(X, Y) = -2 tr(XY), computed literally.
cplx killing_form(const Matrix2& X, const Matrix2& Y);

// Ad_g(X) = g X g^-1 (= g X g^dagger for g in SU(2)).
Matrix2 adjoint_action(const Matrix2& g, const Matrix2& X);

// --- SO(3) image ----------------------------------------------------------

struct Rotation3 {
    std::array<double, 9> r{};  // row-major

    double& operator()(int i, int j) { return r[3 * i + j]; }
    const double& operator()(int i, int j) const { return r[3 * i + j]; }
};

Rotation3 identity3();
Rotation3 operator*(const Rotation3& a, const Rotation3& b);
Vec3 rotate(const Rotation3& R, const Vec3& x);
bool is_rotation(const Rotation3& R, double tol = kDefaultTol);

// R(g)_ij defined by Ad_g(J_j) = sum_i R(g)_ij J_i.
Rotation3 rotation_of(const Matrix2& g);

// --- exponentials ---------------------------------------------------------

// exp(-i H t / hbar) for Hermitian H, via the closed Rodrigues-type
// formula on the Pauli decomposition.
Matrix2 exp_su2(const Matrix2& H, double t, double hbar = 1.0);

// exp(-i sz phi/2) exp(-i sy theta/2) exp(-i sz Phi/2)
Matrix2 euler_rotation(double phi, double theta, double Phi);

}  // namespace qsphere
