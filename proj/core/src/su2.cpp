#include "qsphere/su2.hpp"

#include <cmath>

namespace qsphere {

namespace {
constexpr cplx I{0.0, 1.0};
}

Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
    Matrix2 r;
    for (int k = 0; k < 4; ++k) r.m[k] = a.m[k] + b.m[k];
    return r;
}

Matrix2 operator-(const Matrix2& a, const Matrix2& b) {
    Matrix2 r;
    for (int k = 0; k < 4; ++k) r.m[k] = a.m[k] - b.m[k];
    return r;
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    Matrix2 r;
    r(0, 0) = a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0);
    r(0, 1) = a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1);
    r(1, 0) = a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0);
    r(1, 1) = a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1);
    return r;
}

Matrix2 operator*(cplx s, const Matrix2& a) {
    Matrix2 r;
    for (int k = 0; k < 4; ++k) r.m[k] = s * a.m[k];
    return r;
}

Matrix2 identity2() { return Matrix2{{cplx{1}, {}, {}, cplx{1}}}; }
Matrix2 zero2() { return Matrix2{}; }
Matrix2 sigma_x() { return Matrix2{{cplx{}, cplx{1}, cplx{1}, cplx{}}}; }
Matrix2 sigma_y() { return Matrix2{{cplx{}, -I, I, cplx{}}}; }
Matrix2 sigma_z() { return Matrix2{{cplx{1}, {}, {}, cplx{-1}}}; }

Matrix2 pauli(int i) {
    switch (i) {
        case 1: return sigma_x();
        case 2: return sigma_y();
        case 3: return sigma_z();
        default: throw std::invalid_argument("pauli: index must be 1, 2 or 3");
    }
}

Matrix2 dagger(const Matrix2& a) {
    Matrix2 r;
    r(0, 0) = std::conj(a(0, 0));
    r(0, 1) = std::conj(a(1, 0));
    r(1, 0) = std::conj(a(0, 1));
    r(1, 1) = std::conj(a(1, 1));
    return r;
}

cplx trace(const Matrix2& a) { return a(0, 0) + a(1, 1); }
cplx det(const Matrix2& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }

double max_norm(const Matrix2& a) {
    double r = 0.0;
    for (const auto& e : a.m) r = std::max(r, std::abs(e));
    return r;
}

bool approx_equal(const Matrix2& a, const Matrix2& b, double tol) {
    return max_norm(a - b) < tol;
}

bool is_finite(const Matrix2& a) {
    for (const auto& e : a.m)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
    return true;
}

bool is_hermitian(const Matrix2& a, double tol) {
    return approx_equal(a, dagger(a), tol);
}

bool is_unitary(const Matrix2& a, double tol) {
    return approx_equal(a * dagger(a), identity2(), tol);
}

bool is_traceless(const Matrix2& a, double tol) {
    return std::abs(trace(a)) < tol;
}

bool is_su2_element(const Matrix2& a, double tol) {
    return is_unitary(a, tol) && std::abs(det(a) - cplx{1}) < tol;
}

PauliCoefficients pauli_decompose(const Matrix2& M) {
    if (!is_finite(M))
        throw std::invalid_argument("pauli_decompose: non-finite entries");
    PauliCoefficients c;
    c.a0 = (M(0, 0) + M(1, 1)) / 2.0;
    // a_i = tr(M sigma_i) / 2
    c.a[0] = (M(0, 1) + M(1, 0)) / 2.0;
    c.a[1] = (I * M(0, 1) - I * M(1, 0)) / 2.0;
    c.a[2] = (M(0, 0) - M(1, 1)) / 2.0;
    return c;
}

Matrix2 pauli_compose(const PauliCoefficients& c) {
    Matrix2 r;
    r(0, 0) = c.a0 + c.a[2];
    r(0, 1) = c.a[0] - I * c.a[1];
    r(1, 0) = c.a[0] + I * c.a[1];
    r(1, 1) = c.a0 - c.a[2];
    return r;
}

cplx killing_form(const Matrix2& X, const Matrix2& Y) {
    return -2.0 * trace(X * Y);
}

Matrix2 adjoint_action(const Matrix2& g, const Matrix2& X) {
    if (!is_su2_element(g, 1e-10))
        throw std::invalid_argument("adjoint_action: g is not in SU(2)");
    return g * X * dagger(g);
}

Rotation3 identity3() {
    Rotation3 r;
    r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
    return r;
}

Rotation3 operator*(const Rotation3& a, const Rotation3& b) {
    Rotation3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

Vec3 rotate(const Rotation3& R, const Vec3& x) {
    Vec3 y{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) y[i] += R(i, j) * x[j];
    return y;
}

bool is_rotation(const Rotation3& R, double tol) {
    double dev = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += R(k, i) * R(k, j);
            dev = std::max(dev, std::abs(s - (i == j ? 1.0 : 0.0)));
        }
    double d = R(0, 0) * (R(1, 1) * R(2, 2) - R(1, 2) * R(2, 1)) -
               R(0, 1) * (R(1, 0) * R(2, 2) - R(1, 2) * R(2, 0)) +
               R(0, 2) * (R(1, 0) * R(2, 1) - R(1, 1) * R(2, 0));
    return dev < tol && std::abs(d - 1.0) < tol;
}

Rotation3 rotation_of(const Matrix2& g) {
    Rotation3 R;
    for (int j = 0; j < 3; ++j) {
        // Ad_g(sigma_j) = sum_i R_ij sigma_i
        const PauliCoefficients c = pauli_decompose(adjoint_action(g, pauli(j + 1)));
        for (int i = 0; i < 3; ++i) R(i, j) = c.a[i].real();
    }
    return R;
}

Matrix2 exp_su2(const Matrix2& H, double t, double hbar) {
    if (!is_hermitian(H, 1e-10))
        throw std::invalid_argument("exp_su2: H must be Hermitian");
    const PauliCoefficients c = pauli_decompose(H);
    const double h0 = c.a0.real();
    const Vec3 h{c.a[0].real(), c.a[1].real(), c.a[2].real()};
    const double hn = norm(h);
    const cplx phase = std::exp(-I * h0 * t / hbar);
    const double alpha = hn * t / hbar;
    if (std::abs(alpha) < 1e-12) {
        // analytic limit: exp(-i h.sigma t/hbar) -> 1 - i (t/hbar) h.sigma
        PauliCoefficients r;
        r.a0 = phase;
        for (int i = 0; i < 3; ++i) r.a[i] = phase * (-I * t / hbar) * h[i];
        return pauli_compose(r);
    }
    const Vec3 hat = (1.0 / hn) * h;
    PauliCoefficients r;
    r.a0 = phase * std::cos(alpha);
    for (int i = 0; i < 3; ++i)
        r.a[i] = phase * (-I * std::sin(alpha)) * hat[i];
    return pauli_compose(r);
}

Matrix2 euler_rotation(double phi, double theta, double Phi) {
    const double ct = std::cos(theta / 2.0), st = std::sin(theta / 2.0);
    Matrix2 r;
    // exp(-i sz phi/2) exp(-i sy theta/2) exp(-i sz Phi/2), entrywise;
    // this phi sign is the one for which conjugating the parity operator
    // lands the kernel at the phase point (theta, phi)
    r(0, 0) = std::exp(-I * (phi + Phi) / 2.0) * ct;
    r(0, 1) = -std::exp(-I * (phi - Phi) / 2.0) * st;
    r(1, 0) = std::exp(I * (phi - Phi) / 2.0) * st;
    r(1, 1) = std::exp(I * (phi + Phi) / 2.0) * ct;
    return r;
}

}  // namespace qsphere
