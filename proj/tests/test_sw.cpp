#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "qsphere/sw.hpp"

using namespace qsphere;
namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

Matrix2 random_matrix(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix2 M;
    for (auto& e : M.m) e = cplx{u(rng), u(rng)};
    return M;
}

PhasePoint random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    return PhasePoint(std::acos(1 - 2 * u01(rng)), 2 * kPi * u01(rng));
}
}  // namespace

TEST_CASE("kernel at the north pole") {
    const Matrix2 D = sw_kernel(PhasePoint(0.0, 0.0));
    CHECK(std::abs(D(0, 0) - 0.5 * (1 + kSqrt3)) < 1e-15);
    CHECK(std::abs(D(1, 1) - 0.5 * (1 - kSqrt3)) < 1e-15);
    CHECK(std::abs(D(0, 1)) < 1e-15);
    CHECK(std::abs(D(1, 0)) < 1e-15);
}

TEST_CASE("kernel trace and spectrum") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 50; ++i) {
        const Matrix2 D = sw_kernel(random_point(rng));
        CHECK(std::abs(trace(D) - cplx{1.0}) < 1e-14);
        // eigenvalues from the characteristic polynomial
        const cplx disc = std::sqrt(trace(D) * trace(D) - 4.0 * det(D));
        const cplx l1 = 0.5 * (trace(D) + disc), l2 = 0.5 * (trace(D) - disc);
        CHECK(std::abs(l1 - 0.5 * (1 + kSqrt3)) < 1e-13);
        CHECK(std::abs(l2 - 0.5 * (1 - kSqrt3)) < 1e-13);
    }
}

TEST_CASE("parity operator") {
    const Matrix2 P = parity_operator();
    CHECK(std::abs(P(0, 0) - (1 + kSqrt3)) < 1e-15);
    CHECK(std::abs(P(1, 1) - (1 - kSqrt3)) < 1e-15);
    CHECK(is_hermitian(P));
    CHECK(approx_equal(0.5 * cplx{1} * P, sw_kernel(PhasePoint(0.0, 0.0)), 1e-15));
}

TEST_CASE("kernel from Euler rotation") {
    // independent of the gauge angle Phi
    CHECK(approx_equal(kernel_from_rotation(1.1, 0.7, 0.0),
                       kernel_from_rotation(1.1, 0.7, 2.7), 1e-14));
    CHECK(approx_equal(kernel_from_rotation(0.0, 0.0, 0.0),
                       0.5 * cplx{1} * parity_operator(), 1e-14));
    // two independent formulas agree
    std::mt19937_64 rng(22);
    for (int i = 0; i < 50; ++i) {
        const PhasePoint p = random_point(rng);
        CHECK(approx_equal(kernel_from_rotation(p.phi, p.theta, 0.4),
                           sw_kernel(p), 1e-13));
    }
}

TEST_CASE("symbols of the Pauli basis") {
    for (int i = 1; i <= 3; ++i) {
        const Symbol W = symbol_of(pauli(i));
        CHECK(std::abs(W.c0) < 1e-15);
        for (int k = 0; k < 3; ++k)
            CHECK(std::abs(W.c[k] - (k == i - 1 ? cplx{1} : cplx{})) < 1e-15);
    }
    const Symbol Wid = symbol_of(identity2());
    CHECK(std::abs(Wid.c0 - cplx{1}) < 1e-15);
}

TEST_CASE("symbol agrees pointwise with the trace oracle") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 10; ++i) {
        const Matrix2 A = random_matrix(rng);
        const Symbol W = symbol_of(A);
        for (int k = 0; k < 100; ++k) {
            const PhasePoint p = random_point(rng);
            CHECK(std::abs(symbol_eval(W, p) - trace(A * sw_kernel(p))) < 1e-13);
        }
    }
}

TEST_CASE("symbol_eval examples") {
    CHECK(std::abs(symbol_eval(Symbol{cplx{1}, {}}, PhasePoint(1.0, 2.0)) -
                   cplx{1.0}) < 1e-15);
    CHECK(std::abs(symbol_eval(symbol_of(sigma_z()), PhasePoint(0.0, 0.0)) -
                   kSqrt3) < 1e-14);
    CHECK(std::abs(symbol_eval(symbol_of(sigma_x()), PhasePoint(kPi / 2, 0.0)) -
                   kSqrt3) < 1e-14);
}

TEST_CASE("symbol map is linear on coefficients") {
    std::mt19937_64 rng(24);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        const Matrix2 A = random_matrix(rng), B = random_matrix(rng);
        const cplx alpha{u(rng), u(rng)}, beta{u(rng), u(rng)};
        const Symbol lhs = symbol_of(alpha * A + beta * B);
        const Symbol rhs = alpha * symbol_of(A) + beta * symbol_of(B);
        CHECK(coeff_norm(lhs - rhs) < 1e-15);
    }
}

TEST_CASE("reconstruction") {
    const QuadratureRule rule = gauss_legendre_sphere(8, 16);
    // normalization: integral of Delta dOmega = 1
    CHECK(max_norm(reconstruct(Symbol{cplx{1}, {}}, rule) - identity2()) < 1e-12);
    // W = sqrt3 n3 -> sigma_z
    CHECK(max_norm(reconstruct(Symbol{cplx{}, {cplx{}, cplx{}, cplx{1}}}, rule) -
                   sigma_z()) < 1e-12);
    std::mt19937_64 rng(25);
    for (int i = 0; i < 20; ++i) {
        const Matrix2 A = random_matrix(rng);
        CHECK(max_norm(reconstruct(symbol_of(A), rule) - A) < 1e-12);
    }
}

TEST_CASE("traciality as coefficient identity and by quadrature") {
    const QuadratureRule rule = gauss_legendre_sphere(8, 16);
    std::mt19937_64 rng(26);
    for (int i = 0; i < 20; ++i) {
        const Matrix2 A = random_matrix(rng), B = random_matrix(rng);
        const auto a = pauli_decompose(A), b = pauli_decompose(B);
        const cplx coeff = 2.0 * (a.a0 * b.a0 + dot(a.a, b.a));
        CHECK(std::abs(coeff - trace(A * B)) < 1e-13);
        const cplx quad = integrate(
            [&](const PhasePoint& p) {
                return symbol_eval(symbol_of(A), p) * symbol_eval(symbol_of(B), p);
            },
            rule);
        CHECK(std::abs(quad - trace(A * B)) < 1e-12);
    }
    // spot values from the postulates
    const cplx v = integrate(
        [&](const PhasePoint& p) {
            const cplx w = symbol_eval(symbol_of(sigma_x()), p);
            return w * w;
        },
        rule);
    CHECK(std::abs(v - 2.0) < 1e-12);
    const cplx z = integrate(
        [&](const PhasePoint& p) { return symbol_eval(symbol_of(sigma_z()), p); },
        rule);
    CHECK(std::abs(z) < 1e-13);
}

TEST_CASE("sqrt3 is the unique traciality normalization") {
    // with kernel (1/2)(1 + s n.sigma), traciality requires (2/3) s^2 = 2
    const QuadratureRule rule = gauss_legendre_sphere(8, 16);
    for (double s : {1.5, kSqrt3, 2.0}) {
        const cplx v = integrate(
            [&](const PhasePoint& p) {
                const double w = s * p.n()[0];  // symbol of sigma_x at scale s
                return cplx{w * w};
            },
            rule);
        if (s == kSqrt3)
            CHECK(std::abs(v - 2.0) < 1e-12);
        else
            CHECK(std::abs(v - 2.0) > 0.1);
    }
}

TEST_CASE("axiom report over seeded random draws") {
    const QuadratureRule rule = gauss_legendre_sphere(8, 16);
    const AxiomReport report = check_axioms(100, rule, 7);
    CHECK(report.axioms.size() == 5);
    for (const auto& [name, c] : report.axioms) {
        INFO(name, " max_dev=", c.max_dev);
        CHECK(c.pass);
        CHECK(c.max_dev < 1e-11);
    }
    CHECK(report.all_pass());
    CHECK_THROWS_AS(check_axioms(0, rule, 7), std::invalid_argument);
}

TEST_CASE("covariance with the identity group element is exact") {
    std::mt19937_64 rng(27);
    for (int i = 0; i < 20; ++i) {
        const PhasePoint p = random_point(rng);
        const Matrix2 D = sw_kernel(p);
        const Matrix2 g = identity2();
        CHECK(max_norm(sw_kernel(p) - g * D * dagger(g)) == 0.0);
    }
}
