#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "qsphere/sphere.hpp"
#include "qsphere/star.hpp"

using namespace qsphere;
namespace {
constexpr double kPi = std::numbers::pi;

PhasePoint random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    return PhasePoint(std::acos(1 - 2 * u01(rng)), 2 * kPi * u01(rng));
}
}  // namespace

TEST_CASE("phase point normalization") {
    const PhasePoint p(3 * kPi / 2, -kPi / 2);  // theta folds back, phi shifts
    CHECK(p.theta == doctest::Approx(kPi / 2).epsilon(1e-14));
    CHECK(p.phi == doctest::Approx(kPi / 2).epsilon(1e-14));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    for (int i = 0; i < 100; ++i) {
        const PhasePoint q(u(rng), u(rng));
        CHECK(q.theta >= 0.0);
        CHECK(q.theta <= kPi);
        CHECK(q.phi >= 0.0);
        CHECK(q.phi < 2 * kPi);
        CHECK(std::abs(norm(q.n()) - 1.0) < 1e-14);
    }
}

TEST_CASE("tangent vector rejects non-tangent input") {
    const PhasePoint north(0.0, 0.0);
    CHECK_NOTHROW(TangentVector(north, Vec3{1, 0, 0}));
    CHECK_THROWS_AS(TangentVector(north, Vec3{0, 0, 1}), std::invalid_argument);
}

TEST_CASE("kks form") {
    CHECK(kks_form({0, 0, 1}, {1, 0, 0}, {0, 1, 0}) == doctest::Approx(1.0));
    // antisymmetry
    CHECK(kks_form({0, 0, 1}, {0, 1, 0}, {1, 0, 0}) == doctest::Approx(-1.0));
    CHECK_THROWS_AS(kks_form({0, 0, 0}, {1, 0, 0}, {0, 1, 0}), std::domain_error);
    CHECK_THROWS_AS(kks_form({0, 0, 1}, {0, 0, 1}, {0, 1, 0}),
                    std::invalid_argument);
}

TEST_CASE("kks form is rotation invariant") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const PhasePoint p = random_point(rng);
        const Vec3 n = p.n();
        const double ct = std::cos(p.theta), st = std::sin(p.theta);
        const double cp = std::cos(p.phi), sp = std::sin(p.phi);
        const Vec3 dth{ct * cp, ct * sp, -st};
        const Vec3 dph{-st * sp, st * cp, 0.0};
        const Rotation3 R = rotation_of(euler_rotation(
            2 * kPi * u01(rng), std::acos(1 - 2 * u01(rng)), 4 * kPi * u01(rng)));
        CHECK(std::abs(kks_form(rotate(R, n), rotate(R, dth), rotate(R, dph)) -
                       kks_form(n, dth, dph)) < 1e-12);
    }
}

TEST_CASE("kks form reproduces the area form on the unit sphere") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const PhasePoint p = random_point(rng);
        const double ct = std::cos(p.theta), st = std::sin(p.theta);
        const double cp = std::cos(p.phi), sp = std::sin(p.phi);
        const Vec3 dth{ct * cp, ct * sp, -st};
        const Vec3 dph{-st * sp, st * cp, 0.0};
        CHECK(std::abs(kks_form(p.n(), dth, dph) - st) < 1e-10);
    }
}

TEST_CASE("quadrature weights and moments") {
    CHECK_THROWS_AS(gauss_legendre_sphere(0, 4), std::invalid_argument);
    for (auto [nt, np] : {std::pair{2, 3}, {4, 7}, {8, 16}, {16, 32}}) {
        const QuadratureRule rule = gauss_legendre_sphere(nt, np);
        double wsum = 0.0;
        for (double w : rule.weights) {
            CHECK(w > 0.0);
            wsum += w;
        }
        CHECK(std::abs(wsum - 2.0) < 1e-12);
        // total measure
        CHECK(std::abs(integrate([](const PhasePoint&) { return cplx{1}; },
                                 rule) - 2.0) < 1e-12);
        // first and second moments of n
        for (int i = 0; i < 3; ++i) {
            const cplx m1 = integrate(
                [i](const PhasePoint& p) { return cplx{p.n()[i]}; }, rule);
            CHECK(std::abs(m1) < 1e-12);
            for (int j = 0; j < 3; ++j) {
                const cplx m2 = integrate(
                    [i, j](const PhasePoint& p) {
                        return cplx{p.n()[i] * p.n()[j]};
                    },
                    rule);
                CHECK(std::abs(m2 - (i == j ? 2.0 / 3.0 : 0.0)) < 1e-12);
            }
        }
    }
}

TEST_CASE("quadrature is exact at the stated degree") {
    // cos^4(theta) needs n_theta >= 3; integral of n3^4 dOmega = 2/5
    const QuadratureRule rule = gauss_legendre_sphere(3, 2);
    const cplx v = integrate(
        [](const PhasePoint& p) { return cplx{std::pow(p.n()[2], 4)}; }, rule);
    CHECK(std::abs(v - 0.4) < 1e-13);
}

TEST_CASE("integrate rejects non-finite values") {
    const QuadratureRule rule = gauss_legendre_sphere(2, 3);
    CHECK_THROWS_AS(
        integrate([](const PhasePoint&) { return cplx{std::nan("")}; }, rule),
        std::runtime_error);
}

TEST_CASE("numeric poisson bracket of coordinate functions") {
    auto n1 = [](const PhasePoint& p) { return p.n()[0]; };
    auto n2 = [](const PhasePoint& p) { return p.n()[1]; };
    const double s3 = std::sqrt(3.0);
    // {n1,n2} = (2/sqrt3) n3
    CHECK(std::abs(poisson_bracket_numeric(n1, n2, PhasePoint(kPi / 2, 0.0))) <
          1e-8);
    CHECK(poisson_bracket_numeric(n1, n2, PhasePoint(kPi / 4, 0.0)) ==
          doctest::Approx((2.0 / s3) * std::cos(kPi / 4)).epsilon(1e-8));
    // f = g
    CHECK(std::abs(poisson_bracket_numeric(n1, n1, PhasePoint(1.0, 2.0))) <
          1e-10);
}

TEST_CASE("numeric bracket agrees with the affine coefficient bracket") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        Symbol f{cplx{u(rng)}, {cplx{u(rng)}, cplx{u(rng)}, cplx{u(rng)}}};
        Symbol g{cplx{u(rng)}, {cplx{u(rng)}, cplx{u(rng)}, cplx{u(rng)}}};
        const PhasePoint p = random_point(rng);
        if (std::sin(p.theta) < 1e-3) continue;
        const double numeric = poisson_bracket_numeric(
            [&](const PhasePoint& q) { return symbol_eval(f, q).real(); },
            [&](const PhasePoint& q) { return symbol_eval(g, q).real(); }, p);
        const double affine = symbol_eval(poisson_bracket_affine(f, g), p).real();
        CHECK(std::abs(numeric - affine) < 1e-6);
    }
}

TEST_CASE("numeric bracket near the pole falls back to the ambient form") {
    auto n1 = [](const PhasePoint& p) { return p.n()[0]; };
    auto n2 = [](const PhasePoint& p) { return p.n()[1]; };
    const double s3 = std::sqrt(3.0);
    const double v = poisson_bracket_numeric(n1, n2, PhasePoint(1e-9, 0.3));
    CHECK(v == doctest::Approx(2.0 / s3).epsilon(1e-4));
}
