#include "qsphere/sw.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace qsphere {

namespace {
const double kSqrt3 = std::sqrt(3.0);
constexpr cplx I{0.0, 1.0};
}  // namespace

Symbol operator+(const Symbol& a, const Symbol& b) {
    return {a.c0 + b.c0, a.c + b.c};
}
Symbol operator-(const Symbol& a, const Symbol& b) {
    return {a.c0 - b.c0, a.c - b.c};
}
Symbol operator*(cplx s, const Symbol& a) { return {s * a.c0, s * a.c}; }

double coeff_norm(const Symbol& a) {
    double r = std::abs(a.c0);
    for (const auto& e : a.c) r = std::max(r, std::abs(e));
    return r;
}

bool has_real_coefficients(const Symbol& a, double tol) {
    if (std::abs(a.c0.imag()) > tol) return false;
    for (const auto& e : a.c)
        if (std::abs(e.imag()) > tol) return false;
    return true;
}

cplx symbol_eval(const Symbol& W, const PhasePoint& p) {
    return W.c0 + kSqrt3 * dot(W.c, to_complex(p.n()));
}

Matrix2 sw_kernel(const PhasePoint& p) {
    const Vec3 n = p.n();
    PauliCoefficients c;
    c.a0 = 0.5;
    for (int i = 0; i < 3; ++i) c.a[i] = 0.5 * kSqrt3 * n[i];
    return pauli_compose(c);
}

Matrix2 parity_operator() {
    return identity2() + kSqrt3 * cplx{1} * sigma_z();
}

Matrix2 kernel_from_rotation(double phi, double theta, double Phi) {
    const Matrix2 U = euler_rotation(phi, theta, Phi);
    return 0.5 * cplx{1} * (U * parity_operator() * dagger(U));
}

Symbol symbol_of(const Matrix2& A) {
    const PauliCoefficients c = pauli_decompose(A);
    return {c.a0, c.a};
}

Matrix2 reconstruct(const Symbol& W, const QuadratureRule& rule) {
    Matrix2 acc = zero2();
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const cplx w = symbol_eval(W, rule.nodes[i]);
        acc = acc + (rule.weights[i] * w) * sw_kernel(rule.nodes[i]);
    }
    return acc;
}

bool AxiomReport::all_pass() const {
    for (const auto& [name, c] : axioms)
        if (!c.pass) return false;
    return true;
}

namespace {

Matrix2 random_operator(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix2 M;
    for (auto& e : M.m) e = cplx{u(rng), u(rng)};
    return M;
}

// Haar-distributed g in SU(2): uniform phases plus uniform cos(theta).
Matrix2 random_su2(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double phi = 2.0 * std::numbers::pi * u01(rng);
    const double theta = std::acos(1.0 - 2.0 * u01(rng));
    const double Phi = 4.0 * std::numbers::pi * u01(rng);
    return euler_rotation(phi, theta, Phi);
}

PhasePoint random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    return PhasePoint(std::acos(1.0 - 2.0 * u01(rng)),
                      2.0 * std::numbers::pi * u01(rng));
}

}  // namespace

AxiomReport check_axioms(int samples, const QuadratureRule& rule,
                         std::uint64_t seed, double tol) {
    if (samples < 1)
        throw std::invalid_argument("check_axioms: samples must be >= 1");
    std::mt19937_64 rng(seed);

    double dev_bijection = 0.0, dev_hermiticity = 0.0, dev_standardization = 0.0,
           dev_traciality = 0.0, dev_covariance = 0.0;

    // kernel normalization: integral of Delta dOmega = 1
    dev_standardization = max_norm(
        reconstruct(Symbol{cplx{1}, {}}, rule) - identity2());

    for (int s = 0; s < samples; ++s) {
        const Matrix2 A = random_operator(rng);
        const Matrix2 B = random_operator(rng);
        const Symbol WA = symbol_of(A);
        const Symbol WB = symbol_of(B);

        // (1) bijection round-trip
        dev_bijection = std::max(dev_bijection,
                                 max_norm(reconstruct(WA, rule) - A));

        // (2) kernel Hermiticity at a random point
        const PhasePoint p = random_point(rng);
        const Matrix2 D = sw_kernel(p);
        dev_hermiticity = std::max(dev_hermiticity, max_norm(D - dagger(D)));

        // (3) integral of W_A equals tr A
        const cplx intWA = integrate(
            [&](const PhasePoint& q) { return symbol_eval(WA, q); }, rule);
        dev_standardization = std::max(dev_standardization,
                                       std::abs(intWA - trace(A)));

        // (4) traciality
        const cplx intWAWB = integrate(
            [&](const PhasePoint& q) {
                return symbol_eval(WA, q) * symbol_eval(WB, q);
            },
            rule);
        dev_traciality = std::max(dev_traciality,
                                  std::abs(intWAWB - trace(A * B)));

        // (5) covariance: Delta(R(g) n) = U(g) Delta(n) U(g)^dagger
        const Matrix2 g = random_su2(rng);
        const Vec3 gn = rotate(rotation_of(g), p.n());
        const PhasePoint gp(std::acos(std::clamp(gn[2], -1.0, 1.0)),
                            std::atan2(gn[1], gn[0]));
        dev_covariance = std::max(dev_covariance,
                                  max_norm(sw_kernel(gp) - g * D * dagger(g)));
    }

    AxiomReport report;
    auto put = [&](const std::string& name, double dev) {
        report.axioms[name] = AxiomCheck{dev, tol, dev < tol};
    };
    put("bijection", dev_bijection);
    put("hermiticity", dev_hermiticity);
    put("standardization", dev_standardization);
    put("traciality", dev_traciality);
    put("covariance", dev_covariance);
    return report;
}

}  // namespace qsphere
