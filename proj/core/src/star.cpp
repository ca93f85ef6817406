#include "qsphere/star.hpp"

#include <cmath>

namespace qsphere {

namespace {
constexpr cplx I{0.0, 1.0};
}

Symbol star(const Symbol& WA, const Symbol& WB) {
    Symbol r;
    r.c0 = WA.c0 * WB.c0 + dot(WA.c, WB.c);
    r.c = WA.c0 * WB.c + WB.c0 * WA.c + I * cross(WA.c, WB.c);
    return r;
}

ComplexQuaternion quaternion_product(const ComplexQuaternion& qA,
                                     const ComplexQuaternion& qB) {
    ComplexQuaternion r;
    r.scalar = qA.scalar * qB.scalar - dot(qA.vector, qB.vector);
    r.vector = qA.scalar * qB.vector + qB.scalar * qA.vector +
               cross(qA.vector, qB.vector);
    return r;
}

ComplexQuaternion to_quaternion(const Symbol& W) {
    return {W.c0, I * W.c};
}

Symbol from_quaternion(const ComplexQuaternion& q) {
    return {q.scalar, -I * q.vector};
}

Symbol moyal_bracket(const Symbol& WA, const Symbol& WB) {
    return {cplx{}, (2.0 * I) * cross(WA.c, WB.c)};
}

Symbol poisson_bracket_affine(const Symbol& f, const Symbol& g) {
    return {cplx{}, cplx{2.0} * cross(f.c, g.c)};
}

StarSeriesResult star_exponential_series(const Symbol& WH, double tau,
                                         double hbar, double tol,
                                         int max_terms) {
    if (tol <= 0.0)
        throw std::invalid_argument("star_exponential_series: tol must be > 0");
    const cplx z = -I * tau / hbar;
    Symbol term{cplx{1}, {}};
    Symbol sum = term;
    for (int k = 1; k <= max_terms; ++k) {
        term = (z / static_cast<double>(k)) * star(term, WH);
        const double tn = coeff_norm(term);
        sum = sum + term;
        if (tn < tol)
            return {sum, k, tn};
    }
    throw star_series_truncation_error(
        "star_exponential_series: max_terms exceeded before tolerance",
        coeff_norm(term));
}

Symbol star_exponential_closed(const Symbol& WH, double tau, double hbar) {
    if (!has_real_coefficients(WH))
        throw std::invalid_argument(
            "star_exponential_closed: coefficients must be real (use the "
            "series path for non-Hermitian generators)");
    const double h0 = WH.c0.real();
    const Vec3 h{WH.c[0].real(), WH.c[1].real(), WH.c[2].real()};
    const double hn = norm(h);
    const cplx phase = std::exp(-I * h0 * tau / hbar);
    const double alpha = hn * tau / hbar;
    Symbol r;
    if (std::abs(alpha) < 1e-12) {
        r.c0 = phase;
        for (int i = 0; i < 3; ++i) r.c[i] = phase * (-I * tau / hbar) * h[i];
        return r;
    }
    const Vec3 hat = (1.0 / hn) * h;
    r.c0 = phase * std::cos(alpha);
    for (int i = 0; i < 3; ++i)
        r.c[i] = phase * (-I * std::sin(alpha)) * hat[i];
    return r;
}

}  // namespace qsphere
