#include "qsphere/sphere.hpp"

#include <cmath>
#include <numbers>

namespace qsphere {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double mod_positive(double x, double period) {
    double r = std::fmod(x, period);
    if (r < 0) r += period;
    return r;
}
}  // namespace

PhasePoint::PhasePoint(double theta_in, double phi_in) {
    double th = mod_positive(theta_in, kTwoPi);
    double ph = phi_in;
    if (th > kPi) {
        th = kTwoPi - th;
        ph += kPi;
    }
    theta = th;
    phi = mod_positive(ph, kTwoPi);
}

Vec3 PhasePoint::n() const {
    const double st = std::sin(theta);
    return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

TangentVector::TangentVector(const PhasePoint& p, const Vec3& v_in, double tol)
    : base(p), v(v_in) {
    if (std::abs(dot(v, p.n())) > tol * std::max(1.0, norm(v)))
        throw std::invalid_argument("TangentVector: v is not tangent at base");
}

double kks_form(const Vec3& x, const Vec3& u, const Vec3& v, double tangency_tol) {
    const double xn = norm(x);
    if (xn == 0.0)
        throw std::domain_error("kks_form: singular at x = 0");
    if (std::abs(dot(u, x)) > tangency_tol * xn * std::max(1.0, norm(u)) ||
        std::abs(dot(v, x)) > tangency_tol * xn * std::max(1.0, norm(v)))
        throw std::invalid_argument("kks_form: u or v not tangent at x");
    return dot(x, cross(u, v)) / (xn * xn);
}

QuadratureRule gauss_legendre_sphere(int n_theta, int n_phi) {
    if (n_theta < 1 || n_phi < 1)
        throw std::invalid_argument("gauss_legendre_sphere: counts must be >= 1");

    // Gauss-Legendre nodes/weights on [-1,1] by Newton iteration.
    std::vector<double> x(n_theta), w(n_theta);
    for (int i = 0; i < n_theta; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n_theta + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 0; k < n_theta; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k + 1.0) * z * p1 - k * p2) / (k + 1.0);
            }
            pp = n_theta * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }

    QuadratureRule rule;
    rule.nodes.reserve(static_cast<std::size_t>(n_theta) * n_phi);
    rule.weights.reserve(static_cast<std::size_t>(n_theta) * n_phi);
    for (int i = 0; i < n_theta; ++i) {
        const double theta = std::acos(x[i]);
        for (int j = 0; j < n_phi; ++j) {
            rule.nodes.emplace_back(theta, kTwoPi * j / n_phi);
            rule.weights.push_back(w[i] / n_phi);
        }
    }
    return rule;
}

cplx integrate(const ScalarField& f, const QuadratureRule& rule) {
    cplx sum{};
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const cplx v = f(rule.nodes[i]);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::runtime_error("integrate: non-finite integrand value");
        sum += rule.weights[i] * v;
    }
    return sum;
}

double poisson_bracket_numeric(const RealField& f, const RealField& g,
                               const PhasePoint& p, double step) {
    const double sqrt3 = std::sqrt(3.0);
    const double st = std::sin(p.theta);
    if (st < 1e-8) {
        // Pole chart is degenerate; use ambient gradients of the radial
        // extension F(x) = f(x/|x|), projected to the tangent plane.
        auto ambient_grad = [&](const RealField& h) {
            Vec3 grad{};
            const Vec3 n0 = p.n();
            for (int k = 0; k < 3; ++k) {
                Vec3 xp = n0, xm = n0;
                xp[k] += step;
                xm[k] -= step;
                const auto at = [&](const Vec3& x) {
                    const double r = norm(x);
                    const PhasePoint q(std::acos(x[2] / r),
                                       std::atan2(x[1], x[0]));
                    return h(q);
                };
                grad[k] = (at(xp) - at(xm)) / (2.0 * step);
            }
            const Vec3 n0v = p.n();
            return grad - dot(grad, n0v) * n0v;
        };
        const Vec3 gf = ambient_grad(f);
        const Vec3 gg = ambient_grad(g);
        return (2.0 / sqrt3) * dot(p.n(), cross(gf, gg));
    }
    auto d_theta = [&](const RealField& h) {
        return (h(PhasePoint(p.theta + step, p.phi)) -
                h(PhasePoint(p.theta - step, p.phi))) / (2.0 * step);
    };
    auto d_phi = [&](const RealField& h) {
        return (h(PhasePoint(p.theta, p.phi + step)) -
                h(PhasePoint(p.theta, p.phi - step))) / (2.0 * step);
    };
    return (2.0 / sqrt3) / st *
           (d_theta(f) * d_phi(g) - d_theta(g) * d_phi(f));
}

}  // namespace qsphere
