#pragma once

// The sphere as phase space: points, tangent vectors, the KKS symplectic
// form, numeric Poisson brackets, and the Gauss-Legendre quadrature that
// backs every integral in the library.  The measure throughout is
// dOmega = (1/2pi) sin(theta) dtheta dphi, total mass 2.

#include <functional>
#include <vector>

#include "qsphere/su2.hpp"

namespace qsphere {

struct PhasePoint {
    double theta{};  // polar, [0, pi]
    double phi{};    // azimuthal, [0, 2pi)

    PhasePoint() = default;
    // Any real angles are accepted and reduced to the canonical ranges.
    PhasePoint(double theta_in, double phi_in);

    Vec3 n() const;
};

struct TangentVector {
    PhasePoint base;
    Vec3 v{};  // |v . n| must stay below tolerance

    TangentVector(const PhasePoint& p, const Vec3& v_in, double tol = kDefaultTol);
};

// Evaluation of omega_KKS = (1/2|x|^2) eps_ijk x_i dx_j ^ dx_k on (u, v):
// (1/|x|^2) x . (u x v).  u and v must be tangent at x.
double kks_form(const Vec3& x, const Vec3& u, const Vec3& v,
                double tangency_tol = 1e-9);

struct QuadratureRule {
    std::vector<PhasePoint> nodes;
    std::vector<double> weights;  // sum = 2

    std::size_t size() const { return nodes.size(); }
};

// Gauss-Legendre in cos(theta) tensored with a uniform phi grid; exact for
// polynomials of degree <= 2*n_theta-1 in cos(theta) times trigonometric
// polynomials of degree < n_phi in phi.
QuadratureRule gauss_legendre_sphere(int n_theta, int n_phi);

using ScalarField = std::function<cplx(const PhasePoint&)>;
using RealField = std::function<double(const PhasePoint&)>;

cplx integrate(const ScalarField& f, const QuadratureRule& rule);

// (2/sqrt3) (1/sin th)(d_th f d_ph g - d_th g d_ph f) with central finite
// differences; near the poles (sin th < 1e-8) falls back to the chart-free
// cross-product form with ambient gradients projected to the tangent plane.
double poisson_bracket_numeric(const RealField& f, const RealField& g,
                               const PhasePoint& p, double step = 1e-5);

}  // namespace qsphere
