#pragma once

// The Stratonovich-Weyl kernel for a qubit, the symbol map and its
// inverse, and executable versions of the five SW postulates.

#include <map>
#include <string>

#include "qsphere/sphere.hpp"
#include "qsphere/su2.hpp"

namespace qsphere {

// Affine phase-space function W(n) = c0 + sqrt3 * c.n, stored exactly by
// its coefficients.  Closed under the star product.
struct Symbol {
    cplx c0{};
    CVec3 c{};
};

Symbol operator+(const Symbol& a, const Symbol& b);
Symbol operator-(const Symbol& a, const Symbol& b);
Symbol operator*(cplx s, const Symbol& a);
double coeff_norm(const Symbol& a);  // max of |c0|, |c_i|
bool has_real_coefficients(const Symbol& a, double tol = kDefaultTol);

cplx symbol_eval(const Symbol& W, const PhasePoint& p);

// Delta(n) = (1/2)(1 + sqrt3 n.sigma)
Matrix2 sw_kernel(const PhasePoint& p);

// Pi_q = 1 + sqrt3 sigma_z
Matrix2 parity_operator();

// (1/2) U(phi,theta,Phi) Pi_q U(phi,theta,Phi)^dagger; Phi-independent.
Matrix2 kernel_from_rotation(double phi, double theta, double Phi);

Symbol symbol_of(const Matrix2& A);

// quadrature of W(p) Delta(p) dOmega; inverse of symbol_of for rules exact
// to degree >= 2 in n.
Matrix2 reconstruct(const Symbol& W, const QuadratureRule& rule);

struct AxiomCheck {
    double max_dev{};
    double tol{};
    bool pass{};
};

struct AxiomReport {
    // keys: bijection, hermiticity, standardization, traciality, covariance
    std::map<std::string, AxiomCheck> axioms;

    bool all_pass() const;
};

AxiomReport check_axioms(int samples, const QuadratureRule& rule,
                         std::uint64_t seed, double tol = 1e-11);

}  // namespace qsphere
