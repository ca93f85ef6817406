#pragma once

// The exact star product on affine symbols, its quaternion realization,
// the Moyal bracket, and star exponentials (closed form and series).

#include "qsphere/sw.hpp"

namespace qsphere {

// W_A * W_B: c0 = a0 b0 + a.b, c = a0 b + b0 a + i a x b.  Mirrors the
// operator product through the symbol map, coefficient-exact.
Symbol star(const Symbol& WA, const Symbol& WB);

// q = s + v with i^2 = j^2 = k^2 = -1, ij = k; components complex.
struct ComplexQuaternion {
    cplx scalar{};
    CVec3 vector{};
};

ComplexQuaternion quaternion_product(const ComplexQuaternion& qA,
                                     const ComplexQuaternion& qB);

// q_A = a0 + i a
ComplexQuaternion to_quaternion(const Symbol& W);
Symbol from_quaternion(const ComplexQuaternion& q);

// {W_A, W_B}_M = W_A * W_B - W_B * W_A = 2i (a x b) as vector part.
Symbol moyal_bracket(const Symbol& WA, const Symbol& WB);

// Moyal bracket with the factor of i removed; the Lie-Poisson bracket on
// affine symbols induced by the KKS form.
Symbol poisson_bracket_affine(const Symbol& f, const Symbol& g);

struct StarSeriesResult {
    Symbol value;
    int terms_used{};
    double truncation_estimate{};
};

class star_series_truncation_error : public std::runtime_error {
  public:
    star_series_truncation_error(const std::string& what, double estimate)
        : std::runtime_error(what), estimate_(estimate) {}
    double estimate() const { return estimate_; }

  private:
    double estimate_;
};

// Partial sums of sum_k (-i tau / hbar)^k / k! W_H^{*k}; stops when the
// coefficient norm of the next term drops below tol.
StarSeriesResult star_exponential_series(const Symbol& WH, double tau,
                                         double hbar = 1.0, double tol = 1e-12,
                                         int max_terms = 200);

// Closed form of Exp_*(-i tau W_H / hbar) for real-coefficient W_H,
// fixed by the homomorphism to the 2x2 matrix exponential.
Symbol star_exponential_closed(const Symbol& WH, double tau, double hbar = 1.0);

}  // namespace qsphere
