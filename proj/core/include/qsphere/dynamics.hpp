#pragma once

// Propagators and transition probabilities: coefficient-exact contraction,
// quadrature of the phase-space propagator integral, the matrix-element
// oracle, and the Rabi scan.

#include <vector>

#include "qsphere/star.hpp"

namespace qsphere {

struct QubitState {
    cplx up{};    // amplitude on |0> = spin up along z
    cplx down{};  // amplitude on |1>

    QubitState() = default;
    // Normalizes; zero-norm input is an error.
    QubitState(cplx up_in, cplx down_in);
};

inline QubitState spin_up_z() { return QubitState{cplx{1}, cplx{}}; }
inline QubitState spin_down_z() { return QubitState{cplx{}, cplx{1}}; }

cplx inner(const QubitState& bra, const QubitState& ket);

struct TransitionPair {
    QubitState initial;
    QubitState final;
};

struct RabiConfig {
    double gamma{1.0};
    double B{1.0};
    Vec3 axis{1.0, 0.0, 0.0};
    double hbar{1.0};
};

// H = -(gamma B / 2) axis . sigma
Matrix2 rabi_hamiltonian(const RabiConfig& cfg);

// Symbol of |psi_0><psi_f|: c0 = <psi_f|psi_0>/2, c = <psi_f|sigma|psi_0>/2.
// Pairing this with the evolution symbol under traciality yields
// K = <psi_f|U|psi_0> = tr(U |psi_0><psi_f|).
Symbol transition_symbol(const TransitionPair& pair);

// 2 (r0 u0 + r.u): the traciality pairing of the transition symbol with
// the closed-form star exponential.
cplx propagator_exact(const TransitionPair& pair, const Matrix2& H, double t,
                      double hbar = 1.0);

// Quadrature of W_rho(n) Exp_*(-i t W_H / hbar)(n) dOmega.
cplx propagator_quadrature(const TransitionPair& pair, const Matrix2& H,
                           double t, double hbar, const QuadratureRule& rule);

// <psi_f| exp(-i H t / hbar) |psi_0>: ground truth for the other routes.
cplx propagator_oracle(const TransitionPair& pair, const Matrix2& H, double t,
                       double hbar = 1.0);

struct RabiSample {
    double t{};
    cplx K{};
    double probability{};
};

std::vector<RabiSample> rabi_scan(const RabiConfig& cfg,
                                  const TransitionPair& pair,
                                  const std::vector<double>& times);

}  // namespace qsphere
