#include "qsphere/dynamics.hpp"

#include <cmath>

namespace qsphere {

QubitState::QubitState(cplx up_in, cplx down_in) {
    const double n = std::sqrt(std::norm(up_in) + std::norm(down_in));
    if (n < 1e-300)
        throw std::invalid_argument("QubitState: zero-norm state");
    up = up_in / n;
    down = down_in / n;
}

cplx inner(const QubitState& bra, const QubitState& ket) {
    return std::conj(bra.up) * ket.up + std::conj(bra.down) * ket.down;
}

Matrix2 rabi_hamiltonian(const RabiConfig& cfg) {
    if (std::abs(norm(cfg.axis) - 1.0) > 1e-9)
        throw std::invalid_argument("rabi_hamiltonian: axis must be a unit vector");
    PauliCoefficients c;
    const double s = -cfg.gamma * cfg.B / 2.0;
    for (int i = 0; i < 3; ++i) c.a[i] = s * cfg.axis[i];
    return pauli_compose(c);
}

Symbol transition_symbol(const TransitionPair& pair) {
    const QubitState& f = pair.final;
    const QubitState& i = pair.initial;
    Symbol W;
    W.c0 = 0.5 * inner(f, i);
    for (int k = 0; k < 3; ++k) {
        const Matrix2 s = pauli(k + 1);
        const QubitState si{s(0, 0) * i.up + s(0, 1) * i.down,
                            s(1, 0) * i.up + s(1, 1) * i.down};
        W.c[k] = 0.5 * inner(f, si);
    }
    return W;
}

cplx propagator_exact(const TransitionPair& pair, const Matrix2& H, double t,
                      double hbar) {
    if (!is_hermitian(H, 1e-10))
        throw std::invalid_argument("propagator_exact: H must be Hermitian");
    const Symbol r = transition_symbol(pair);
    const Symbol u = star_exponential_closed(symbol_of(H), t, hbar);
    return 2.0 * (r.c0 * u.c0 + dot(r.c, u.c));
}

cplx propagator_quadrature(const TransitionPair& pair, const Matrix2& H,
                           double t, double hbar, const QuadratureRule& rule) {
    if (!is_hermitian(H, 1e-10))
        throw std::invalid_argument("propagator_quadrature: H must be Hermitian");
    const Symbol r = transition_symbol(pair);
    const Symbol u = star_exponential_closed(symbol_of(H), t, hbar);
    return integrate(
        [&](const PhasePoint& p) {
            return symbol_eval(r, p) * symbol_eval(u, p);
        },
        rule);
}

cplx propagator_oracle(const TransitionPair& pair, const Matrix2& H, double t,
                       double hbar) {
    const Matrix2 U = exp_su2(H, t, hbar);
    const QubitState& i = pair.initial;
    const QubitState Ui{U(0, 0) * i.up + U(0, 1) * i.down,
                        U(1, 0) * i.up + U(1, 1) * i.down};
    return inner(pair.final, Ui);
}

std::vector<RabiSample> rabi_scan(const RabiConfig& cfg,
                                  const TransitionPair& pair,
                                  const std::vector<double>& times) {
    if (times.empty())
        throw std::invalid_argument("rabi_scan: times must be nonempty");
    const Matrix2 H = rabi_hamiltonian(cfg);
    std::vector<RabiSample> out;
    out.reserve(times.size());
    for (double t : times) {
        const cplx K = propagator_exact(pair, H, t, cfg.hbar);
        out.push_back({t, K, std::norm(K)});
    }
    return out;
}

}  // namespace qsphere
