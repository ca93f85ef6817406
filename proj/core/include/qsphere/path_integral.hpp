#pragma once

// SU(2) coherent states, the Berezin symbol, the discretized action with
// its geometric phase, and the time-sliced transfer-matrix propagator.

#include <vector>

#include "qsphere/dynamics.hpp"

namespace qsphere {

struct CoherentState {
    PhasePoint point;
    cplx up{};    // cos(theta/2)
    cplx down{};  // e^{i phi} sin(theta/2)
};

CoherentState coherent_state(double theta, double phi);

// Every qubit state is a coherent state up to a global phase; the dropped
// phase is returned so callers can restore it.
struct BlochDecomposition {
    CoherentState state;
    double global_phase{};  // psi = e^{i global_phase} |zeta>
};
BlochDecomposition to_coherent(const QubitState& psi);

cplx overlap(const CoherentState& zf, const CoherentState& zi);

// || integral of |zeta><zeta| dOmega - 1 ||
double resolution_check(const QuadratureRule& rule);

// <zeta|H|zeta>; for H = h0 + h.sigma this is h0 + h.n.
double berezin_symbol(const Matrix2& H, const CoherentState& z);

enum class Ordering { left, right, symmetric };

struct SlicingConfig {
    int n_slices{1};
    QuadratureRule rule;
    Ordering ordering{Ordering::symmetric};
};

struct SlicedResult {
    cplx value{};
    double resolution_deviation{};  // warning channel for under-resolved rules
    double dropped_phase_initial{};
    double dropped_phase_final{};
};

// Transfer-matrix evaluation of the time-sliced coherent-state path
// integral with N - 1 inserted resolutions of the identity.  Converges to
// propagator_oracle as N grows: first order for left/right ordering,
// second order for symmetric.
SlicedResult sliced_propagator(const TransitionPair& pair, const Matrix2& H,
                               double t, double hbar, const SlicingConfig& cfg);

struct DiscretePath {
    std::vector<PhasePoint> points;
    std::vector<double> times;  // strictly increasing, same length
};

// sum_k [ -i hbar ln<zeta_{k+1}|zeta_k> - H_B(zeta_k) dt_k ]; the real
// part of the H = 0 piece is hbar times the geometric phase, the
// imaginary part measures discretization leakage.
cplx discrete_action(const DiscretePath& path, const Matrix2& H,
                     double hbar = 1.0);

// sum_k arg<zeta_{k+1}|zeta_k> over a closed loop; minus half the
// enclosed solid angle in the refinement limit.
double berry_phase(const DiscretePath& loop);

}  // namespace qsphere
