#include "qsphere/path_integral.hpp"

#include <cmath>

namespace qsphere {

namespace {
constexpr cplx I{0.0, 1.0};

cplx matrix_element(const Matrix2& M, const CoherentState& bra,
                    const CoherentState& ket) {
    const cplx v0 = M(0, 0) * ket.up + M(0, 1) * ket.down;
    const cplx v1 = M(1, 0) * ket.up + M(1, 1) * ket.down;
    return std::conj(bra.up) * v0 + std::conj(bra.down) * v1;
}

// Contravariant (upper) symbol of H: the weight whose smearing through the
// resolution of identity reproduces H.  For spin-1/2 the traceless part
// carries a factor 3 relative to the Berezin symbol.
double upper_symbol(const PauliCoefficients& h, const CoherentState& z) {
    const Vec3 n = z.point.n();
    return h.a0.real() +
           3.0 * (h.a[0].real() * n[0] + h.a[1].real() * n[1] +
                  h.a[2].real() * n[2]);
}
}  // namespace

CoherentState coherent_state(double theta, double phi) {
    const PhasePoint p(theta, phi);
    CoherentState z;
    z.point = p;
    z.up = std::cos(p.theta / 2.0);
    z.down = std::exp(I * p.phi) * std::sin(p.theta / 2.0);
    return z;
}

BlochDecomposition to_coherent(const QubitState& psi) {
    BlochDecomposition d;
    const double theta = 2.0 * std::atan2(std::abs(psi.down), std::abs(psi.up));
    if (std::abs(psi.up) > 1e-15) {
        d.global_phase = std::arg(psi.up);
        d.state = coherent_state(theta, std::arg(psi.down) - std::arg(psi.up));
    } else {
        d.global_phase = std::arg(psi.down);
        d.state = coherent_state(theta, 0.0);
    }
    return d;
}

cplx overlap(const CoherentState& zf, const CoherentState& zi) {
    return std::conj(zf.up) * zi.up + std::conj(zf.down) * zi.down;
}

double resolution_check(const QuadratureRule& rule) {
    Matrix2 acc = zero2();
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const CoherentState z =
            coherent_state(rule.nodes[i].theta, rule.nodes[i].phi);
        Matrix2 proj;
        proj(0, 0) = z.up * std::conj(z.up);
        proj(0, 1) = z.up * std::conj(z.down);
        proj(1, 0) = z.down * std::conj(z.up);
        proj(1, 1) = z.down * std::conj(z.down);
        acc = acc + (cplx{rule.weights[i]}) * proj;
    }
    return max_norm(acc - identity2());
}

double berezin_symbol(const Matrix2& H, const CoherentState& z) {
    if (!is_hermitian(H, 1e-10))
        throw std::invalid_argument("berezin_symbol: H must be Hermitian");
    return matrix_element(H, z, z).real();
}

SlicedResult sliced_propagator(const TransitionPair& pair, const Matrix2& H,
                               double t, double hbar,
                               const SlicingConfig& cfg) {
    if (cfg.n_slices < 1)
        throw std::invalid_argument("sliced_propagator: n_slices must be >= 1");
    if (!is_hermitian(H, 1e-10))
        throw std::invalid_argument("sliced_propagator: H must be Hermitian");

    const int N = cfg.n_slices;
    const double eps = t / N;
    const PauliCoefficients h = pauli_decompose(H);
    const Matrix2 H2 = H * H;

    const BlochDecomposition zi = to_coherent(pair.initial);
    const BlochDecomposition zf = to_coherent(pair.final);

    const std::size_t M = cfg.rule.size();
    std::vector<CoherentState> grid;
    grid.reserve(M);
    for (const auto& p : cfg.rule.nodes)
        grid.push_back(coherent_state(p.theta, p.phi));

    // One slice factor approximating <bra| exp(-i eps H / hbar) |ket>.
    auto slice = [&](const CoherentState& bra, const CoherentState& ket) {
        switch (cfg.ordering) {
            case Ordering::left:
                return std::exp(-I * eps * upper_symbol(h, bra) / hbar) *
                       overlap(bra, ket);
            case Ordering::right:
                return overlap(bra, ket) *
                       std::exp(-I * eps * upper_symbol(h, ket) / hbar);
            case Ordering::symmetric:
                // second-order expansion of the slice matrix element
                return overlap(bra, ket) -
                       (I * eps / hbar) * matrix_element(H, bra, ket) -
                       (eps * eps / (2.0 * hbar * hbar)) *
                           matrix_element(H2, bra, ket);
        }
        throw std::logic_error("sliced_propagator: bad ordering");
    };

    SlicedResult result;
    result.resolution_deviation = resolution_check(cfg.rule);
    result.dropped_phase_initial = zi.global_phase;
    result.dropped_phase_final = zf.global_phase;

    cplx K;
    if (N == 1) {
        K = slice(zf.state, zi.state);
    } else {
        std::vector<cplx> v(M);
        for (std::size_t q = 0; q < M; ++q) v[q] = slice(grid[q], zi.state);
        if (N > 2) {
            std::vector<cplx> T(M * M);
            for (std::size_t p = 0; p < M; ++p)
                for (std::size_t q = 0; q < M; ++q)
                    T[p * M + q] = slice(grid[p], grid[q]) * cfg.rule.weights[q];
            std::vector<cplx> next(M);
            for (int step = 0; step < N - 2; ++step) {
                for (std::size_t p = 0; p < M; ++p) {
                    cplx s{};
                    for (std::size_t q = 0; q < M; ++q) s += T[p * M + q] * v[q];
                    next[p] = s;
                }
                v.swap(next);
            }
        }
        K = cplx{};
        for (std::size_t q = 0; q < M; ++q)
            K += cfg.rule.weights[q] * slice(zf.state, grid[q]) * v[q];
    }

    // restore the global phases dropped by the Bloch conversion
    result.value = std::exp(I * (zi.global_phase - zf.global_phase)) * K;
    return result;
}

cplx discrete_action(const DiscretePath& path, const Matrix2& H, double hbar) {
    if (path.points.size() < 2)
        throw std::invalid_argument("discrete_action: need at least 2 points");
    if (path.times.size() != path.points.size())
        throw std::invalid_argument("discrete_action: times/points mismatch");
    for (std::size_t k = 0; k + 1 < path.times.size(); ++k)
        if (!(path.times[k + 1] > path.times[k]))
            throw std::invalid_argument(
                "discrete_action: times must be strictly increasing");

    cplx S{};
    for (std::size_t k = 0; k + 1 < path.points.size(); ++k) {
        const CoherentState zk =
            coherent_state(path.points[k].theta, path.points[k].phi);
        const CoherentState zk1 =
            coherent_state(path.points[k + 1].theta, path.points[k + 1].phi);
        const cplx ov = overlap(zk1, zk);
        if (std::abs(ov) <= 1e-6)
            throw std::domain_error(
                "discrete_action: singular path (consecutive overlap ~ 0)");
        const double dt = path.times[k + 1] - path.times[k];
        S += -I * hbar * std::log(ov) - berezin_symbol(H, zk) * dt;
    }
    return S;
}

double berry_phase(const DiscretePath& loop) {
    if (loop.points.size() < 2)
        throw std::invalid_argument("berry_phase: need at least 2 points");
    const Vec3 first = loop.points.front().n();
    const Vec3 last = loop.points.back().n();
    if (norm(first - last) > 1e-12)
        throw std::invalid_argument("berry_phase: path is not closed");

    double phase = 0.0;
    for (std::size_t k = 0; k + 1 < loop.points.size(); ++k) {
        const CoherentState zk =
            coherent_state(loop.points[k].theta, loop.points[k].phi);
        const CoherentState zk1 =
            coherent_state(loop.points[k + 1].theta, loop.points[k + 1].phi);
        const cplx ov = overlap(zk1, zk);
        if (std::abs(ov) <= 1e-6)
            throw std::domain_error("berry_phase: consecutive overlap ~ 0");
        phase += std::arg(ov);
    }
    return phase;
}

}  // namespace qsphere
