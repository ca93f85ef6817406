// Command-line surface for the phase-space qubit library.
//
// Exit codes: 0 success, 1 a requested check failed its tolerance,
// 2 input parse error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "qsphere/json_io.hpp"
#include "qsphere/path_integral.hpp"

using namespace qsphere;

namespace {

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

json rule_meta(int ntheta, int nphi) {
    return json{{"ntheta", ntheta}, {"nphi", nphi}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_symbol(const std::string& a_arg) {
    emit(json{{"symbol", to_json(symbol_of(parse_matrix_arg(a_arg)))}});
    return 0;
}

int cmd_star(const std::string& a_arg, const std::string& b_arg) {
    const Symbol wa = symbol_of(parse_matrix_arg(a_arg));
    const Symbol wb = symbol_of(parse_matrix_arg(b_arg));
    emit(json{{"symbol", to_json(star(wa, wb))}});
    return 0;
}

int cmd_starexp(const std::string& h_arg, double t, double hbar,
                const std::string& method, double tol) {
    const Symbol wh = symbol_of(parse_matrix_arg(h_arg));
    json out;
    if (method == "series") {
        const StarSeriesResult r = star_exponential_series(wh, t, hbar, tol);
        out = json{{"symbol", to_json(r.value)},
                   {"terms_used", r.terms_used},
                   {"truncation_estimate", r.truncation_estimate}};
    } else {
        out = json{{"symbol", to_json(star_exponential_closed(wh, t, hbar))}};
    }
    out["t"] = t;
    out["hbar"] = hbar;
    out["method"] = method;
    emit(out);
    return 0;
}

int cmd_check_axioms(int samples, std::uint64_t seed, int ntheta, int nphi,
                     double tol) {
    const QuadratureRule rule = gauss_legendre_sphere(ntheta, nphi);
    const AxiomReport report = check_axioms(samples, rule, seed, tol);
    json out = to_json(report);
    out["samples"] = samples;
    out["seed"] = seed;
    out["rule"] = rule_meta(ntheta, nphi);
    emit(out);
    if (!report.all_pass()) {
        for (const auto& [name, c] : report.axioms)
            if (!c.pass)
                std::cerr << "axiom failed: " << name
                          << " (max_dev = " << fmt17(c.max_dev) << ")\n";
        return 1;
    }
    return 0;
}

int cmd_propagate(const std::string& h_arg, const std::string& psi0_arg,
                  const std::string& psif_arg, double t, double hbar,
                  const std::string& method, int ntheta, int nphi) {
    const Matrix2 H = parse_matrix_arg(h_arg);
    const TransitionPair pair{parse_state_arg(psi0_arg), parse_state_arg(psif_arg)};
    cplx K;
    json out;
    if (method == "quadrature") {
        const QuadratureRule rule = gauss_legendre_sphere(ntheta, nphi);
        K = propagator_quadrature(pair, H, t, hbar, rule);
        out["rule"] = rule_meta(ntheta, nphi);
    } else if (method == "oracle") {
        K = propagator_oracle(pair, H, t, hbar);
    } else {
        K = propagator_exact(pair, H, t, hbar);
    }
    out["K"] = to_json(K);
    out["probability"] = std::norm(K);
    out["t"] = t;
    out["hbar"] = hbar;
    out["method"] = method;
    emit(out);
    return 0;
}

int cmd_rabi(double gamma, double B, const std::string& axis, double tmax,
             int steps, double hbar, const std::string& out_path) {
    RabiConfig cfg;
    cfg.gamma = gamma;
    cfg.B = B;
    cfg.hbar = hbar;
    if (axis == "x") cfg.axis = {1, 0, 0};
    else if (axis == "y") cfg.axis = {0, 1, 0};
    else if (axis == "z") cfg.axis = {0, 0, 1};
    else throw CLI::ValidationError("--axis must be x, y or z");

    std::vector<double> times(steps);
    for (int i = 0; i < steps; ++i)
        times[i] = steps == 1 ? 0.0 : tmax * i / (steps - 1);

    const TransitionPair up_pair{spin_up_z(), spin_up_z()};
    const TransitionPair down_pair{spin_up_z(), spin_down_z()};
    const auto up = rabi_scan(cfg, up_pair, times);
    const auto down = rabi_scan(cfg, down_pair, times);

    std::ostringstream csv;
    csv << "t,re_K_up,im_K_up,re_K_down,im_K_down,P_up,P_down\n";
    for (std::size_t i = 0; i < times.size(); ++i)
        csv << fmt17(up[i].t) << "," << fmt17(up[i].K.real()) << ","
            << fmt17(up[i].K.imag()) << "," << fmt17(down[i].K.real()) << ","
            << fmt17(down[i].K.imag()) << "," << fmt17(up[i].probability)
            << "," << fmt17(down[i].probability) << "\n";
    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream f(out_path);
        f << csv.str();
        std::cout << json{{"written", out_path}, {"rows", times.size()}}.dump(2)
                  << "\n";
    }
    return 0;
}

int cmd_path_integral(const std::string& h_arg, const std::string& psi0_arg,
                      const std::string& psif_arg, double t, double hbar,
                      int slices, const std::string& ordering_name, int ntheta,
                      int nphi, const std::string& sweep,
                      const std::string& out_path) {
    const Matrix2 H = parse_matrix_arg(h_arg);
    const TransitionPair pair{parse_state_arg(psi0_arg), parse_state_arg(psif_arg)};
    SlicingConfig cfg;
    cfg.rule = gauss_legendre_sphere(ntheta, nphi);
    if (ordering_name == "left") cfg.ordering = Ordering::left;
    else if (ordering_name == "right") cfg.ordering = Ordering::right;
    else if (ordering_name == "symmetric") cfg.ordering = Ordering::symmetric;
    else throw CLI::ValidationError("--ordering must be left, right or symmetric");

    if (!sweep.empty()) {
        const cplx K_exact = propagator_oracle(pair, H, t, hbar);
        std::ostringstream csv;
        csv << "N,abs_error\n";
        std::stringstream ss(sweep);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            cfg.n_slices = std::stoi(tok);
            const SlicedResult r = sliced_propagator(pair, H, t, hbar, cfg);
            csv << cfg.n_slices << "," << fmt17(std::abs(r.value - K_exact))
                << "\n";
        }
        if (out_path.empty()) {
            std::cout << csv.str();
        } else {
            std::ofstream f(out_path);
            f << csv.str();
            std::cout << json{{"written", out_path}}.dump(2) << "\n";
        }
        return 0;
    }

    cfg.n_slices = slices;
    const SlicedResult r = sliced_propagator(pair, H, t, hbar, cfg);
    emit(json{{"K", to_json(r.value)},
              {"probability", std::norm(r.value)},
              {"resolution_deviation", r.resolution_deviation},
              {"slices", slices},
              {"ordering", ordering_name},
              {"rule", rule_meta(ntheta, nphi)},
              {"t", t},
              {"hbar", hbar}});
    return 0;
}

int cmd_kks_check(int samples, std::uint64_t seed, double tol) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    auto random_point = [&] {
        return PhasePoint(std::acos(1.0 - 2.0 * u01(rng)),
                          2.0 * std::numbers::pi * u01(rng));
    };

    double dev_invariance = 0.0, dev_area = 0.0;
    for (int s = 0; s < samples; ++s) {
        const PhasePoint p = random_point();
        const Vec3 n = p.n();
        const double ct = std::cos(p.theta), st = std::sin(p.theta);
        const double cp = std::cos(p.phi), sp = std::sin(p.phi);
        const Vec3 dth{ct * cp, ct * sp, -st};
        const Vec3 dph{-st * sp, st * cp, 0.0};

        // coordinate-frame evaluation equals the area density sin(theta)
        dev_area = std::max(dev_area,
                            std::abs(kks_form(n, dth, dph) - st));

        // rotation invariance under a random SO(3) image
        const Rotation3 R = rotation_of(euler_rotation(
            2.0 * std::numbers::pi * u01(rng),
            std::acos(1.0 - 2.0 * u01(rng)),
            4.0 * std::numbers::pi * u01(rng)));
        const double w0 = kks_form(n, dth, dph);
        const double w1 = kks_form(rotate(R, n), rotate(R, dth), rotate(R, dph));
        dev_invariance = std::max(dev_invariance, std::abs(w1 - w0));
    }

    const bool pass = dev_invariance < tol && dev_area < 1e-10;
    emit(json{{"rotation_invariance", {{"max_dev", dev_invariance}, {"tol", tol}, {"pass", dev_invariance < tol}}},
              {"area_form", {{"max_dev", dev_area}, {"tol", 1e-10}, {"pass", dev_area < 1e-10}}},
              {"samples", samples},
              {"seed", seed}});
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Phase-space quantum mechanics for qubits on the sphere"};
    app.require_subcommand(1);

    std::string a_arg, b_arg, h_arg = "sigma_x", psi0_arg = "up",
                psif_arg = "down", method = "closed", axis = "x",
                ordering = "symmetric", out_path, sweep;
    double t = 1.0, hbar = 1.0, tol = 1e-12, ax_tol = 1e-11,
           kks_tol = 1e-12, gamma = 1.0, B = 1.0, tmax = 4.0 * std::numbers::pi;
    int samples = 100, ntheta = 8, nphi = 16, steps = 100, slices = 32;
    std::uint64_t seed = 0;

    auto* sym = app.add_subcommand("symbol", "Phase-space symbol of an operator");
    sym->add_option("--a", a_arg, "operator (name or JSON file)")->required();

    auto* st = app.add_subcommand("star", "Star product of two symbols");
    st->add_option("--a", a_arg)->required();
    st->add_option("--b", b_arg)->required();

    auto* se = app.add_subcommand("starexp", "Star exponential of a Hamiltonian symbol");
    se->set_help_flag("--help", "Print help");  // frees -h/--h for the Hamiltonian
    se->add_option("--h", h_arg)->required();
    se->add_option("--t", t);
    se->add_option("--hbar", hbar);
    se->add_option("--method", method)->check(CLI::IsMember({"closed", "series"}));
    se->add_option("--tol", tol);

    auto* ax = app.add_subcommand("check-axioms", "Randomized check of the five SW postulates");
    ax->add_option("--samples", samples);
    ax->add_option("--seed", seed);
    ax->add_option("--ntheta", ntheta);
    ax->add_option("--nphi", nphi);
    ax->add_option("--tol", ax_tol);

    auto* pr = app.add_subcommand("propagate", "Transition amplitude between qubit states");
    pr->set_help_flag("--help", "Print help");
    pr->add_option("--h", h_arg)->required();
    pr->add_option("--psi0", psi0_arg)->required();
    pr->add_option("--psif", psif_arg)->required();
    pr->add_option("--t", t);
    pr->add_option("--hbar", hbar);
    pr->add_option("--method", method)->check(CLI::IsMember({"exact", "quadrature", "oracle"}));
    pr->add_option("--ntheta", ntheta);
    pr->add_option("--nphi", nphi);

    auto* rb = app.add_subcommand("rabi", "Rabi scan for a spin in a magnetic field");
    rb->add_option("--gamma", gamma);
    rb->add_option("--B", B);
    rb->add_option("--axis", axis);
    rb->add_option("--tmax", tmax);
    rb->add_option("--steps", steps);
    rb->add_option("--hbar", hbar);
    rb->add_option("--out", out_path);

    auto* pi = app.add_subcommand("path-integral", "Time-sliced coherent-state propagator");
    pi->set_help_flag("--help", "Print help");
    pi->add_option("--h", h_arg)->required();
    pi->add_option("--psi0", psi0_arg)->required();
    pi->add_option("--psif", psif_arg)->required();
    pi->add_option("--t", t);
    pi->add_option("--hbar", hbar);
    pi->add_option("--slices", slices);
    pi->add_option("--ordering", ordering);
    pi->add_option("--ntheta", ntheta);
    pi->add_option("--nphi", nphi);
    pi->add_option("--slice-sweep", sweep, "comma-separated N values; emits (N, |K_N - K_exact|)");
    pi->add_option("--out", out_path);

    auto* kk = app.add_subcommand("kks-check", "KKS form invariance and area-form checks");
    kk->add_option("--samples", samples);
    kk->add_option("--seed", seed);
    kk->add_option("--tol", kks_tol);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sym) return cmd_symbol(a_arg);
        if (*st) return cmd_star(a_arg, b_arg);
        if (*se) return cmd_starexp(h_arg, t, hbar, method, tol);
        if (*ax) return cmd_check_axioms(samples, seed, ntheta, nphi, ax_tol);
        if (*pr) return cmd_propagate(h_arg, psi0_arg, psif_arg, t, hbar, method, ntheta, nphi);
        if (*rb) return cmd_rabi(gamma, B, axis, tmax, steps, hbar, out_path);
        if (*pi) return cmd_path_integral(h_arg, psi0_arg, psif_arg, t, hbar, slices, ordering, ntheta, nphi, sweep, out_path);
        if (*kk) return cmd_kks_check(samples, seed, kks_tol);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
