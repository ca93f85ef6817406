#include "qsphere/json_io.hpp"

#include <fstream>

namespace qsphere {

json to_json(const cplx& z) {
    return json{{"re", z.real()}, {"im", z.imag()}};
}

cplx cplx_from_json(const json& j) {
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

json to_json(const Matrix2& M) {
    json re = json::array(), im = json::array();
    for (int i = 0; i < 2; ++i) {
        json rrow = json::array(), irow = json::array();
        for (int k = 0; k < 2; ++k) {
            rrow.push_back(M(i, k).real());
            irow.push_back(M(i, k).imag());
        }
        re.push_back(rrow);
        im.push_back(irow);
    }
    return json{{"re", re}, {"im", im}};
}

Matrix2 matrix_from_json(const json& j) {
    Matrix2 M;
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            M(i, k) = cplx{re.at(i).at(k).get<double>(),
                           im.at(i).at(k).get<double>()};
    return M;
}

json to_json(const PauliCoefficients& c) {
    json a = json::array();
    for (const auto& e : c.a) a.push_back(to_json(e));
    return json{{"a0", to_json(c.a0)}, {"a", a}};
}

PauliCoefficients pauli_from_json(const json& j) {
    PauliCoefficients c;
    c.a0 = cplx_from_json(j.at("a0"));
    for (int i = 0; i < 3; ++i) c.a[i] = cplx_from_json(j.at("a").at(i));
    return c;
}

json to_json(const Symbol& W) {
    return to_json(PauliCoefficients{W.c0, W.c});
}

Symbol symbol_from_json(const json& j) {
    const PauliCoefficients c = pauli_from_json(j);
    return {c.a0, c.a};
}

json to_json(const QuadratureRule& rule) {
    json nodes = json::array();
    for (const auto& p : rule.nodes)
        nodes.push_back(json{{"theta", p.theta}, {"phi", p.phi}});
    return json{{"nodes", nodes}, {"weights", rule.weights}};
}

QuadratureRule quadrature_from_json(const json& j) {
    QuadratureRule rule;
    for (const auto& n : j.at("nodes"))
        rule.nodes.emplace_back(n.at("theta").get<double>(),
                                n.at("phi").get<double>());
    rule.weights = j.at("weights").get<std::vector<double>>();
    if (rule.weights.size() != rule.nodes.size())
        throw std::invalid_argument("quadrature_from_json: size mismatch");
    return rule;
}

json to_json(const QubitState& psi) {
    return json{{"amplitudes", json::array({to_json(psi.up), to_json(psi.down)})}};
}

QubitState state_from_json(const json& j) {
    const auto& a = j.at("amplitudes");
    return QubitState{cplx_from_json(a.at(0)), cplx_from_json(a.at(1))};
}

json to_json(const AxiomReport& report) {
    json j;
    for (const auto& [name, c] : report.axioms)
        j[name] = json{{"max_dev", c.max_dev}, {"tol", c.tol}, {"pass", c.pass}};
    return j;
}

namespace {
json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}
}  // namespace

Matrix2 parse_matrix_arg(const std::string& arg) {
    if (arg == "sigma_x") return sigma_x();
    if (arg == "sigma_y") return sigma_y();
    if (arg == "sigma_z") return sigma_z();
    if (arg == "identity") return identity2();
    return matrix_from_json(load_file(arg));
}

QubitState parse_state_arg(const std::string& arg) {
    if (arg == "up") return spin_up_z();
    if (arg == "down") return spin_down_z();
    if (arg == "plus") return QubitState{cplx{1}, cplx{1}};
    if (arg == "minus") return QubitState{cplx{1}, cplx{-1}};
    return state_from_json(load_file(arg));
}

}  // namespace qsphere
