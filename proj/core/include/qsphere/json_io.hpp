#pragma once

// JSON formats shared by all modules and the CLI.
//   Matrix2:            {"re": [[r11,r12],[r21,r22]], "im": [[...]]}
//   PauliCoefficients:  {"a0": {"re","im"}, "a": [{"re","im"} x3]}
//   Symbol:             same shape as PauliCoefficients
//   QuadratureRule:     {"nodes": [{"theta","phi"}], "weights": [...]}
//   QubitState:         {"amplitudes": [{"re","im"}, {"re","im"}]}

#include <json.hpp>

#include "qsphere/dynamics.hpp"
#include "qsphere/sw.hpp"

namespace qsphere {

using json = nlohmann::json;

json to_json(const cplx& z);
cplx cplx_from_json(const json& j);

json to_json(const Matrix2& M);
Matrix2 matrix_from_json(const json& j);

json to_json(const PauliCoefficients& c);
PauliCoefficients pauli_from_json(const json& j);

json to_json(const Symbol& W);
Symbol symbol_from_json(const json& j);

json to_json(const QuadratureRule& rule);
QuadratureRule quadrature_from_json(const json& j);

json to_json(const QubitState& psi);
QubitState state_from_json(const json& j);

json to_json(const AxiomReport& report);

// Accepts a built-in operator name (sigma_x, sigma_y, sigma_z, identity)
// or a path to a matrix JSON file.
Matrix2 parse_matrix_arg(const std::string& arg);

// Accepts up/down/plus/minus or a path to a state JSON file.
QubitState parse_state_arg(const std::string& arg);

}  // namespace qsphere
