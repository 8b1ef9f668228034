#pragma once

#include <json.hpp>

#include <string>

#include "bkx/plucker.hpp"
#include "bkx/schwartz.hpp"

namespace bkx {

// Expression grammar over the tokens q, q_half, U, integers and + - * / ^ ( ).
// '^' takes an (optionally negated) integer exponent and binds tightest,
// then unary minus, then * and /, then + and -.  Throws ParseError.
MellinSymbol parse_symbol_expression(const std::string& text);
// Same grammar, U forbidden.
ScalarQV parse_scalar_expression(const std::string& text);

// Interchange format for coefficient functions:
//   {"n": 2, "kind": "finite",   "floor": 0, "coeffs": ["1", "1", "1+q^2"]}
//   {"n": 2, "kind": "rational", "floor": 0, "num": "1",
//    "den": "1-U-q^2*U^2+q^2*U^3", "preview": {"first": 0, "coeffs": [...]}}
// The preview block on rational files repeats the first few expansion
// coefficients for human consumption; it is regenerated on write.
nlohmann::ordered_json coefficient_function_to_json(const CoefficientFunction& f);
CoefficientFunction coefficient_function_from_json(const nlohmann::json& j);
std::string serialize_coefficient_function(const CoefficientFunction& f);
CoefficientFunction parse_coefficient_function(const std::string& text);

// Matrix files: {"n": 1, "entries": [["0", "-1"], ["1", "0"]]} with exact
// rational entries (strings or integers).
SymplecticMatrix matrix_from_json(const nlohmann::json& j);
SymplecticMatrix parse_matrix(const std::string& text);

}  // namespace bkx
