#ifndef SIGVAR_IO_HPP
#define SIGVAR_IO_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "sigvar/lyndon.hpp"
#include "sigvar/paths.hpp"
#include "sigvar/signature.hpp"
#include "sigvar/varieties.hpp"

namespace sigvar {

using json = nlohmann::json;

// Path: {"dimension": d, "variables": [...], "segments": [["t", "t^2"], ...]}
json path_to_json(const Path& x);
Path path_from_json(const json& j);

// Signature: {"dimension": d, "level": k, "variables": [...],
//             "terms": [{"word": [..], "coefficient": "..."}]}
json signature_to_json(const SignatureResult& s);
/// Rebuilds the level tensor from a signature document.
Tensor signature_tensor_from_json(const json& j);

json tensor_to_json(const Tensor& t);
Tensor tensor_from_json(const json& j);

// PolynomialMap: {"parameters": [{"name":..,"weight":..}], "alphabet": d,
//                 "coordinates": ["[1, 1]", ...], "entries": ["..."]}
json polynomial_map_to_json(const PolynomialMap& f);
PolynomialMap polynomial_map_from_json(const json& j);

// LyndonPolynomial: [{"monomial": [{"word": [..], "exponent": e}], "coefficient": "p/q"}]
json lyndon_polynomial_to_json(const LyndonPolynomial& p);
LyndonPolynomial lyndon_polynomial_from_json(const json& j);

/// Polynomial map file for the adjoint: {"variables": ["x","y"], "polys": ["x^2", ...]}.
std::vector<MultiPoly> polys_from_json(const json& j);

/// Parses a document given inline (starting with '{' or '[') or as a file path.
json load_json_argument(const std::string& arg);

}  // namespace sigvar

#endif
