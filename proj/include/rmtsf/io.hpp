#pragma once

#include <string>

#include <json.hpp>

#include "rmtsf/partition.hpp"
#include "rmtsf/polynomial.hpp"

namespace rmtsf {

// {"var":"N","coeffs":{"<exponent>":"<rational>"}}, exponents as signed
// decimal strings. PolyN and LaurentPolyN share the schema.
nlohmann::json poly_to_json(const PolyN& p);
nlohmann::json laurent_to_json(const LaurentPolyN& p);
PolyN poly_from_json(const nlohmann::json& j);
LaurentPolyN laurent_from_json(const nlohmann::json& j);

// Descending powers, explicit rational coefficients, N^k syntax,
// e.g. "5*N^4 + 10*N^2" and "3/4 + 3/4*N^-2".
std::string poly_to_text(const PolyN& p);
std::string laurent_to_text(const LaurentPolyN& p);

}  // namespace rmtsf
