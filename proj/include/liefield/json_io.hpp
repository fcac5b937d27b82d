#pragma once

#include "liefield/vfield.hpp"

#include <json.hpp>

namespace liefield {

using nlohmann::json;

/// Field as JSON: {"dim": N, "coeffs": [{"terms": [{"re": "p/q", "im": "p/q",
/// "pow": [..], "freq": ["p/q", ..]}, ..]}, ..]} with one coeffs entry per
/// slot and rationals as exact strings. Term order inside each slot is the
/// canonical monomial order, so serialization is deterministic and lossless.
json field_to_json(const GField& X);

/// Inverse of field_to_json; validates shape and rational syntax.
GField field_from_json(const json& j);

} // namespace liefield
