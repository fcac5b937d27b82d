#pragma once

#include "liefield/vfield.hpp"

#include <string>
#include <string_view>

namespace liefield {

/// Parse a field expression on C^dim. Terms are products of rational
/// literals, "i", powers "x3^2", exponentials "exp(2*x1 - x2)" and one
/// direction "d2" each; parenthesized subexpressions distribute. A term
/// without a direction must cancel to zero ("0" is the zero field).
/// Throws ParseError with 1-based line/column on syntax errors, on variable
/// or direction indices exceeding dim, and on non-rational numeric literals.
VectorField<GaussianRational> parse_field(std::string_view text, int dim);

/// Parse a scalar expression (no directions allowed) on C^dim.
ExpPoly<GaussianRational> parse_poly(std::string_view text, int dim);

} // namespace liefield
