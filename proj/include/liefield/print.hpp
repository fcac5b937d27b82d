#pragma once

#include "liefield/vfield.hpp"

#include <string>

namespace liefield {

/// Canonical textual form of a scalar exponential polynomial. Gaussian
/// coefficients are split into a real and an imaginary printed term so the
/// output stays inside the expression grammar; parse(print(p)) == p.
std::string to_string(const GPoly& p);

/// Canonical textual form of a field: slots in ascending direction order,
/// monomials in canonical term order within each slot. The zero field
/// prints as "0".
std::string to_string(const GField& X);

} // namespace liefield
