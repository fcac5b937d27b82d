#pragma once

#include <vector>

#include "liefield/error.hpp"
#include "liefield/qpoly.hpp"

namespace liefield {

/// Resource budget for ideal computations.  Exceeding any cap raises
/// ResourceExhausted; it never silently degrades the answer.
struct GroebnerOptions {
    int max_variables = 12;
    int max_basis = 10000;
    long max_pair_steps = 200000;
};

/// Remainder of p under multivariate division by divisors (in degrevlex
/// order).  Deterministic: each step reduces the current leading term by
/// the first divisor (in the given order) whose leading monomial divides
/// it.  Zero divisors are skipped.
QPoly normal_form(QPoly p, const std::vector<QPoly>& divisors);

/// The reduced Groebner basis of the ideal generated by gens with respect
/// to degrevlex: every element is monic, no term of any element is
/// divisible by the leading monomial of another, and the list is sorted by
/// ascending leading monomial.  This normal form is unique to the ideal,
/// so two generating sets of the same ideal produce identical output.
/// Buchberger's algorithm with the normal (smallest-lcm) selection
/// strategy and the coprime-leading-monomial criterion.
std::vector<QPoly> groebner_basis(const std::vector<QPoly>& gens, const GroebnerOptions& opt = {});

/// True iff the (reduced) basis generates the unit ideal.
bool ideal_contains_one(const std::vector<QPoly>& basis);

/// True iff p reduces to zero against the Groebner basis, i.e. p lies in
/// the ideal.
bool in_ideal(const QPoly& p, const std::vector<QPoly>& groebner);

}  // namespace liefield
