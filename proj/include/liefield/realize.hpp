#pragma once

#include "liefield/liestruct.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace liefield {

/// A normalized rank-one triple of vector fields: [H,X] = X, [H,Y] = -Y,
/// [X,Y] = H. (The classical basis is recovered as (2H, X, 2Y).)
struct SlTriple {
    GField x, y, h;
};

/// A concrete realization of a product of simple factors on C^N: one
/// normalized triple per simple root, grouped factor by factor, with the
/// diagonalizable elements h forming a commuting family.
struct Realization {
    int ambient = 0;                 // number of coordinates N
    std::vector<SimpleType> factors; // declared type of each block
    std::vector<SlTriple> triples;   // one per simple root, blocks concatenated

    int rank() const { return static_cast<int>(triples.size()); }
    std::vector<GField> cartan() const;
    /// Every field of every triple, in a fixed deterministic order.
    std::vector<GField> fields() const;
};

/// N commuting exponential triples: X_i = exp(x_i) d_i, Y_i = -1/2
/// exp(-x_i) d_i, H_i = d_i. The closure has dimension 3N and every H_i is
/// a constant-coefficient field.
Realization a1_power(int n);

/// The rank-k projective realization on C^k coming from fractional-linear
/// action on an affine chart: polynomial coefficients of degree at most 2,
/// closure of dimension k^2 + 2k.
Realization a_type(int rank);

/// Block product of projective realizations on consecutive coordinate
/// groups; ambient dimension is the sum of the ranks.
Realization product(const std::vector<int>& ranks);

/// Substitute x_i = exp(u_i) in every coordinate. Defined exactly when no
/// coefficient carries an exponential in a substituted variable; maps the
/// polynomial realizations above to purely exponential ones and turns every
/// h into a constant-coefficient field (verified). Brackets are preserved.
Realization straighten(const Realization& r);

/// Result of the full independent audit of a realization.
struct AuditReport {
    bool ok = false;
    bool relations_ok = false;          // normalized triple relations
    bool standard_relations_ok = false; // classical (2H, X, 2Y) relations
    bool cartan_commutes = false;
    int expected_dim = 0;
    int closure_dim = 0;
    bool semisimple = false;
    std::vector<SimpleType> identified; // from the root decomposition
    bool type_matches = false;
    int pointwise_rank = 0; // numeric diagnostic, compared to ambient
    std::vector<std::string> failures;

    std::string str() const; // deterministic multi-line summary
};

/// Re-derive everything the realization claims from scratch: the triple
/// relations, the closure dimension, semisimplicity of the closure, the
/// type recovered by root decomposition, and the pointwise generic rank.
AuditReport audit(const Realization& r, std::uint64_t seed = kDefaultSeed,
                  int max_dim = kDefaultMaxDim);

} // namespace liefield
