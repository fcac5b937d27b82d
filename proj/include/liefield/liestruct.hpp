#pragma once

#include "liefield/linalg.hpp"
#include "liefield/roots.hpp"
#include "liefield/vfield.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace liefield {

/// Sparse bracket table over a fixed ordered basis: entry (a,b) with a < b
/// lists the coordinates of [e_a, e_b]; the rest follows by antisymmetry.
struct StructureConstants {
    int dim = 0;
    std::map<std::pair<int, int>, std::vector<std::pair<int, GaussianRational>>> table;

    /// Coordinates of [e_a, e_b] for any a, b (0-based).
    IntVec bracket_coords(int a, int b) const;
};

/// A finite-dimensional Lie algebra of vector fields: canonical ordered
/// basis, exact span membership, and the structure constants over that
/// basis. Built by span_closure.
class Subalgebra {
public:
    Subalgebra(int ambient, std::vector<GField> basis, FieldSpan span, StructureConstants sc)
        : ambient_(ambient), basis_(std::move(basis)), span_(std::move(span)), sc_(std::move(sc)) {}

    int ambient() const { return ambient_; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    const std::vector<GField>& basis() const { return basis_; }
    const StructureConstants& structure() const { return sc_; }

    bool contains(const GField& X) const { return span_.contains(to_sparse(X)); }
    std::optional<std::vector<GaussianRational>> coordinates(const GField& X) const {
        return span_.coordinates(to_sparse(X));
    }

    /// Field from basis coordinates.
    GField materialize(const std::vector<GaussianRational>& coords) const;

    /// Dense matrix of ad(x) on the basis, x given by coordinates.
    Matrix ad_matrix(const std::vector<GaussianRational>& coords) const;

private:
    int ambient_;
    std::vector<GField> basis_;
    FieldSpan span_;
    StructureConstants sc_;
};

inline constexpr int kDefaultMaxDim = 120;
inline constexpr std::uint64_t kDefaultSeed = 20260818ull;

/// Smallest Lie algebra containing the generators: repeatedly brackets
/// basis elements and reduces against an exact echelon form until closed.
/// Deterministic: the basis depends only on the generator sequence. Throws
/// ResourceExhausted when the dimension would exceed max_dim.
Subalgebra span_closure(const std::vector<GField>& generators, int max_dim = kDefaultMaxDim);

/// Gram matrix of the Killing form kappa(e_a, e_b) = tr(ad e_a ad e_b).
Matrix killing_form(const Subalgebra& A);

GaussianRational killing_determinant(const Subalgebra& A);

/// Cartan's criterion: the Killing form is nondegenerate.
bool is_semisimple(const Subalgebra& A);

/// Numeric (diagnostics-grade) generic rank of the pointwise span: the
/// fields are evaluated at the origin and at 8 seeded pseudo-random
/// rational points with coordinates in [-3,3], and the maximal singular
/// -value rank (relative threshold 1e-8) is reported. Points where
/// evaluation overflows are skipped. Never used for exact decisions.
int generic_rank(const std::vector<GField>& fields, std::uint64_t seed = kDefaultSeed);

/// Simultaneous ad-eigenspace decomposition for a commuting family.
struct CartanData {
    std::vector<GField> cartan;                    // the family, as supplied
    std::vector<std::vector<Rat>> roots;           // nonzero value vectors, lex ascending
    std::vector<std::vector<GField>> root_spaces;  // basis per root, aligned with roots
    std::vector<GField> zero_space;                // joint centralizer block
};

/// Decompose A under ad of the commuting family. Exact: eigenvalues come
/// from rational root search on characteristic polynomials and every
/// claimed eigenfield is re-verified by an exact bracket. Throws Error if
/// the family is not commuting inside A, some ad is not diagonalizable
/// with rational eigenvalues, or the family is not self-centralizing.
CartanData root_decomposition(const Subalgebra& A, const std::vector<GField>& cartan);

/// Simple factors of a semisimple decomposition, canonically sorted
/// (descending rank, then letter). Extracts simple roots from the
/// lex-positive cone, forms the Cartan matrix from exact root strings and
/// classifies it against the Dynkin tables.
std::vector<SimpleType> identify_type(const CartanData& cd);

} // namespace liefield
