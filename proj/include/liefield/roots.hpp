#pragma once

#include "liefield/error.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace liefield {

/// Label of a simple factor: letter A..G plus rank, e.g. A2, D4.
struct SimpleType {
    char letter = 'A';
    int rank = 1;

    std::string str() const { return letter + std::to_string(rank); }

    friend bool operator==(const SimpleType& a, const SimpleType& b) {
        return a.letter == b.letter && a.rank == b.rank;
    }
    friend bool operator!=(const SimpleType& a, const SimpleType& b) { return !(a == b); }
    /// Canonical display order: higher rank first, then letter.
    friend bool operator<(const SimpleType& a, const SimpleType& b) {
        if (a.rank != b.rank) return a.rank > b.rank;
        return a.letter < b.letter;
    }
};

/// Parse "A2", "G2", ... and validate the rank range of the family.
/// C2 is legal input (it names the same diagram as B2).
SimpleType parse_simple_type(const std::string& s);

bool is_a_type(const SimpleType& t);

using IntMatrix = std::vector<std::vector<long>>;
using RootVec = std::vector<long>; // coefficients over the simple roots

/// Integer Cartan matrix A[i][j] = <alpha_i, alpha_j^vee> in the table
/// numbering of the family (paths ordered 1..rank; D forks at rank-2;
/// E types carry the branch node as node 2 attached to node 4).
IntMatrix cartan_matrix(SimpleType t);

/// A root system presented over its simple roots: the Cartan matrix, the
/// invariant form, and the positive roots generated from the matrix by
/// root strings. half_norms[i] = (alpha_i, alpha_i)/2 is 1 for short/simply
/// laced roots, 2 for long roots in B/C/F, 3 for the long root of G2, so the
/// form (alpha_i, alpha_j) = A[i][j] * half_norms[j] is an exact integer.
struct RootSystem {
    SimpleType type;
    int rank = 0;
    IntMatrix cartan;
    std::vector<long> half_norms;
    std::vector<RootVec> positive; // canonical order: height, then reverse-lex

    long bilinear(const RootVec& u, const RootVec& v) const;
    bool is_positive_root(const RootVec& v) const;
    bool is_root(const RootVec& v) const; // v or -v positive
    /// Neither the sum nor the difference is a root (hence orthogonal).
    bool strongly_orthogonal(const RootVec& u, const RootVec& v) const;
};

RootSystem build_root_system(SimpleType t);

/// The unique root of maximal height.
RootVec highest_root(const RootSystem& rs);

/// First (in subset-lex order over the canonical positive root order) set
/// of m pairwise strongly orthogonal positive roots, if one exists.
std::optional<std::vector<RootVec>> orthogonal_a1_subset(const RootSystem& rs, int m);

/// For a non-A simple type, the distinguished sub-diagram whose root system
/// already carries the obstruction: the double-bond pair for B/C/F (a B2),
/// G2 itself, the trivalent node with its three neighbours for D (a D4),
/// and for E types the D4 inside the E6 sub-diagram obtained by removing
/// the two extreme row vertices. A types have no witness.
struct ObstructionWitness {
    SimpleType parent;
    bool a_type = false;
    SimpleType target;         // B2, G2 or D4 when !a_type
    std::vector<int> nodes;    // 1-based parent nodes inducing the target
    std::vector<int> e6_nodes; // for E types: the intermediate E6 sub-diagram
};

ObstructionWitness obstruction_witness(SimpleType t);

/// Submatrix on the given 0-based node subset, in subset order.
IntMatrix principal_submatrix(const IntMatrix& m, const std::vector<int>& nodes);

/// Classify a Cartan matrix: one (type, node order) per connected component,
/// where nodes[k] is the 0-based input index playing table row k of the
/// type's matrix. Each identification is verified entry-for-entry against
/// the table under that relabeling. The rank-2 double bond reports as B2.
/// Components are listed by their smallest input node index. Throws Error
/// for matrices that are not Cartan matrices of this classification.
std::vector<std::pair<SimpleType, std::vector<int>>> identify_cartan_matrix(const IntMatrix& cartan);

/// Fixed-layout diagram rendering: nodes "o" with table numbers, "---" for
/// single bonds, "=>=" double and a marked triple bond with the arrow
/// toward the short root, branch nodes drawn above the row.
std::string ascii_diagram(SimpleType t);

} // namespace liefield
