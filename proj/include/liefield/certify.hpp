#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liefield/groebner.hpp"
#include "liefield/json_io.hpp"
#include "liefield/liestruct.hpp"
#include "liefield/qpoly.hpp"
#include "liefield/realize.hpp"
#include "liefield/roots.hpp"

namespace liefield {

/// One polynomial equation (= 0) over the ansatz unknowns, annotated with
/// the bracket relation and coefficient slot it was extracted from.
struct ConstraintEquation {
    QPoly poly;
    std::string origin;
};

/// Polynomial constraints over the unknowns of the normal-form ansatz
///   X_i = exp(x_i) * (sum_j lambda_{i,j} d_j),
///   Y_i = exp(-x_i) * (sum_j mu_{i,j} d_j)
/// on C^n with constant, unknown coefficients.
struct ConstraintSystem {
    int n = 0;
    std::vector<ConstraintEquation> equations;

    /// QPoly variable ids for the unknowns; indices are 1-based.
    int lambda_var(int i, int j) const;
    int mu_var(int i, int j) const;
    std::string variable_name(int var) const;
    /// Parse "lambda_i_j" / "mu_i_j" back to a variable id.
    std::optional<int> find_variable(const std::string& name) const;
    /// Sorted distinct variable ids appearing in the equations.
    std::vector<int> used_variables() const;
};

/// A bracket relation to impose on the ansatz.
struct AnsatzRelation {
    enum class Kind {
        TripleNormalized,  // [[X_i,Y_i],X_i] = X_i and [[X_i,Y_i],Y_i] = -Y_i
        CartanAxis,        // [X_i,Y_i] has no component off the i-th axis
        CommuteXX,         // [X_i,X_j] = 0, i != j
        CommuteYY,         // [Y_i,Y_j] = 0
        CommuteXY,         // [X_i,Y_j] = 0
    };
    Kind kind;
    int i = 0;
    int j = 0;
};

/// The full relation set of n pairwise-commuting normalized triples.
std::vector<AnsatzRelation> a1_product_relations(int n);

/// Assemble the constraints the given relations impose on the n-coordinate
/// ansatz. Every bracket is computed by the generic symbolic engine over
/// polynomial coefficients; one equation is emitted per surviving
/// coefficient of each residual.
ConstraintSystem ansatz_constraints(int n, const std::vector<AnsatzRelation>& relations);

/// Exact decision on a small polynomial system.
struct SolveOutcome {
    enum class Kind {
        Inconsistent,  // reduced basis is {1}: no solution with the declared nonzeros
        Forces,        // some ansatz unknowns lie in the ideal, i.e. vanish identically
        Open,          // neither
    };
    Kind kind = Kind::Open;
    /// Ansatz unknowns proven zero, in variable order.
    std::vector<std::string> forced;
    /// Names of the compacted variables (saturation witnesses included),
    /// aligned with the variable ids used inside `basis`.
    std::vector<std::string> variables;
    /// The reduced Groebner basis: a canonical form of the constraint
    /// ideal, independent of equation order.
    std::vector<QPoly> basis;

    std::string str() const;
};

/// Decide sys exactly. Each name in `nonzero` is declared invertible by
/// adjoining v * w = 1 with a fresh witness w (saturation). Raises
/// ResourceExhausted when variable count or basis growth exceeds the caps;
/// exhaustion is never reported as a verdict.
SolveOutcome solve_small(const ConstraintSystem& sys, const std::vector<std::string>& nonzero,
                         const GroebnerOptions& opt = {});

/// Mechanized reduction of the commuting-triple ansatz.
struct PairOutcome {
    int i = 0;
    int j = 0;
    SolveOutcome outcome;
    bool offdiagonals_forced = false;  // lambda_{i,j}, lambda_{j,i}, mu_{i,j}, mu_{j,i} all forced
};

struct PairwiseReduction {
    int n = 0;
    /// The diagonal-nonvanishing case split: assuming lambda_{1,1} = 0 (or
    /// mu_{1,1} = 0) while any single coefficient of the same row stays
    /// nonzero is contradictory, so a nonzero X_1 forces lambda_{1,1} != 0.
    bool diagonal_nonzero_derived = false;
    std::vector<PairOutcome> pairs;  // all (i,j) with i < j
    bool all_offdiagonals_forced = false;

    std::string transcript() const;
};

/// For every index pair (i,j): relabel the pair to the first two
/// coordinates, project the ansatz fields to C^2, impose the commuting
/// normalized-triple relations there, and decide the resulting 8-unknown
/// system with the four diagonal coefficients saturated. Aggregates the
/// per-pair conclusions into the full off-diagonal vanishing statement.
/// n = 1 has no pairs; only the diagonal derivation runs.
PairwiseReduction pairwise_reduce(int n, const GroebnerOptions& opt = {});

/// Basis of {v in span(space) : [D, v] = 0 for every derivation D}.
/// Pre: span(space) is stable under bracketing with every derivation;
/// violations raise PreconditionError naming the offending pair.
std::vector<GField> joint_kernel(const std::vector<GField>& derivations,
                                 const std::vector<GField>& space);

/// All monomial fields x^a d_j on C^n of total degree at most `degree`
/// (deterministic order). The natural ambient space for joint_kernel
/// computations with polynomial inputs.
std::vector<GField> bounded_field_space(int n, int degree);

/// Mechanized highest-weight obstruction for a simple type that contains
/// an orthogonal family of n long-root triples: the canonical commuting
/// realization leaves no room for a highest weight vector outside itself.
struct ObstructionFragment {
    SimpleType target;                      // B2, G2 (n = 2) or D4 (n = 4)
    int n = 0;
    std::vector<RootVec> orthogonal_family; // pairwise strongly orthogonal roots
    PairwiseReduction pairwise;             // canonical-form reduction on C^n
    bool family_verified = false;           // strong orthogonality re-checked
    bool chart_connection_ok = false;       // polynomial chart triples map onto the canonical ones
    bool kernel_matches = false;            // joint kernel = constant direction fields
    int target_dim = 0;                     // dimension of the target simple algebra
    int subalgebra_dim = 0;                 // 3n, dimension of the commuting-triple product
    bool ok = false;

    std::string transcript() const;
};

ObstructionFragment highest_weight_obstruction(const SimpleType& target, int n,
                                               const GroebnerOptions& opt = {});

/// Evidence chain for a non-realizable factor: the sub-diagram witness and
/// the highest-weight obstruction of its core.
struct ObstructionChain {
    SimpleType offending;
    ObstructionWitness witness;
    bool witness_verified = false;  // witness nodes rebuild the claimed core type
    ObstructionFragment fragment;
};

/// Verdict on "does a product of these simple types act on C^ambient with
/// a Cartan subalgebra of full dimension", with re-checkable evidence.
struct Certificate {
    enum class Verdict { Realizable, NotRealizable, OutOfScope };
    Verdict verdict = Verdict::OutOfScope;
    std::vector<SimpleType> factors;
    int ambient = 0;
    int rank_sum = 0;
    std::string reason;

    std::optional<Realization> realization;  // Realizable evidence
    std::optional<AuditReport> audit_report;
    std::optional<ObstructionChain> chain;   // NotRealizable via witness chain
    bool rank_bound = false;                 // NotRealizable via the dimension bound

    std::string verdict_name() const;
    std::string transcript() const;
    json to_json() const;
};

/// Decide realizability of the product of `factors` on C^ambient with
/// full-dimensional Cartan subalgebra:
///   - rank sum < ambient: OutOfScope (the hypothesis fails structurally);
///   - rank sum > ambient: NotRealizable by the dimension bound;
///   - rank sum = ambient, all factors type A: Realizable, with an audited
///     canonical realization;
///   - rank sum = ambient, some non-A factor: NotRealizable, with witness
///     chain and highest-weight obstruction.
Certificate classify(const std::vector<SimpleType>& factors, int ambient,
                     const GroebnerOptions& opt = {}, std::uint64_t seed = kDefaultSeed);

/// Re-check a certificate's evidence from scratch: audits the stored
/// realization, or re-verifies the witness identification and re-runs the
/// obstruction fragment, or re-checks the rank bound.
bool reverify(const Certificate& cert, std::uint64_t seed = kDefaultSeed);

}  // namespace liefield
