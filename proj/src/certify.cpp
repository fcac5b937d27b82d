#include "liefield/certify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "liefield/linalg.hpp"
#include "liefield/parse.hpp"
#include "liefield/print.hpp"

namespace liefield {

namespace {

std::string subscripts(int i, int j) {
    return "_" + std::to_string(i) + "_" + std::to_string(j);
}

/// Compact tag for an exponential monomial, e.g. "e[1,-1]" (frequencies)
/// with "p[...]" appended when powers appear.
std::string monomial_tag(const ExpMonomial& m) {
    std::ostringstream os;
    os << "e[";
    for (std::size_t k = 0; k < m.freq.size(); ++k) {
        if (k) os << ",";
        os << m.freq[k];
    }
    os << "]";
    bool has_pow = false;
    for (int p : m.pow)
        if (p != 0) has_pow = true;
    if (has_pow) {
        os << "p[";
        for (std::size_t k = 0; k < m.pow.size(); ++k) {
            if (k) os << ",";
            os << m.pow[k];
        }
        os << "]";
    }
    return os.str();
}

/// The symbolic ansatz triples in some coordinate chart. `labels` holds the
/// original triple indices (used for variable ids and origin strings);
/// `axis` holds the coordinate axis each triple's Cartan element should
/// align with in this chart.
struct SymFields {
    int ambient = 0;
    std::vector<int> labels;
    std::vector<int> axis;
    std::vector<VectorField<QPoly>> X;
    std::vector<VectorField<QPoly>> Y;

    int pos(int label) const {
        for (std::size_t k = 0; k < labels.size(); ++k)
            if (labels[k] == label) return static_cast<int>(k);
        throw IndexError("ansatz relations: index " + std::to_string(label) + " has no triple");
    }
};

VectorField<QPoly> symbolic_row(const ConstraintSystem& sys, int i, long sign, bool lambda_row) {
    const int n = sys.n;
    VectorField<QPoly> f(n);
    std::vector<Rat> freq(static_cast<std::size_t>(n), Rat(0));
    freq[static_cast<std::size_t>(i - 1)] = Rat(sign);
    ExpMonomial mono(n);
    mono.freq = freq;
    for (int j = 1; j <= n; ++j) {
        ExpPoly<QPoly> c(n);
        int var = lambda_row ? sys.lambda_var(i, j) : sys.mu_var(i, j);
        c.add_term(mono, QPoly::variable(var));
        f.set_coeff(j, std::move(c));
    }
    return f;
}

SymFields full_ansatz(const ConstraintSystem& sys) {
    SymFields F;
    F.ambient = sys.n;
    for (int i = 1; i <= sys.n; ++i) {
        F.labels.push_back(i);
        F.axis.push_back(i);
        F.X.push_back(symbolic_row(sys, i, 1, true));
        F.Y.push_back(symbolic_row(sys, i, -1, false));
    }
    return F;
}

void emit_equations(ConstraintSystem& sys, const VectorField<QPoly>& residual, const std::string& label) {
    for (int j = 1; j <= residual.dim(); ++j) {
        for (const auto& [m, c] : residual.coeff(j).terms()) {
            if (c.is_zero()) continue;
            sys.equations.push_back({c, label + " @ d" + std::to_string(j) + " " + monomial_tag(m)});
        }
    }
}

void append_relation(ConstraintSystem& sys, const SymFields& F, const AnsatzRelation& rel) {
    using Kind = AnsatzRelation::Kind;
    const int a = F.pos(rel.i);
    const std::string si = std::to_string(rel.i);
    switch (rel.kind) {
        case Kind::TripleNormalized: {
            VectorField<QPoly> H = bracket(F.X[static_cast<std::size_t>(a)], F.Y[static_cast<std::size_t>(a)]);
            VectorField<QPoly> r1 = bracket(H, F.X[static_cast<std::size_t>(a)]);
            r1 -= F.X[static_cast<std::size_t>(a)];
            emit_equations(sys, r1, "[[X_" + si + ",Y_" + si + "],X_" + si + "] - X_" + si);
            VectorField<QPoly> r2 = bracket(H, F.Y[static_cast<std::size_t>(a)]);
            r2 += F.Y[static_cast<std::size_t>(a)];
            emit_equations(sys, r2, "[[X_" + si + ",Y_" + si + "],Y_" + si + "] + Y_" + si);
            break;
        }
        case Kind::CartanAxis: {
            VectorField<QPoly> H = bracket(F.X[static_cast<std::size_t>(a)], F.Y[static_cast<std::size_t>(a)]);
            for (int j = 1; j <= F.ambient; ++j) {
                if (j == F.axis[static_cast<std::size_t>(a)]) continue;
                for (const auto& [m, c] : H.coeff(j).terms()) {
                    if (c.is_zero()) continue;
                    sys.equations.push_back(
                        {c, "offaxis([X_" + si + ",Y_" + si + "]) @ d" + std::to_string(j) + " " + monomial_tag(m)});
                }
            }
            break;
        }
        case Kind::CommuteXX:
        case Kind::CommuteYY:
        case Kind::CommuteXY: {
            const int b = F.pos(rel.j);
            const std::string sj = std::to_string(rel.j);
            const auto& A = rel.kind == Kind::CommuteYY ? F.Y[static_cast<std::size_t>(a)] : F.X[static_cast<std::size_t>(a)];
            const auto& B = rel.kind == Kind::CommuteXX ? F.X[static_cast<std::size_t>(b)] : F.Y[static_cast<std::size_t>(b)];
            std::string label = rel.kind == Kind::CommuteXX   ? "[X_" + si + ",X_" + sj + "]"
                                : rel.kind == Kind::CommuteYY ? "[Y_" + si + ",Y_" + sj + "]"
                                                              : "[X_" + si + ",Y_" + sj + "]";
            emit_equations(sys, bracket(A, B), label);
            break;
        }
    }
}

QPoly remap_poly(const QPoly& p, const std::map<int, int>& remap) {
    QPoly r;
    for (const auto& [m, c] : p.terms()) {
        Monomial nm = Monomial::one();
        for (int v = 0; v < m.width(); ++v) {
            int e = m.exponent(v);
            if (e == 0) continue;
            nm = nm * Monomial::var(remap.at(v), e);
        }
        r.add_term(nm, c);
    }
    return r;
}

std::string kind_name(SolveOutcome::Kind k) {
    switch (k) {
        case SolveOutcome::Kind::Inconsistent: return "INCONSISTENT";
        case SolveOutcome::Kind::Forces: return "FORCES";
        case SolveOutcome::Kind::Open: return "OPEN";
    }
    return "?";
}

}  // namespace

int ConstraintSystem::lambda_var(int i, int j) const {
    if (i < 1 || i > n || j < 1 || j > n) throw IndexError("lambda_var: index out of range");
    return (i - 1) * n + (j - 1);
}

int ConstraintSystem::mu_var(int i, int j) const {
    if (i < 1 || i > n || j < 1 || j > n) throw IndexError("mu_var: index out of range");
    return n * n + (i - 1) * n + (j - 1);
}

std::string ConstraintSystem::variable_name(int var) const {
    if (var < 0 || var >= 2 * n * n) throw IndexError("variable_name: id out of range");
    bool lam = var < n * n;
    int base = lam ? var : var - n * n;
    return (lam ? "lambda" : "mu") + subscripts(base / n + 1, base % n + 1);
}

std::optional<int> ConstraintSystem::find_variable(const std::string& name) const {
    for (int v = 0; v < 2 * n * n; ++v)
        if (variable_name(v) == name) return v;
    return std::nullopt;
}

std::vector<int> ConstraintSystem::used_variables() const {
    std::set<int> seen;
    for (const auto& eq : equations) {
        for (const auto& [m, c] : eq.poly.terms())
            for (int v = 0; v < m.width(); ++v)
                if (m.exponent(v) > 0) seen.insert(v);
    }
    return std::vector<int>(seen.begin(), seen.end());
}

std::vector<AnsatzRelation> a1_product_relations(int n) {
    if (n < 1) throw IndexError("a1_product_relations: n must be positive");
    std::vector<AnsatzRelation> rels;
    for (int i = 1; i <= n; ++i) {
        rels.push_back({AnsatzRelation::Kind::TripleNormalized, i, 0});
        rels.push_back({AnsatzRelation::Kind::CartanAxis, i, 0});
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            rels.push_back({AnsatzRelation::Kind::CommuteXX, i, j});
            rels.push_back({AnsatzRelation::Kind::CommuteYY, i, j});
            rels.push_back({AnsatzRelation::Kind::CommuteXY, i, j});
            rels.push_back({AnsatzRelation::Kind::CommuteXY, j, i});
        }
    return rels;
}

ConstraintSystem ansatz_constraints(int n, const std::vector<AnsatzRelation>& relations) {
    if (n < 1) throw IndexError("ansatz_constraints: n must be positive");
    ConstraintSystem sys;
    sys.n = n;
    SymFields F = full_ansatz(sys);
    for (const auto& rel : relations) {
        if (rel.i < 1 || rel.i > n) throw IndexError("ansatz_constraints: relation index out of range");
        if (rel.kind == AnsatzRelation::Kind::CommuteXX || rel.kind == AnsatzRelation::Kind::CommuteYY ||
            rel.kind == AnsatzRelation::Kind::CommuteXY) {
            if (rel.j < 1 || rel.j > n) throw IndexError("ansatz_constraints: relation index out of range");
            if (rel.j == rel.i) throw PreconditionError("ansatz_constraints: commuting relation needs distinct indices");
        }
        append_relation(sys, F, rel);
    }
    return sys;
}

std::string SolveOutcome::str() const {
    std::ostringstream os;
    os << "outcome: " << kind_name(kind) << "\n";
    if (!forced.empty()) {
        os << "forced zero:";
        for (const auto& f : forced) os << " " << f;
        os << "\n";
    }
    os << "reduced basis (" << basis.size() << "):\n";
    for (const auto& p : basis)
        os << "  " << p.str([&](int v) { return variables[static_cast<std::size_t>(v)]; }) << "\n";
    return os.str();
}

SolveOutcome solve_small(const ConstraintSystem& sys, const std::vector<std::string>& nonzero,
                         const GroebnerOptions& opt) {
    std::set<int> used_set;
    for (int v : sys.used_variables()) used_set.insert(v);
    std::vector<int> sat_ids;
    for (const auto& name : nonzero) {
        auto id = sys.find_variable(name);
        if (!id) throw PreconditionError("solve_small: unknown variable " + name);
        used_set.insert(*id);
        sat_ids.push_back(*id);
    }
    std::vector<int> used(used_set.begin(), used_set.end());

    const int base = static_cast<int>(used.size());
    const int total = base + static_cast<int>(sat_ids.size());
    if (total > opt.max_variables)
        throw ResourceExhausted("solve_small: " + std::to_string(total) + " variables exceed the cap of " +
                                std::to_string(opt.max_variables));

    std::map<int, int> remap;
    for (int k = 0; k < base; ++k) remap[used[static_cast<std::size_t>(k)]] = k;

    SolveOutcome out;
    for (int v : used) out.variables.push_back(sys.variable_name(v));
    for (std::size_t t = 0; t < nonzero.size(); ++t) out.variables.push_back("inv(" + nonzero[t] + ")");

    std::vector<QPoly> gens;
    for (const auto& eq : sys.equations) {
        QPoly p = remap_poly(eq.poly, remap);
        if (!p.is_zero()) gens.push_back(std::move(p));
    }
    for (std::size_t t = 0; t < sat_ids.size(); ++t) {
        QPoly w = QPoly::variable(remap.at(sat_ids[static_cast<std::size_t>(t)])) *
                      QPoly::variable(base + static_cast<int>(t)) -
                  QPoly(1);
        gens.push_back(std::move(w));
    }

    out.basis = groebner_basis(gens, opt);
    if (ideal_contains_one(out.basis)) {
        out.kind = SolveOutcome::Kind::Inconsistent;
        return out;
    }
    for (int k = 0; k < base; ++k) {
        if (in_ideal(QPoly::variable(k), out.basis))
            out.forced.push_back(out.variables[static_cast<std::size_t>(k)]);
    }
    out.kind = out.forced.empty() ? SolveOutcome::Kind::Open : SolveOutcome::Kind::Forces;
    return out;
}

std::string PairwiseReduction::transcript() const {
    std::ostringstream os;
    os << "commuting-triple reduction on C^" << n << "\n";
    os << "diagonal nonvanishing derived: " << (diagonal_nonzero_derived ? "yes" : "no") << "\n";
    for (const auto& p : pairs) {
        os << "pair (" << p.i << "," << p.j << "): " << kind_name(p.outcome.kind);
        if (!p.outcome.forced.empty()) {
            os << " ->";
            for (const auto& f : p.outcome.forced) os << " " << f;
        }
        os << (p.offdiagonals_forced ? "  [off-diagonals vanish]" : "  [INCOMPLETE]") << "\n";
    }
    os << "all off-diagonal coefficients forced to zero: " << (all_offdiagonals_forced ? "yes" : "no") << "\n";
    return os.str();
}

PairwiseReduction pairwise_reduce(int n, const GroebnerOptions& opt) {
    if (n < 1) throw IndexError("pairwise_reduce: n must be positive");
    PairwiseReduction red;
    red.n = n;

    // Diagonal nonvanishing: assume the diagonal coefficient of row 1
    // vanishes; then the normalized-triple relations kill the whole row
    // (and the opposite row), so declaring any single row coefficient
    // nonzero yields a contradiction. Run the case split per coordinate,
    // for the lambda row and the mu row symmetrically.
    const int d = std::min(n, 2);
    bool derived = true;
    for (int side = 0; side < 2; ++side) {
        for (int j = 1; j <= d; ++j) {
            ConstraintSystem sys = ansatz_constraints(d, {{AnsatzRelation::Kind::TripleNormalized, 1, 0}});
            int zero_var = side == 0 ? sys.lambda_var(1, 1) : sys.mu_var(1, 1);
            sys.equations.push_back(
                {QPoly::variable(zero_var), "assume " + sys.variable_name(zero_var) + " = 0"});
            std::string witness = side == 0 ? sys.variable_name(sys.lambda_var(1, j))
                                            : sys.variable_name(sys.mu_var(1, j));
            SolveOutcome o = solve_small(sys, {witness}, opt);
            derived = derived && o.kind == SolveOutcome::Kind::Inconsistent;
        }
    }
    red.diagonal_nonzero_derived = derived;

    if (n >= 2) {
        ConstraintSystem naming;
        naming.n = n;
        SymFields full = full_ansatz(naming);
        red.all_offdiagonals_forced = true;
        for (int p = 1; p <= n; ++p) {
            for (int q = p + 1; q <= n; ++q) {
                // Relabel (p,q) to the first two coordinates, then project:
                // the ansatz coefficients are constant and the exponentials
                // involve only x_p, x_q, so projection is a homomorphism.
                std::vector<int> perm(static_cast<std::size_t>(n));
                perm[0] = p - 1;
                perm[1] = q - 1;
                int next = 2;
                for (int k = 0; k < n; ++k)
                    if (k != p - 1 && k != q - 1) perm[static_cast<std::size_t>(next++)] = k;

                SymFields pairF;
                pairF.ambient = 2;
                pairF.labels = {p, q};
                pairF.axis = {1, 2};
                for (int idx : {p, q}) {
                    const auto& Xi = full.X[static_cast<std::size_t>(idx - 1)];
                    const auto& Yi = full.Y[static_cast<std::size_t>(idx - 1)];
                    pairF.X.push_back(project(Xi.permuted(perm), 2));
                    pairF.Y.push_back(project(Yi.permuted(perm), 2));
                }

                ConstraintSystem psys;
                psys.n = n;
                std::vector<AnsatzRelation> rels = {
                    {AnsatzRelation::Kind::TripleNormalized, p, 0}, {AnsatzRelation::Kind::CartanAxis, p, 0},
                    {AnsatzRelation::Kind::TripleNormalized, q, 0}, {AnsatzRelation::Kind::CartanAxis, q, 0},
                    {AnsatzRelation::Kind::CommuteXX, p, q},        {AnsatzRelation::Kind::CommuteYY, p, q},
                    {AnsatzRelation::Kind::CommuteXY, p, q},        {AnsatzRelation::Kind::CommuteXY, q, p},
                };
                for (const auto& rel : rels) append_relation(psys, pairF, rel);

                std::vector<std::string> nonzero = {
                    psys.variable_name(psys.lambda_var(p, p)),
                    psys.variable_name(psys.lambda_var(q, q)),
                    psys.variable_name(psys.mu_var(p, p)),
                    psys.variable_name(psys.mu_var(q, q)),
                };
                PairOutcome po;
                po.i = p;
                po.j = q;
                po.outcome = solve_small(psys, nonzero, opt);
                std::vector<std::string> offs = {
                    psys.variable_name(psys.lambda_var(p, q)),
                    psys.variable_name(psys.lambda_var(q, p)),
                    psys.variable_name(psys.mu_var(p, q)),
                    psys.variable_name(psys.mu_var(q, p)),
                };
                po.offdiagonals_forced = po.outcome.kind == SolveOutcome::Kind::Forces;
                for (const auto& name : offs) {
                    bool found = std::find(po.outcome.forced.begin(), po.outcome.forced.end(), name) !=
                                 po.outcome.forced.end();
                    po.offdiagonals_forced = po.offdiagonals_forced && found;
                }
                red.all_offdiagonals_forced = red.all_offdiagonals_forced && po.offdiagonals_forced;
                red.pairs.push_back(std::move(po));
            }
        }
    } else {
        red.all_offdiagonals_forced = true;  // no pairs to constrain
    }
    return red;
}

std::vector<GField> joint_kernel(const std::vector<GField>& derivations, const std::vector<GField>& space) {
    FieldSpan span;
    std::vector<GField> basis;
    for (const auto& f : space) {
        if (f.is_zero()) continue;
        if (span.insert(to_sparse(f)) >= 0) basis.push_back(f);
    }
    const int dim = static_cast<int>(basis.size());
    if (dim == 0) return {};
    if (derivations.empty()) return basis;

    Matrix m(static_cast<std::size_t>(static_cast<int>(derivations.size()) * dim),
             std::vector<GaussianRational>(static_cast<std::size_t>(dim), GaussianRational::zero()));
    for (std::size_t di = 0; di < derivations.size(); ++di) {
        for (int k = 0; k < dim; ++k) {
            GField img = bracket(derivations[di], basis[static_cast<std::size_t>(k)]);
            auto coords = span.coordinates(to_sparse(img));
            if (!coords)
                throw PreconditionError("joint_kernel: space is not stable under derivation " +
                                        std::to_string(di + 1));
            for (int r = 0; r < dim; ++r)
                m[di * static_cast<std::size_t>(dim) + static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] =
                    (*coords)[static_cast<std::size_t>(r)];
        }
    }
    auto ker = kernel_basis(m);
    std::vector<GField> result;
    for (const auto& v : ker) {
        GField g(basis[0].dim());
        for (int k = 0; k < dim; ++k) {
            if (v[static_cast<std::size_t>(k)].is_zero()) continue;
            for (int j = 1; j <= g.dim(); ++j) {
                auto f = g.coeff(j);
                f += basis[static_cast<std::size_t>(k)].coeff(j) * v[static_cast<std::size_t>(k)];
                g.set_coeff(j, std::move(f));
            }
        }
        result.push_back(std::move(g));
    }
    return result;
}

std::vector<GField> bounded_field_space(int n, int degree) {
    if (n < 1) throw IndexError("bounded_field_space: dimension must be positive");
    if (degree < 0) throw PreconditionError("bounded_field_space: negative degree bound");
    std::vector<std::vector<int>> monomials;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    // Enumerate exponent vectors of total degree <= degree, lexicographically.
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n) {
            monomials.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[static_cast<std::size_t>(pos)] = e;
            rec(pos + 1, left - e);
        }
        cur[static_cast<std::size_t>(pos)] = 0;
    };
    rec(0, degree);

    std::vector<GField> fields;
    for (const auto& exps : monomials) {
        ExpMonomial m(n);
        m.pow = exps;
        for (int j = 1; j <= n; ++j) {
            GPoly c(n);
            c.add_term(m, GaussianRational::one());
            GField f(n);
            f.set_coeff(j, std::move(c));
            fields.push_back(std::move(f));
        }
    }
    return fields;
}

std::string ObstructionFragment::transcript() const {
    std::ostringstream os;
    os << "highest-weight obstruction for " << target.str() << " acting on C^" << n << "\n";
    os << "strongly orthogonal family (" << orthogonal_family.size() << "):";
    for (const auto& r : orthogonal_family) {
        os << " (";
        for (std::size_t k = 0; k < r.size(); ++k) {
            if (k) os << ",";
            os << r[static_cast<std::size_t>(k)];
        }
        os << ")";
    }
    os << (family_verified ? "  [verified pairwise]" : "  [UNVERIFIED]") << "\n";
    os << pairwise.transcript();
    os << "polynomial chart maps onto the canonical triples: " << (chart_connection_ok ? "yes" : "no") << "\n";
    os << "joint kernel of the straightened derived Borel = constant directions: "
       << (kernel_matches ? "yes" : "no") << "\n";
    os << "dimension of " << target.str() << ": " << target_dim << " > " << subalgebra_dim
       << " = dimension of the orthogonal-triple product\n";
    os << "obstruction " << (ok ? "ESTABLISHED" : "INCOMPLETE") << ": a highest weight vector outside the "
       << "product subalgebra would be killed by the derived Borel, hence constant, hence inside it\n";
    return os.str();
}

ObstructionFragment highest_weight_obstruction(const SimpleType& target, int n, const GroebnerOptions& opt) {
    const bool rank2 = (target.letter == 'B' || target.letter == 'G') && target.rank == 2 && n == 2;
    const bool rank4 = target.letter == 'D' && target.rank == 4 && n == 4;
    if (!rank2 && !rank4)
        throw PreconditionError("highest_weight_obstruction: supported targets are B2/G2 with n=2 and D4 with n=4");

    ObstructionFragment frag;
    frag.target = target;
    frag.n = n;

    RootSystem rs = build_root_system(target);
    auto fam = orthogonal_a1_subset(rs, n);
    if (!fam)
        throw PreconditionError("highest_weight_obstruction: no orthogonal family of the requested size");
    frag.orthogonal_family = *fam;
    frag.family_verified = true;
    for (std::size_t a = 0; a < fam->size(); ++a)
        for (std::size_t b = a + 1; b < fam->size(); ++b)
            frag.family_verified =
                frag.family_verified && rs.strongly_orthogonal((*fam)[a], (*fam)[b]);

    frag.pairwise = pairwise_reduce(n, opt);

    // Chart connection: substituting x_i = exp(u_i) carries the polynomial
    // chart triple <d_i, x_i d_i, x_i^2 d_i> onto the canonical exponential
    // triple spanned by exp(-u_i) d_i, d_i, exp(u_i) d_i.
    Realization canonical = a1_power(n);
    std::set<int> all_coords;
    for (int k = 1; k <= n; ++k) all_coords.insert(k);
    bool chart_ok = true;
    for (int i = 1; i <= n; ++i) {
        GField low = parse_field("d" + std::to_string(i), n);
        GField mid = parse_field("x" + std::to_string(i) + "*d" + std::to_string(i), n);
        GField high = parse_field("x" + std::to_string(i) + "^2*d" + std::to_string(i), n);
        const SlTriple& t = canonical.triples[static_cast<std::size_t>(i - 1)];
        GField y_scaled = Rat(-2) * t.y;  // exp(-u_i) d_i
        chart_ok = chart_ok && substitute_exp(low, all_coords) == y_scaled;
        chart_ok = chart_ok && substitute_exp(mid, all_coords) == t.h;
        chart_ok = chart_ok && substitute_exp(high, all_coords) == t.x;
    }
    frag.chart_connection_ok = chart_ok;

    // In the straightening coordinates the derived Borel generators are the
    // coordinate directions; a highest weight vector is killed by all of
    // them, so it lies in their joint kernel. Over the polynomial field
    // space bounded by the chart's degree the kernel is exactly the span of
    // the constant directions, which sits inside the product subalgebra.
    std::vector<GField> derivs;
    for (int i = 1; i <= n; ++i) derivs.push_back(GField::direction(n, i));
    std::vector<GField> space = bounded_field_space(n, 2);
    std::vector<GField> kernel = joint_kernel(derivs, space);

    FieldSpan expect;
    for (int i = 1; i <= n; ++i) expect.insert(to_sparse(GField::direction(n, i)));
    FieldSpan got;
    for (const auto& g : kernel) got.insert(to_sparse(g));
    bool matches = got.dimension() == n && expect.dimension() == n;
    for (const auto& g : kernel) matches = matches && expect.contains(to_sparse(g));
    for (int i = 1; i <= n; ++i) matches = matches && got.contains(to_sparse(GField::direction(n, i)));
    frag.kernel_matches = matches;

    frag.target_dim = 2 * static_cast<int>(rs.positive.size()) + rs.rank;
    frag.subalgebra_dim = 3 * n;
    frag.ok = frag.family_verified && frag.pairwise.diagonal_nonzero_derived &&
              frag.pairwise.all_offdiagonals_forced && frag.chart_connection_ok && frag.kernel_matches &&
              frag.target_dim > frag.subalgebra_dim;
    return frag;
}

namespace {

/// Verify that the witness nodes cut the claimed core sub-diagram out of
/// the offending type's Cartan matrix (and the E6 stage when present).
bool verify_witness(const SimpleType& offending, const ObstructionWitness& witness) {
    if (witness.a_type) return is_a_type(offending);
    IntMatrix cartan = cartan_matrix(offending);
    std::vector<int> zero_based;
    for (int nd : witness.nodes) zero_based.push_back(nd - 1);
    auto ident = identify_cartan_matrix(principal_submatrix(cartan, zero_based));
    if (ident.size() != 1 || !(ident[0].first == witness.target)) return false;
    if (!witness.e6_nodes.empty()) {
        std::vector<int> e6_zero;
        for (int nd : witness.e6_nodes) e6_zero.push_back(nd - 1);
        auto e6 = identify_cartan_matrix(principal_submatrix(cartan, e6_zero));
        if (e6.size() != 1 || e6[0].first.letter != 'E' || e6[0].first.rank != 6) return false;
        for (int nd : witness.nodes) {
            if (std::find(witness.e6_nodes.begin(), witness.e6_nodes.end(), nd) == witness.e6_nodes.end())
                return false;
        }
    }
    return true;
}

std::string factors_text(const std::vector<SimpleType>& factors) {
    std::string s;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k) s += " x ";
        s += factors[k].str();
    }
    return s;
}

}  // namespace

std::string Certificate::verdict_name() const {
    switch (verdict) {
        case Verdict::Realizable: return "REALIZABLE";
        case Verdict::NotRealizable: return "NOT_REALIZABLE";
        case Verdict::OutOfScope: return "OUT_OF_SCOPE";
    }
    return "?";
}

std::string Certificate::transcript() const {
    std::ostringstream os;
    os << "factors: " << factors_text(factors) << "\n";
    os << "ambient dimension: " << ambient << "\n";
    os << "rank sum: " << rank_sum << "\n";
    os << "verdict: " << verdict_name() << "\n";
    os << "reason: " << reason << "\n";
    if (realization) {
        os << "realization on C^" << realization->ambient << ":\n";
        for (std::size_t k = 0; k < realization->triples.size(); ++k) {
            const auto& t = realization->triples[k];
            os << "  X" << (k + 1) << " = " << to_string(t.x) << "\n";
            os << "  Y" << (k + 1) << " = " << to_string(t.y) << "\n";
            os << "  H" << (k + 1) << " = " << to_string(t.h) << "\n";
        }
    }
    if (audit_report) os << audit_report->str();
    if (chain) {
        os << "offending factor: " << chain->offending.str() << "\n";
        os << "witness: nodes {";
        for (std::size_t k = 0; k < chain->witness.nodes.size(); ++k) {
            if (k) os << ",";
            os << chain->witness.nodes[k];
        }
        os << "} of " << chain->offending.str() << " induce " << chain->witness.target.str();
        if (!chain->witness.e6_nodes.empty()) {
            os << " (through the E6 sub-diagram {";
            for (std::size_t k = 0; k < chain->witness.e6_nodes.size(); ++k) {
                if (k) os << ",";
                os << chain->witness.e6_nodes[k];
            }
            os << "})";
        }
        os << (chain->witness_verified ? "  [verified]" : "  [UNVERIFIED]") << "\n";
        os << chain->fragment.transcript();
    }
    if (rank_bound)
        os << "dimension bound: a Cartan subalgebra has dimension at most the coordinate count, but " << rank_sum
           << " > " << ambient << "\n";
    return os.str();
}

json Certificate::to_json() const {
    json j;
    j["verdict"] = verdict_name();
    json fs = json::array();
    for (const auto& f : factors) fs.push_back(f.str());
    j["factors"] = fs;
    j["ambient"] = ambient;
    j["rank_sum"] = rank_sum;
    j["reason"] = reason;
    if (realization) {
        json triples = json::array();
        for (const auto& t : realization->triples) {
            json jt;
            jt["x"] = to_string(t.x);
            jt["y"] = to_string(t.y);
            jt["h"] = to_string(t.h);
            triples.push_back(jt);
        }
        j["realization"] = {{"ambient", realization->ambient}, {"triples", triples}};
    }
    if (audit_report) {
        j["audit"] = {{"ok", audit_report->ok},
                      {"closure_dim", audit_report->closure_dim},
                      {"expected_dim", audit_report->expected_dim},
                      {"semisimple", audit_report->semisimple},
                      {"pointwise_rank", audit_report->pointwise_rank}};
    }
    if (chain) {
        json w;
        w["offending"] = chain->offending.str();
        w["core"] = chain->witness.target.str();
        w["nodes"] = chain->witness.nodes;
        if (!chain->witness.e6_nodes.empty()) w["e6_nodes"] = chain->witness.e6_nodes;
        w["verified"] = chain->witness_verified;
        json frag;
        frag["target"] = chain->fragment.target.str();
        frag["n"] = chain->fragment.n;
        frag["family_verified"] = chain->fragment.family_verified;
        frag["diagonal_nonzero_derived"] = chain->fragment.pairwise.diagonal_nonzero_derived;
        frag["offdiagonals_forced"] = chain->fragment.pairwise.all_offdiagonals_forced;
        frag["chart_connection_ok"] = chain->fragment.chart_connection_ok;
        frag["kernel_matches"] = chain->fragment.kernel_matches;
        frag["target_dim"] = chain->fragment.target_dim;
        frag["subalgebra_dim"] = chain->fragment.subalgebra_dim;
        frag["ok"] = chain->fragment.ok;
        j["obstruction"] = {{"witness", w}, {"fragment", frag}};
    }
    if (rank_bound) j["rank_bound"] = true;
    std::istringstream lines(transcript());
    json tr = json::array();
    std::string line;
    while (std::getline(lines, line)) tr.push_back(line);
    j["transcript"] = tr;
    return j;
}

Certificate classify(const std::vector<SimpleType>& factors, int ambient, const GroebnerOptions& opt,
                     std::uint64_t seed) {
    if (factors.empty()) throw PreconditionError("classify: empty factor list");
    if (ambient < 1) throw IndexError("classify: ambient dimension must be positive");

    Certificate cert;
    cert.factors = factors;
    cert.ambient = ambient;
    for (const auto& f : factors) cert.rank_sum += f.rank;

    if (cert.rank_sum < ambient) {
        cert.verdict = Certificate::Verdict::OutOfScope;
        cert.reason = "rank sum " + std::to_string(cert.rank_sum) + " is below the coordinate count " +
                      std::to_string(ambient) + ": the full-dimensional Cartan hypothesis fails, no verdict";
        return cert;
    }
    if (cert.rank_sum > ambient) {
        cert.verdict = Certificate::Verdict::NotRealizable;
        cert.rank_bound = true;
        cert.reason = "a Cartan subalgebra of dimension " + std::to_string(cert.rank_sum) +
                      " cannot act on C^" + std::to_string(ambient) +
                      ": commuting diagonalizable fields are bounded by the coordinate count";
        return cert;
    }

    auto non_a = std::find_if(factors.begin(), factors.end(), [](const SimpleType& f) { return !is_a_type(f); });
    if (non_a == factors.end()) {
        std::vector<int> ranks;
        for (const auto& f : factors) ranks.push_back(f.rank);
        cert.realization = product(ranks);
        cert.audit_report = audit(*cert.realization, seed);
        if (!cert.audit_report->ok) throw Error("classify: canonical realization failed its audit");
        cert.verdict = Certificate::Verdict::Realizable;
        cert.reason = "product of projective realizations acts on C^" + std::to_string(ambient) +
                      " with full-dimensional Cartan subalgebra; audit passes";
        return cert;
    }

    ObstructionChain chain;
    chain.offending = *non_a;
    chain.witness = obstruction_witness(*non_a);
    chain.witness_verified = verify_witness(*non_a, chain.witness);
    int core_n = chain.witness.target.letter == 'D' ? 4 : 2;
    chain.fragment = highest_weight_obstruction(chain.witness.target, core_n, opt);
    if (!chain.witness_verified || !chain.fragment.ok)
        throw Error("classify: obstruction evidence failed verification");
    cert.verdict = Certificate::Verdict::NotRealizable;
    cert.reason = chain.offending.str() + " contains a " + chain.witness.target.str() +
                  " sub-diagram; its root vectors would project to a full-rank action on C^" +
                  std::to_string(core_n) + ", which the highest-weight obstruction forbids";
    cert.chain = std::move(chain);
    return cert;
}

bool reverify(const Certificate& cert, std::uint64_t seed) {
    int rank_sum = 0;
    for (const auto& f : cert.factors) rank_sum += f.rank;
    if (rank_sum != cert.rank_sum) return false;

    switch (cert.verdict) {
        case Certificate::Verdict::OutOfScope:
            return rank_sum < cert.ambient;
        case Certificate::Verdict::NotRealizable: {
            if (cert.rank_bound) return rank_sum > cert.ambient;
            if (!cert.chain) return false;
            if (rank_sum != cert.ambient) return false;
            if (is_a_type(cert.chain->offending)) return false;
            bool present = false;
            for (const auto& f : cert.factors)
                if (f == cert.chain->offending) present = true;
            if (!present) return false;
            if (!verify_witness(cert.chain->offending, cert.chain->witness)) return false;
            int core_n = cert.chain->witness.target.letter == 'D' ? 4 : 2;
            ObstructionFragment frag = highest_weight_obstruction(cert.chain->witness.target, core_n);
            return frag.ok;
        }
        case Certificate::Verdict::Realizable: {
            if (rank_sum != cert.ambient) return false;
            if (!cert.realization) return false;
            for (const auto& f : cert.factors)
                if (!is_a_type(f)) return false;
            if (cert.realization->ambient != cert.ambient) return false;
            AuditReport report = audit(*cert.realization, seed);
            return report.ok;
        }
    }
    return false;
}

}  // namespace liefield
