#include "liefield/realize.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace liefield {

std::vector<GField> Realization::cartan() const {
    std::vector<GField> out;
    out.reserve(triples.size());
    for (const SlTriple& t : triples) out.push_back(t.h);
    return out;
}

std::vector<GField> Realization::fields() const {
    std::vector<GField> out;
    out.reserve(3 * triples.size());
    for (const SlTriple& t : triples) {
        out.push_back(t.x);
        out.push_back(t.y);
        out.push_back(t.h);
    }
    return out;
}

Realization a1_power(int n) {
    if (n < 1) throw IndexError("a1_power: need at least one coordinate");
    Realization r;
    r.ambient = n;
    const Rat mhalf = make_rat(-1, 2);
    for (int i = 1; i <= n; ++i) {
        r.factors.push_back({'A', 1});
        std::vector<Rat> up(static_cast<size_t>(n), Rat(0)), down(static_cast<size_t>(n), Rat(0));
        up[static_cast<size_t>(i - 1)] = Rat(1);
        down[static_cast<size_t>(i - 1)] = Rat(-1);
        SlTriple t;
        t.x = GPoly::exponential(n, std::move(up)) * GField::direction(n, i);
        t.y = mhalf * (GPoly::exponential(n, std::move(down)) * GField::direction(n, i));
        t.h = GField::direction(n, i);
        r.triples.push_back(std::move(t));
    }
    return r;
}

Realization a_type(int rank) {
    if (rank < 1) throw IndexError("a_type: rank must be positive");
    const int n = rank;
    Realization r;
    r.ambient = n;
    r.factors.push_back({'A', n});

    auto var = [n](int i) { return GPoly::variable(n, i); };
    GField euler(n); // sum_j x_j d_j
    for (int j = 1; j <= n; ++j) euler.set_coeff(j, var(j));

    const Rat half = make_rat(1, 2), mhalf = make_rat(-1, 2);
    {
        SlTriple t;
        t.x = GField::direction(n, 1);
        t.y = mhalf * (var(1) * euler);
        t.h = mhalf * (euler + var(1) * GField::direction(n, 1));
        r.triples.push_back(std::move(t));
    }
    for (int i = 2; i <= n; ++i) {
        SlTriple t;
        t.x = var(i - 1) * GField::direction(n, i);
        t.y = half * (var(i) * GField::direction(n, i - 1));
        t.h = half * (var(i - 1) * GField::direction(n, i - 1) - var(i) * GField::direction(n, i));
        r.triples.push_back(std::move(t));
    }
    return r;
}

Realization product(const std::vector<int>& ranks) {
    if (ranks.empty()) throw IndexError("product: need at least one factor");
    int total = 0;
    for (int k : ranks) {
        if (k < 1) throw IndexError("product: ranks must be positive");
        total += k;
    }
    Realization r;
    r.ambient = total;
    int offset = 0;
    for (int k : ranks) {
        Realization block = a_type(k);
        r.factors.push_back({'A', k});
        for (const SlTriple& t : block.triples) {
            SlTriple shifted;
            shifted.x = t.x.shifted_embed(total, offset);
            shifted.y = t.y.shifted_embed(total, offset);
            shifted.h = t.h.shifted_embed(total, offset);
            r.triples.push_back(std::move(shifted));
        }
        offset += k;
    }
    return r;
}

Realization straighten(const Realization& r) {
    std::set<int> coords;
    for (int i = 1; i <= r.ambient; ++i) coords.insert(i);
    Realization out;
    out.ambient = r.ambient;
    out.factors = r.factors;
    for (const SlTriple& t : r.triples) {
        SlTriple s;
        s.x = substitute_exp(t.x, coords);
        s.y = substitute_exp(t.y, coords);
        s.h = substitute_exp(t.h, coords);
        // The substituted diagonalizable element must have constant
        // coefficients: that is what makes the new frame a torus frame.
        for (int j = 1; j <= out.ambient; ++j) {
            const GPoly& c = s.h.coeff(j);
            for (int v = 1; v <= out.ambient; ++v)
                if (c.depends_on(v))
                    throw PreconditionError(
                        "straighten: substituted element is not constant-coefficient");
        }
        out.triples.push_back(std::move(s));
    }
    return out;
}

namespace {

std::string types_to_string(const std::vector<SimpleType>& ts) {
    std::string out;
    for (size_t k = 0; k < ts.size(); ++k) {
        if (k) out += " x ";
        out += ts[k].str();
    }
    return out.empty() ? "(none)" : out;
}

} // namespace

std::string AuditReport::str() const {
    std::ostringstream os;
    os << "triple relations:    " << (relations_ok ? "ok" : "FAILED") << "\n";
    os << "classical relations: " << (standard_relations_ok ? "ok" : "FAILED") << "\n";
    os << "commuting family:    " << (cartan_commutes ? "ok" : "FAILED") << "\n";
    os << "closure dimension:   " << closure_dim << " (expected " << expected_dim << ")\n";
    os << "killing form:        " << (semisimple ? "nondegenerate" : "DEGENERATE") << "\n";
    os << "recovered type:      " << types_to_string(identified)
       << (type_matches ? "" : " MISMATCH") << "\n";
    os << "pointwise rank:      " << pointwise_rank << "\n";
    for (const std::string& f : failures) os << "failure: " << f << "\n";
    os << "audit: " << (ok ? "PASS" : "FAIL") << "\n";
    return os.str();
}

AuditReport audit(const Realization& r, std::uint64_t seed, int max_dim) {
    AuditReport rep;
    auto fail = [&rep](const std::string& what) { rep.failures.push_back(what); };

    if (r.triples.empty() || r.ambient < 1) {
        fail("empty realization");
        return rep;
    }

    // Per-triple relations in both normalizations.
    rep.relations_ok = true;
    rep.standard_relations_ok = true;
    for (size_t i = 0; i < r.triples.size(); ++i) {
        const SlTriple& t = r.triples[i];
        if (!(bracket(t.h, t.x) == t.x) || !(bracket(t.h, t.y) == -t.y) ||
            !(bracket(t.x, t.y) == t.h)) {
            rep.relations_ok = false;
            fail("triple " + std::to_string(i + 1) + " violates the normalized relations");
        }
        GField h2 = Rat(2) * t.h, y2 = Rat(2) * t.y;
        if (!(bracket(h2, t.x) == Rat(2) * t.x) || !(bracket(h2, y2) == Rat(-2) * y2) ||
            !(bracket(t.x, y2) == h2)) {
            rep.standard_relations_ok = false;
            fail("triple " + std::to_string(i + 1) + " violates the classical relations");
        }
    }

    // The diagonalizable elements must commute pairwise.
    rep.cartan_commutes = true;
    std::vector<GField> cartan = r.cartan();
    for (size_t a = 0; a < cartan.size(); ++a)
        for (size_t b = a + 1; b < cartan.size(); ++b)
            if (!bracket(cartan[a], cartan[b]).is_zero()) {
                rep.cartan_commutes = false;
                fail("h" + std::to_string(a + 1) + " and h" + std::to_string(b + 1) +
                     " do not commute");
            }

    for (const SimpleType& t : r.factors) rep.expected_dim += t.rank * t.rank + 2 * t.rank;

    bool structure_ok = false;
    try {
        Subalgebra closure = span_closure(r.fields(), max_dim);
        rep.closure_dim = closure.dimension();
        if (rep.closure_dim != rep.expected_dim)
            fail("closure dimension " + std::to_string(rep.closure_dim) + " != expected " +
                 std::to_string(rep.expected_dim));
        rep.semisimple = is_semisimple(closure);
        if (!rep.semisimple) fail("Killing form is degenerate");

        CartanData cd = root_decomposition(closure, cartan);
        rep.identified = identify_type(cd);
        std::vector<SimpleType> declared = r.factors;
        std::sort(declared.begin(), declared.end());
        rep.type_matches = rep.identified == declared;
        if (!rep.type_matches) fail("recovered type does not match the declared factors");

        rep.pointwise_rank = generic_rank(closure.basis(), seed);
        if (rep.pointwise_rank != r.ambient)
            fail("pointwise rank " + std::to_string(rep.pointwise_rank) + " != ambient " +
                 std::to_string(r.ambient));

        structure_ok = rep.closure_dim == rep.expected_dim && rep.semisimple &&
                       rep.type_matches && rep.pointwise_rank == r.ambient;
    } catch (const Error& e) {
        fail(std::string("structure analysis failed: ") + e.what());
    }

    rep.ok = rep.relations_ok && rep.standard_relations_ok && rep.cartan_commutes && structure_ok;
    return rep;
}

} // namespace liefield
