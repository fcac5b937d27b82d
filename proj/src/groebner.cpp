#include "liefield/groebner.hpp"

#include <algorithm>
#include <utility>

namespace liefield {

namespace {

/// p - (coefficient ratio) * shift * g, eliminating p's leading term
/// against g's.  Pre: g's leading monomial divides p's.
void reduce_leading(QPoly& p, const QPoly& g) {
    Monomial shift = p.leading_monomial().divided_by(g.leading_monomial());
    Rat factor = p.leading_coeff() / g.leading_coeff();
    p -= QPoly::term(shift, factor) * g;
}

QPoly s_polynomial(const QPoly& f, const QPoly& g) {
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    QPoly a = QPoly::term(l.divided_by(f.leading_monomial()), Rat(1) / f.leading_coeff()) * f;
    QPoly b = QPoly::term(l.divided_by(g.leading_monomial()), Rat(1) / g.leading_coeff()) * g;
    return a - b;
}

struct Pair {
    int i;
    int j;
    Monomial lcm;
};

bool pair_precedes(const Pair& a, const Pair& b) {
    DegRevLexGreater gt;
    if (a.lcm != b.lcm) return gt(b.lcm, a.lcm);  // smaller lcm first
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

}  // namespace

QPoly normal_form(QPoly p, const std::vector<QPoly>& divisors) {
    QPoly remainder;
    while (!p.is_zero()) {
        bool reduced = false;
        for (const QPoly& g : divisors) {
            if (g.is_zero()) continue;
            if (g.leading_monomial().divides(p.leading_monomial())) {
                reduce_leading(p, g);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.add_term(p.leading_monomial(), p.leading_coeff());
            p.add_term(p.leading_monomial(), -p.leading_coeff());
        }
    }
    return remainder;
}

std::vector<QPoly> groebner_basis(const std::vector<QPoly>& gens, const GroebnerOptions& opt) {
    for (const QPoly& g : gens) {
        if (g.max_variable() + 1 > opt.max_variables)
            throw ResourceExhausted("groebner_basis: variable count exceeds the configured cap");
    }

    std::vector<QPoly> basis;
    std::vector<Pair> pairs;
    auto push = [&](QPoly p) {
        if (p.is_zero()) return;
        p = p.monic();
        int idx = static_cast<int>(basis.size());
        for (int k = 0; k < idx; ++k)
            pairs.push_back(Pair{k, idx, Monomial::lcm(basis[static_cast<std::size_t>(k)].leading_monomial(), p.leading_monomial())});
        basis.push_back(std::move(p));
        if (static_cast<int>(basis.size()) > opt.max_basis)
            throw ResourceExhausted("groebner_basis: basis size exceeds the configured cap");
    };

    for (const QPoly& g : gens) push(normal_form(g, basis));

    long steps = 0;
    while (!pairs.empty()) {
        if (++steps > opt.max_pair_steps)
            throw ResourceExhausted("groebner_basis: pair processing exceeds the configured cap");
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_precedes);
        Pair p = *it;
        pairs.erase(it);
        const QPoly& f = basis[static_cast<std::size_t>(p.i)];
        const QPoly& g = basis[static_cast<std::size_t>(p.j)];
        // Coprime leading monomials: the S-polynomial always reduces to zero.
        if (f.leading_monomial().coprime_with(g.leading_monomial())) continue;
        push(normal_form(s_polynomial(f, g), basis));
    }

    // Minimalize: drop elements whose leading monomial another element divides.
    std::vector<QPoly> minimal;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        bool redundant = false;
        for (std::size_t l = 0; l < basis.size(); ++l) {
            if (l == k) continue;
            const Monomial& lk = basis[k].leading_monomial();
            const Monomial& ll = basis[l].leading_monomial();
            if (ll.divides(lk) && (ll != lk || l < k)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[k]);
    }

    // Fully reduce each element against the others.
    std::vector<QPoly> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<QPoly> others;
        for (std::size_t l = 0; l < minimal.size(); ++l)
            if (l != k) others.push_back(minimal[l]);
        QPoly r = normal_form(minimal[k], others);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }

    DegRevLexGreater gt;
    std::sort(reduced.begin(), reduced.end(), [&](const QPoly& a, const QPoly& b) {
        return gt(b.leading_monomial(), a.leading_monomial());
    });
    return reduced;
}

bool ideal_contains_one(const std::vector<QPoly>& basis) {
    for (const QPoly& g : basis)
        if (!g.is_zero() && g.leading_monomial().is_one()) return true;
    return false;
}

bool in_ideal(const QPoly& p, const std::vector<QPoly>& groebner) {
    return normal_form(p, groebner).is_zero();
}

}  // namespace liefield
