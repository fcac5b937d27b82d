// Multivariate polynomials over Q, the degrevlex order, multivariate
// division, and reduced Groebner bases. All expected values are computed
// by hand in the comments.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liefield/groebner.hpp"
#include "liefield/qpoly.hpp"
#include "liefield/vfield.hpp"

#include <algorithm>
#include <random>
#include <vector>

using namespace liefield;

namespace {

QPoly V(int k) { return QPoly::variable(k); }

std::vector<QPoly> shuffled(std::vector<QPoly> gens, unsigned seed) {
    std::mt19937 rng(seed);
    std::shuffle(gens.begin(), gens.end(), rng);
    return gens;
}

}  // namespace

TEST_CASE("monomial arithmetic and divisibility") {
    Monomial one = Monomial::one();
    Monomial x = Monomial::var(0);
    Monomial y = Monomial::var(1);
    Monomial x2y = x * x * y;

    CHECK(one.is_one());
    CHECK(one.degree() == 0);
    CHECK(x2y.degree() == 3);
    CHECK(x2y.exponent(0) == 2);
    CHECK(x2y.exponent(1) == 1);
    CHECK(x2y.exponent(5) == 0);

    CHECK(x.divides(x2y));
    CHECK(y.divides(x2y));
    CHECK(!(y * y).divides(x2y));
    CHECK(x2y.divided_by(x * y) == x);
    CHECK(x2y.divided_by(x2y).is_one());
    CHECK_THROWS_AS((x * y).divided_by(x2y), PreconditionError);

    CHECK(Monomial::lcm(x * x, x * y) == x2y);
    CHECK(x.coprime_with(y));
    CHECK(!(x * y).coprime_with(y));

    // Trailing zeros never distinguish monomials.
    Monomial padded;
    padded.exps = {1, 0, 0};
    padded.trim();
    CHECK(padded == x);
}

TEST_CASE("degrevlex order pins") {
    // With x > y > z, degree-2 monomials order as
    //   x^2 > xy > y^2 > xz > yz > z^2,
    // and all of them dominate the degree-1 monomials x > y > z > 1.
    Monomial x = Monomial::var(0), y = Monomial::var(1), z = Monomial::var(2);
    std::vector<Monomial> expected = {x * x, x * y, y * y, x * z, y * z, z * z, x, y, z, Monomial::one()};
    DegRevLexGreater gt;
    for (std::size_t a = 0; a < expected.size(); ++a)
        for (std::size_t b = 0; b < expected.size(); ++b) {
            CHECK(gt(expected[a], expected[b]) == (a < b));
        }
}

TEST_CASE("polynomial arithmetic against hand expansion") {
    QPoly x = V(0), y = V(1);

    QPoly sq = (x + y) * (x + y);
    QPoly expect = x * x + Rat(2) * (x * y) + y * y;
    CHECK(sq == expect);

    CHECK((x - y) * (x + y) == x * x - y * y);
    CHECK((x * x - y * y).degree() == 2);
    CHECK((x - x).is_zero());
    CHECK(QPoly(0).is_zero());
    CHECK(QPoly(3).is_constant());
    CHECK(QPoly(3).constant_value() == Rat(3));
    CHECK((x * y).max_variable() == 1);
    CHECK(QPoly(7).max_variable() == -1);

    QPoly p = x * x * y - y + QPoly(2);
    CHECK(p.leading_monomial() == Monomial::var(0, 2) * Monomial::var(1));
    CHECK(p.leading_coeff() == Rat(1));
    QPoly q = Rat(3) * p;
    CHECK(q.monic() == p);

    // Printing: leading term first, rational coefficients, ^ powers.
    QPoly r = x * x - y * Rat(1, 2) + QPoly(1);
    CHECK(r.str() == "t0^2 - 1/2*t1 + 1");
    CHECK(QPoly().str() == "0");
    CHECK((-x).str() == "-t0");
}

TEST_CASE("multivariate division: classic remainder and ideal membership property") {
    QPoly x = V(0), y = V(1);
    // x^2 y divided by {xy - 1, y^2 - 1}: one reduction by the first
    // divisor leaves remainder x.
    QPoly p = x * x * y;
    std::vector<QPoly> divs = {x * y - QPoly(1), y * y - QPoly(1)};
    CHECK(normal_form(p, divs) == x);

    // Remainder is idempotent: p - nf(p) always reduces to zero.
    QPoly big = (x + y) * (x + y) * (x - QPoly(3)) + x * y * y;
    QPoly r = normal_form(big, divs);
    CHECK(normal_form(big - r, divs).is_zero());

    // No divisor applicable: remainder equals the input.
    CHECK(normal_form(x + QPoly(1), {x * y - QPoly(1)}) == x + QPoly(1));
    CHECK(normal_form(QPoly(), divs).is_zero());
}

TEST_CASE("groebner basis: x^2 - y, x^3 - x") {
    QPoly x = V(0), y = V(1);
    // Hand run of Buchberger: the S-polynomial of the two generators is
    // xy - x; pairing it with x^2 - y gives y^2 - y; everything else
    // reduces to zero. Reduced basis, ascending leading monomials:
    //   y^2 - y < xy - x < x^2 - y.
    auto gb = groebner_basis({x * x - y, x * x * x - x});
    REQUIRE(gb.size() == 3);
    CHECK(gb[0] == y * y - y);
    CHECK(gb[1] == x * y - x);
    CHECK(gb[2] == x * x - y);

    CHECK(in_ideal(x * x * x - x, gb));
    CHECK(in_ideal((x * x - y) * (y * y - y), gb));
    CHECK(!in_ideal(x - QPoly(1), gb));
    CHECK(!ideal_contains_one(gb));
}

TEST_CASE("groebner basis: cyclic-3") {
    QPoly x = V(0), y = V(1), z = V(2);
    // Reduced degrevlex basis of {x+y+z, xy+yz+zx, xyz-1} is
    //   {x + y + z, y^2 + yz + z^2, z^3 - 1}.
    std::vector<QPoly> gens = {x + y + z, x * y + y * z + z * x, x * y * z - QPoly(1)};
    auto gb = groebner_basis(gens);
    REQUIRE(gb.size() == 3);
    CHECK(gb[0] == x + y + z);
    CHECK(gb[1] == y * y + y * z + z * z);
    CHECK(gb[2] == z * z * z - QPoly(1));

    // The reduced basis is a canonical form of the ideal: any generator
    // order produces the identical vector.
    for (unsigned seed : {1u, 2u, 3u, 4u, 5u, 6u}) {
        auto gb2 = groebner_basis(shuffled(gens, seed));
        CHECK(gb2 == gb);
    }
}

TEST_CASE("unit ideal detection") {
    QPoly v = V(0), w = V(1);
    // v invertible (v*w = 1) and v = 0 together are contradictory.
    auto gb = groebner_basis({v * w - QPoly(1), v});
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == QPoly(1));
    CHECK(ideal_contains_one(gb));

    // A nilpotent cannot be invertible.
    auto gb2 = groebner_basis({v * v, v * w - QPoly(1)});
    CHECK(ideal_contains_one(gb2));

    // Consistent system for contrast: a hyperbola meets a line.
    auto gb3 = groebner_basis({v * w - QPoly(1), v - w});
    CHECK(!ideal_contains_one(gb3));
}

TEST_CASE("forcing a variable to zero under a nonzero constraint") {
    // lambda = t0, t = t1, s = t2 (the inverse witness for t).
    QPoly lam = V(0), t = V(1), s = V(2);
    std::vector<QPoly> gens = {lam - lam * t, t - lam, lam * t + t};

    // Without saturation the system is consistent and already forces both
    // variables to zero: the ideal is exactly <lambda, t>.
    auto gb = groebner_basis(gens);
    CHECK(!ideal_contains_one(gb));
    CHECK(in_ideal(lam, gb));
    CHECK(in_ideal(t, gb));

    // Declaring t nonzero (t*s = 1) makes it inconsistent.
    auto gens_sat = gens;
    gens_sat.push_back(t * s - QPoly(1));
    auto gb_sat = groebner_basis(gens_sat);
    CHECK(ideal_contains_one(gb_sat));

    // Generator order never changes the reduced basis.
    for (unsigned seed : {11u, 12u, 13u}) {
        CHECK(groebner_basis(shuffled(gens_sat, seed)) == gb_sat);
        CHECK(groebner_basis(shuffled(gens, seed)) == gb);
    }
}

TEST_CASE("resource caps raise instead of degrading") {
    // Variable cap.
    GroebnerOptions tight;
    tight.max_variables = 3;
    CHECK_THROWS_AS(groebner_basis({V(5) - QPoly(1)}, tight), ResourceExhausted);

    // Pair-step cap.
    QPoly x = V(0), y = V(1), z = V(2);
    GroebnerOptions steps;
    steps.max_pair_steps = 1;
    CHECK_THROWS_AS(groebner_basis({x + y + z, x * y + y * z + z * x, x * y * z - QPoly(1)}, steps), ResourceExhausted);

    // Basis-size cap.
    GroebnerOptions small;
    small.max_basis = 2;
    CHECK_THROWS_AS(groebner_basis({x * x - y, x * x * x - x}, small), ResourceExhausted);
}

TEST_CASE("exponential fields with symbolic constant coefficients") {
    // X = exp(x1)(a d1 + b d2), Y = exp(-x1)(c d1 + d d2) with unknown
    // constants a, b, c, d. Expanding the bracket by hand:
    //   [X, Y] = -2ac d1 - (ad + bc) d2,
    // a constant field. This drives the generic bracket engine over the
    // polynomial coefficient ring before the constraint assembler uses it.
    using SymPoly = ExpPoly<QPoly>;
    using SymField = VectorField<QPoly>;
    QPoly a = V(0), b = V(1), c = V(2), d = V(3);

    auto expfac = [](int dim, int coord, long sign) {
        ExpMonomial m(dim);
        m.freq[static_cast<std::size_t>(coord)] = Rat(sign);
        return m;
    };

    SymField X(2), Y(2);
    {
        SymPoly f1(2), f2(2);
        f1.add_term(expfac(2, 0, 1), a);
        f2.add_term(expfac(2, 0, 1), b);
        X.set_coeff(1, f1);
        X.set_coeff(2, f2);
    }
    {
        SymPoly g1(2), g2(2);
        g1.add_term(expfac(2, 0, -1), c);
        g2.add_term(expfac(2, 0, -1), d);
        Y.set_coeff(1, g1);
        Y.set_coeff(2, g2);
    }

    SymField H = bracket(X, Y);
    SymPoly h1 = H.coeff(1), h2 = H.coeff(2);

    REQUIRE(h1.terms().size() == 1);
    REQUIRE(h2.terms().size() == 1);
    const auto& [m1, c1] = *h1.terms().begin();
    const auto& [m2, c2] = *h2.terms().begin();
    CHECK(m1 == ExpMonomial(2));  // constant monomial: no powers, no frequencies
    CHECK(m2 == ExpMonomial(2));
    CHECK(c1 == Rat(-2) * (a * c));
    CHECK(c2 == -(a * d + b * c));

    // Antisymmetry survives symbolic coefficients.
    SymField M = bracket(Y, X);
    CHECK(M.coeff(1) == -h1);
    CHECK(M.coeff(2) == -h2);
}
