#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liefield/exppoly.hpp"
#include "testutil.hpp"

#include <cmath>
#include <complex>

using namespace liefield;
using testutil::Rng;

TEST_CASE("gaussian rational field arithmetic") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK(i.conj() == -i);
    GaussianRational z(make_rat(3, 2), make_rat(-1, 3));
    CHECK(z * z.inverse() == GaussianRational::one());
    CHECK(z + (-z) == GaussianRational::zero());
    CHECK(z.norm() == make_rat(9, 4) + make_rat(1, 9));
    CHECK((z / z) == GaussianRational::one());
    CHECK(GaussianRational(make_rat(1, 2), make_rat(1, 2)).str() == "1/2 + 1/2*i");
}

TEST_CASE("monomial order is lexicographic on frequency then power") {
    ExpMonomial lo(2), id(2), hi(2), pow1(2), pow2(2);
    lo.freq[0] = -1;
    hi.freq[0] = 1;
    pow1.pow[0] = 1;
    pow2.pow[1] = 1;
    CHECK(lo < id);
    CHECK(id < hi);
    CHECK(id < pow1);   // same frequency, power breaks the tie
    CHECK(pow2 < pow1); // lex on the power vector
    CHECK_FALSE(pow1 < pow1);
}

TEST_CASE("terms with equal monomials merge and zero sums vanish") {
    GPoly a = GPoly::variable(2, 1) * GaussianRational(Rat(2), Rat(1)); // (2+i) x1
    GPoly b = GPoly::variable(2, 1);
    GPoly sum = a + b;
    REQUIRE(sum.term_count() == 1);
    CHECK(sum.terms().begin()->second == GaussianRational(Rat(3), Rat(1)));

    GPoly x = GPoly::variable(2, 1);
    CHECK((x - x).is_zero());
    CHECK((x + (-x)).is_zero());
}

TEST_CASE("products add powers and frequencies") {
    // (x1 e^{x1}) * x1 = x1^2 e^{x1}
    GPoly xe = GPoly::variable(1, 1) * GPoly::exponential(1, {Rat(1)});
    GPoly p = xe * GPoly::variable(1, 1);
    REQUIRE(p.term_count() == 1);
    const auto& [m, c] = *p.terms().begin();
    CHECK(m.pow[0] == 2);
    CHECK(m.freq[0] == 1);
    CHECK(c == GaussianRational::one());

    // e^{x1} * e^{-x1} = 1
    GPoly one = GPoly::exponential(1, {Rat(1)}) * GPoly::exponential(1, {Rat(-1)});
    CHECK(one == GPoly::constant(1, GaussianRational::one()));
}

TEST_CASE("partial derivative: product rule across power and exponential parts") {
    // d/dx (x^2 e^{2x}) = 2x e^{2x} + 2 x^2 e^{2x}
    GPoly x = GPoly::variable(1, 1);
    GPoly p = x * x * GPoly::exponential(1, {Rat(2)});
    GPoly expect = (Rat(2) * x + Rat(2) * x * x) * GPoly::exponential(1, {Rat(2)});
    CHECK(p.partial(1) == expect);

    // d/dx e^{qx} = q e^{qx}
    GPoly e = GPoly::exponential(1, {make_rat(-3, 2)});
    CHECK(e.partial(1) == e * make_rat(-3, 2));

    // constants die
    CHECK(GPoly::constant(1, GaussianRational::i()).partial(1).is_zero());
}

TEST_CASE("depends_on sees both power and exponential dependence") {
    GPoly p = GPoly::variable(3, 1) * GPoly::exponential(3, {Rat(0), Rat(1), Rat(0)});
    CHECK(p.depends_on(1));
    CHECK(p.depends_on(2));
    CHECK_FALSE(p.depends_on(3));
    CHECK_THROWS_AS(p.depends_on(4), IndexError);
}

TEST_CASE("ring laws on random elements") {
    Rng rng(20260818u);
    for (int trial = 0; trial < 200; ++trial) {
        int dim = testutil::uniform_int(rng, 1, 3);
        GPoly a = testutil::random_poly(rng, dim, 3);
        GPoly b = testutil::random_poly(rng, dim, 3);
        GPoly c = testutil::random_poly(rng, dim, 3);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("partial is a derivation and partials commute") {
    Rng rng(77001u);
    for (int trial = 0; trial < 200; ++trial) {
        int dim = testutil::uniform_int(rng, 1, 3);
        int i = testutil::uniform_int(rng, 1, dim);
        int j = testutil::uniform_int(rng, 1, dim);
        GPoly a = testutil::random_poly(rng, dim, 3);
        GPoly b = testutil::random_poly(rng, dim, 3);
        CHECK((a * b).partial(i) == a.partial(i) * b + a * b.partial(i));
        CHECK(a.partial(i).partial(j) == a.partial(j).partial(i));
    }
}

TEST_CASE("numeric evaluation matches a hand-computed value and flags overflow") {
    // (1+i) x^2 e^{2x} at x = 1/2: (1+i) * 1/4 * e
    GPoly p = GPoly::variable(1, 1) * GPoly::variable(1, 1) * GPoly::exponential(1, {Rat(2)}) *
              GaussianRational(Rat(1), Rat(1));
    double pt[] = {0.5};
    std::complex<double> v = p.eval(pt);
    double expect = 0.25 * std::exp(1.0);
    CHECK(std::abs(v.real() - expect) < 1e-12);
    CHECK(std::abs(v.imag() - expect) < 1e-12);

    GPoly big = GPoly::exponential(1, {Rat(100000)});
    double far[] = {3.0};
    CHECK_THROWS_AS(big.eval(far), EvalError);
}

TEST_CASE("evaluation is a ring homomorphism at sample points") {
    Rng rng(90125u);
    for (int trial = 0; trial < 50; ++trial) {
        int dim = testutil::uniform_int(rng, 1, 3);
        GPoly a = testutil::random_poly(rng, dim, 3, 2, 1);
        GPoly b = testutil::random_poly(rng, dim, 3, 2, 1);
        std::vector<double> pt(static_cast<size_t>(dim));
        for (double& x : pt) x = testutil::uniform_int(rng, -2, 2) * 0.5;
        std::complex<double> va = a.eval(pt), vb = b.eval(pt);
        CHECK(std::abs((a + b).eval(pt) - (va + vb)) < 1e-9);
        CHECK(std::abs((a * b).eval(pt) - va * vb) < 1e-9);
    }
}

TEST_CASE("coordinate bookkeeping: extend, truncate, permute") {
    GPoly p = GPoly::variable(2, 1) * GPoly::exponential(2, {Rat(1), Rat(0)});
    GPoly up = p.extended(4);
    CHECK(up.dim() == 4);
    CHECK(up.truncated(2) == p);
    CHECK_THROWS_AS(GPoly::variable(2, 2).truncated(1), PreconditionError);

    // swap x1 <-> x2
    GPoly q = GPoly::variable(2, 1) * GPoly::exponential(2, {Rat(0), Rat(2)});
    GPoly swapped = q.permuted({1, 0});
    CHECK(swapped == GPoly::variable(2, 2) * GPoly::exponential(2, {Rat(2), Rat(0)}));
    CHECK(swapped.permuted({1, 0}) == q);
}
