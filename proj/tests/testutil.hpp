#pragma once

// Shared random generators for the property tests. Everything is seeded
// explicitly so failures reproduce byte-for-byte.

#include "liefield/vfield.hpp"

#include <random>

namespace testutil {

using liefield::ExpMonomial;
using liefield::ExpPoly;
using liefield::GaussianRational;
using liefield::GField;
using liefield::GPoly;
using liefield::Rat;
using liefield::VectorField;

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Small rational: numerator in [-4,4], denominator in {1,2,3}.
inline Rat random_rat(Rng& rng) {
    Rat r(uniform_int(rng, -4, 4), uniform_int(rng, 1, 3));
    r.canonicalize();
    return r;
}

/// Nonzero Gaussian rational, imaginary part present about a third of the time.
inline GaussianRational random_gauss(Rng& rng) {
    for (;;) {
        Rat re = random_rat(rng);
        Rat im = (uniform_int(rng, 0, 2) == 0) ? random_rat(rng) : Rat(0);
        GaussianRational g(re, im);
        if (!g.is_zero()) return g;
    }
}

/// Integer-frequency monomial with powers <= max_pow, frequencies in
/// [-freq_range, freq_range], most entries zero.
inline ExpMonomial random_monomial(Rng& rng, int dim, int max_pow, int freq_range) {
    ExpMonomial m(dim);
    for (int k = 0; k < dim; ++k) {
        if (uniform_int(rng, 0, 2) == 0) m.pow[static_cast<size_t>(k)] = uniform_int(rng, 0, max_pow);
        if (uniform_int(rng, 0, 2) == 0) m.freq[static_cast<size_t>(k)] = Rat(uniform_int(rng, -freq_range, freq_range));
    }
    return m;
}

inline GPoly random_poly(Rng& rng, int dim, int max_terms, int max_pow = 2, int freq_range = 2) {
    GPoly p(dim);
    int terms = uniform_int(rng, 0, max_terms);
    for (int t = 0; t < terms; ++t) p.add_term(random_monomial(rng, dim, max_pow, freq_range), random_gauss(rng));
    return p;
}

/// Field with <= max_terms terms per coefficient; roughly half the slots stay zero.
inline GField random_field(Rng& rng, int dim, int max_terms = 3) {
    GField X(dim);
    for (int j = 1; j <= dim; ++j)
        if (uniform_int(rng, 0, 1) == 0) X.set_coeff(j, random_poly(rng, dim, max_terms));
    return X;
}

/// Field whose coefficients only involve x_1..x_k (for projection tests).
inline GField random_field_on_first(Rng& rng, int dim, int k, int max_terms = 3) {
    GField X(dim);
    for (int j = 1; j <= dim; ++j) {
        if (uniform_int(rng, 0, 1) != 0) continue;
        GPoly f(dim);
        int terms = uniform_int(rng, 0, max_terms);
        for (int t = 0; t < terms; ++t) {
            ExpMonomial m = random_monomial(rng, k, 2, 2);
            ExpMonomial mm(dim);
            for (int s = 0; s < k; ++s) {
                mm.pow[static_cast<size_t>(s)] = m.pow[static_cast<size_t>(s)];
                mm.freq[static_cast<size_t>(s)] = m.freq[static_cast<size_t>(s)];
            }
            f.add_term(std::move(mm), random_gauss(rng));
        }
        X.set_coeff(j, std::move(f));
    }
    return X;
}

} // namespace testutil
