#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "liefield/error.hpp"
#include "liefield/rational.hpp"

namespace liefield {

/// Exponent vector of a monomial in finitely many commuting variables.
/// Trailing zero exponents are trimmed, so equal monomials compare equal
/// no matter how many variables the surrounding context mentions.
struct Monomial {
    std::vector<int> exps;

    static Monomial one() { return {}; }
    static Monomial var(int v, int e = 1);

    void trim();
    int degree() const;
    /// Exponent of variable v (0 when v lies beyond the stored length).
    int exponent(int v) const;
    bool is_one() const { return exps.empty(); }
    /// Number of leading variable slots stored (last nonzero index + 1).
    int width() const { return static_cast<int>(exps.size()); }

    bool divides(const Monomial& o) const;
    /// Quotient this / o.  Pre: o.divides(*this).
    Monomial divided_by(const Monomial& o) const;
    bool coprime_with(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

/// Graded reverse lexicographic term order, arranged so that std::map
/// iteration starts at the leading (largest) monomial.
struct DegRevLexGreater {
    /// True iff a is strictly larger than b in degrevlex.
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over the rationals.  Terms are kept in
/// descending degrevlex order (leading term first).  Satisfies the
/// coefficient-ring interface of ExpPoly, so ExpPoly<QPoly> provides
/// exponential fields whose coefficients carry symbolic unknowns.
class QPoly {
public:
    using TermMap = std::map<Monomial, Rat, DegRevLexGreater>;

    QPoly() = default;
    QPoly(long c);
    explicit QPoly(const Rat& c);

    static QPoly variable(int v);
    static QPoly term(Monomial m, Rat c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Pre: is_constant().  The constant value (0 for the zero polynomial).
    Rat constant_value() const;
    int degree() const;
    int num_terms() const { return static_cast<int>(terms_.size()); }
    const TermMap& terms() const { return terms_; }
    /// Largest variable index appearing, or -1 for constants.
    int max_variable() const;

    /// Pre: !is_zero().
    const Monomial& leading_monomial() const;
    const Rat& leading_coeff() const;
    /// Scaled so the leading coefficient is 1.  Pre: !is_zero().
    QPoly monic() const;

    void add_term(const Monomial& m, const Rat& c);
    Rat coeff(const Monomial& m) const;

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const Rat& s);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(QPoly a, const Rat& s) { return a *= s; }
    friend QPoly operator*(const Rat& s, QPoly a) { return a *= s; }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    /// Render with a caller-supplied variable naming scheme.
    std::string str(const std::function<std::string(int)>& name) const;
    /// Render with default names t0, t1, ...
    std::string str() const;

private:
    TermMap terms_;
};

}  // namespace liefield
