#pragma once

#include "liefield/error.hpp"
#include "liefield/rational.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <span>
#include <vector>

namespace liefield {

/// One multiplicative atom x^pow * exp(<freq, x>) on C^dim.
/// pow holds nonnegative integer exponents, freq exact rational frequencies;
/// both vectors always have length dim. The identity atom has pow = freq = 0.
struct ExpMonomial {
    std::vector<int> pow;
    std::vector<Rat> freq;

    ExpMonomial() = default;
    explicit ExpMonomial(int dim) : pow(static_cast<size_t>(dim), 0), freq(static_cast<size_t>(dim), Rat(0)) {}

    int dim() const { return static_cast<int>(pow.size()); }

    bool is_identity() const {
        for (int p : pow)
            if (p != 0) return false;
        return !has_exp();
    }

    /// True iff the exponential part is nontrivial.
    bool has_exp() const {
        for (const Rat& f : freq)
            if (f != 0) return true;
        return false;
    }

    int total_degree() const {
        int d = 0;
        for (int p : pow) d += p;
        return d;
    }

    /// Pointwise product: powers add, frequencies add.
    friend ExpMonomial operator*(const ExpMonomial& a, const ExpMonomial& b) {
        ExpMonomial r(a.dim());
        for (int k = 0; k < a.dim(); ++k) {
            r.pow[k] = a.pow[k] + b.pow[k];
            r.freq[k] = a.freq[k] + b.freq[k];
        }
        return r;
    }

    friend bool operator==(const ExpMonomial& a, const ExpMonomial& b) {
        return a.pow == b.pow && a.freq == b.freq;
    }

    /// Canonical term order: lexicographic on the frequency vector, then on
    /// the power vector. Fixes serialization order and echelon pivots.
    friend bool operator<(const ExpMonomial& a, const ExpMonomial& b) {
        for (size_t k = 0; k < a.freq.size(); ++k) {
            int c = cmp(a.freq[k], b.freq[k]);
            if (c != 0) return c < 0;
        }
        return a.pow < b.pow;
    }
};

namespace detail {
template <class C>
void scale_coeff(C& c, const Rat& s) {
    c *= s;
}
template <class C>
void scale_coeff(C& c, long s) {
    c *= Rat(s);
}
} // namespace detail

/// Finite sum of terms c * x^pow * exp(<freq, x>) over a commutative
/// coefficient ring C (the field Q(i) for concrete fields; a polynomial
/// ring in unknown constants for ansatz work). Terms are kept canonical:
/// merged by monomial, zero coefficients dropped, stored in term order.
template <class C>
class ExpPoly {
public:
    using Coeff = C;
    using TermMap = std::map<ExpMonomial, C>;

    ExpPoly() : dim_(0) {}
    explicit ExpPoly(int dim) : dim_(dim) {
        if (dim < 0) throw IndexError("ExpPoly: negative dimension");
    }

    static ExpPoly zero(int dim) { return ExpPoly(dim); }

    static ExpPoly constant(int dim, C c) {
        ExpPoly p(dim);
        p.add_term(ExpMonomial(dim), std::move(c));
        return p;
    }

    /// The coordinate function x_i (1-based).
    static ExpPoly variable(int dim, int i) {
        ExpPoly p(dim);
        ExpMonomial m(dim);
        m.pow[check_index(dim, i)] = 1;
        p.add_term(std::move(m), C(1));
        return p;
    }

    /// exp(<freq, x>) for an exact frequency vector of length dim.
    static ExpPoly exponential(int dim, std::vector<Rat> freq) {
        if (static_cast<int>(freq.size()) != dim)
            throw DimensionMismatch("ExpPoly::exponential: frequency vector length != dim");
        ExpPoly p(dim);
        ExpMonomial m(dim);
        m.freq = std::move(freq);
        p.add_term(std::move(m), C(1));
        return p;
    }

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Merge one term in, keeping the canonical form.
    void add_term(ExpMonomial m, C c) {
        if (m.dim() != dim_) throw DimensionMismatch("ExpPoly::add_term: monomial dimension mismatch");
        if (c.is_zero()) return;
        // try_emplace leaves both arguments intact when the key is present.
        auto [it, inserted] = terms_.try_emplace(std::move(m), std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    ExpPoly operator-() const {
        ExpPoly r(dim_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    ExpPoly& operator+=(const ExpPoly& o) {
        check_same_dim(o);
        for (const auto& [m, c] : o.terms_) {
            auto [it, inserted] = terms_.emplace(m, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
        return *this;
    }

    ExpPoly& operator-=(const ExpPoly& o) {
        check_same_dim(o);
        for (const auto& [m, c] : o.terms_) {
            auto it = terms_.find(m);
            if (it == terms_.end()) {
                terms_.emplace(m, -c);
            } else {
                it->second -= c;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
        return *this;
    }

    friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
    friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }

    friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
        a.check_same_dim(b);
        ExpPoly r(a.dim_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    /// Scale by a ring constant.
    friend ExpPoly operator*(const ExpPoly& a, const C& s) {
        ExpPoly r(a.dim_);
        for (const auto& [m, c] : a.terms_) r.add_term(m, c * s);
        return r;
    }
    friend ExpPoly operator*(const C& s, const ExpPoly& a) { return a * s; }

    ExpPoly& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) detail::scale_coeff(c, s);
        return *this;
    }
    friend ExpPoly operator*(ExpPoly a, const Rat& s) { return a *= s; }
    friend ExpPoly operator*(const Rat& s, ExpPoly a) { return a *= s; }

    friend bool operator==(const ExpPoly& a, const ExpPoly& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const ExpPoly& a, const ExpPoly& b) { return !(a == b); }

    /// Exact partial derivative d/dx_i (1-based). Product rule per term:
    /// the power factor drops one degree, the exponential factor contributes
    /// its frequency.
    ExpPoly partial(int i) const {
        int k = check_index(dim_, i);
        ExpPoly r(dim_);
        for (const auto& [m, c] : terms_) {
            if (m.pow[k] > 0) {
                ExpMonomial down = m;
                down.pow[k] -= 1;
                C dc = c;
                detail::scale_coeff(dc, static_cast<long>(m.pow[k]));
                r.add_term(std::move(down), std::move(dc));
            }
            if (m.freq[k] != 0) {
                C fc = c;
                detail::scale_coeff(fc, m.freq[k]);
                r.add_term(m, std::move(fc));
            }
        }
        return r;
    }

    /// True iff some canonical term carries x_i, in the power or in the
    /// exponential frequency (1-based).
    bool depends_on(int i) const {
        int k = check_index(dim_, i);
        for (const auto& [m, c] : terms_)
            if (m.pow[k] != 0 || m.freq[k] != 0) return true;
        return false;
    }

    /// Exact substitution x_i -> value for all i, then numeric evaluation.
    /// Only meaningful over Q(i) coefficients. Throws EvalError when the
    /// result is not finite in double precision.
    std::complex<double> eval(std::span<const double> point) const
        requires std::is_same_v<C, GaussianRational>
    {
        if (static_cast<int>(point.size()) != dim_)
            throw DimensionMismatch("ExpPoly::eval: point dimension mismatch");
        std::complex<double> acc(0.0, 0.0);
        for (const auto& [m, c] : terms_) {
            double factor = 1.0;
            double arg = 0.0;
            for (int k = 0; k < dim_; ++k) {
                for (int p = 0; p < m.pow[k]; ++p) factor *= point[static_cast<size_t>(k)];
                if (m.freq[k] != 0) arg += m.freq[k].get_d() * point[static_cast<size_t>(k)];
            }
            factor *= std::exp(arg);
            acc += std::complex<double>(c.re().get_d(), c.im().get_d()) * factor;
        }
        if (!std::isfinite(acc.real()) || !std::isfinite(acc.imag()))
            throw EvalError("ExpPoly::eval: non-finite value");
        return acc;
    }

    /// Reinterpret on C^new_dim >= dim, with the new trailing coordinates
    /// absent from every term.
    ExpPoly extended(int new_dim) const {
        if (new_dim < dim_) throw DimensionMismatch("ExpPoly::extended: target dimension too small");
        ExpPoly r(new_dim);
        for (const auto& [m, c] : terms_) {
            ExpMonomial mm(new_dim);
            for (int k = 0; k < dim_; ++k) {
                mm.pow[k] = m.pow[k];
                mm.freq[k] = m.freq[k];
            }
            r.terms_.emplace(std::move(mm), c);
        }
        return r;
    }

    /// Drop coordinates k+1..dim. Every term must be free of them.
    ExpPoly truncated(int k) const {
        if (k < 0 || k > dim_) throw IndexError("ExpPoly::truncated: bad target dimension");
        ExpPoly r(k);
        for (const auto& [m, c] : terms_) {
            ExpMonomial mm(k);
            for (int j = 0; j < dim_; ++j) {
                if (j < k) {
                    mm.pow[j] = m.pow[j];
                    mm.freq[j] = m.freq[j];
                } else if (m.pow[j] != 0 || m.freq[j] != 0) {
                    throw PreconditionError("ExpPoly::truncated: term depends on a dropped coordinate");
                }
            }
            r.terms_.emplace(std::move(mm), c);
        }
        return r;
    }

    /// Relabel coordinates: new coordinate j reads old coordinate perm[j].
    /// perm must be a permutation of 0..dim-1 (0-based, internal plumbing).
    ExpPoly permuted(const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != dim_)
            throw DimensionMismatch("ExpPoly::permuted: permutation length mismatch");
        ExpPoly r(dim_);
        for (const auto& [m, c] : terms_) {
            ExpMonomial mm(dim_);
            for (int j = 0; j < dim_; ++j) {
                mm.pow[j] = m.pow[perm[static_cast<size_t>(j)]];
                mm.freq[j] = m.freq[perm[static_cast<size_t>(j)]];
            }
            r.add_term(std::move(mm), c);
        }
        return r;
    }

    /// Map coefficients through f (e.g. specialize unknown constants).
    template <class F>
    auto map_coeffs(F&& f) const -> ExpPoly<std::decay_t<decltype(f(std::declval<const C&>()))>> {
        using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
        ExpPoly<D> r(dim_);
        for (const auto& [m, c] : terms_) r.add_term(m, f(c));
        return r;
    }

    static int check_index(int dim, int i) {
        if (i < 1 || i > dim) throw IndexError("coordinate index out of range");
        return i - 1;
    }

private:
    void check_same_dim(const ExpPoly& o) const {
        if (dim_ != o.dim_) throw DimensionMismatch("ExpPoly: operand dimension mismatch");
    }

    int dim_;
    TermMap terms_;
};

using GPoly = ExpPoly<GaussianRational>;

} // namespace liefield
