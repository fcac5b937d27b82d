#pragma once

#include "liefield/exppoly.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace liefield {

/// Vector field sum_j f_j d/dx_j on C^dim with exponential-polynomial
/// coefficients f_j over the ring C. Always carries exactly dim coefficient
/// slots, each an ExpPoly in the same dim variables.
template <class C>
class VectorField {
public:
    VectorField() : dim_(0) {}
    explicit VectorField(int dim) : dim_(dim), coeffs_(static_cast<size_t>(dim), ExpPoly<C>(dim)) {
        if (dim < 0) throw IndexError("VectorField: negative dimension");
    }
    explicit VectorField(std::vector<ExpPoly<C>> coeffs) : dim_(static_cast<int>(coeffs.size())), coeffs_(std::move(coeffs)) {
        for (const auto& f : coeffs_)
            if (f.dim() != dim_) throw DimensionMismatch("VectorField: coefficient dimension mismatch");
    }

    static VectorField zero(int dim) { return VectorField(dim); }

    /// The coordinate direction d/dx_j (1-based).
    static VectorField direction(int dim, int j) {
        VectorField v(dim);
        v.coeffs_[static_cast<size_t>(ExpPoly<C>::check_index(dim, j))] = ExpPoly<C>::constant(dim, C(1));
        return v;
    }

    int dim() const { return dim_; }

    /// Coefficient of d/dx_j (1-based).
    const ExpPoly<C>& coeff(int j) const {
        return coeffs_[static_cast<size_t>(ExpPoly<C>::check_index(dim_, j))];
    }
    void set_coeff(int j, ExpPoly<C> f) {
        if (f.dim() != dim_) throw DimensionMismatch("VectorField::set_coeff: coefficient dimension mismatch");
        coeffs_[static_cast<size_t>(ExpPoly<C>::check_index(dim_, j))] = std::move(f);
    }

    bool is_zero() const {
        for (const auto& f : coeffs_)
            if (!f.is_zero()) return false;
        return true;
    }

    VectorField operator-() const {
        VectorField r(dim_);
        for (int j = 0; j < dim_; ++j) r.coeffs_[j] = -coeffs_[j];
        return r;
    }
    VectorField& operator+=(const VectorField& o) {
        check_same_dim(o);
        for (int j = 0; j < dim_; ++j) coeffs_[j] += o.coeffs_[j];
        return *this;
    }
    VectorField& operator-=(const VectorField& o) {
        check_same_dim(o);
        for (int j = 0; j < dim_; ++j) coeffs_[j] -= o.coeffs_[j];
        return *this;
    }
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }

    friend VectorField operator*(const C& s, const VectorField& v) {
        VectorField r(v.dim_);
        for (int j = 0; j < v.dim_; ++j) r.coeffs_[j] = v.coeffs_[j] * s;
        return r;
    }
    friend VectorField operator*(const Rat& s, const VectorField& v) {
        VectorField r(v.dim_);
        for (int j = 0; j < v.dim_; ++j) r.coeffs_[j] = v.coeffs_[j] * s;
        return r;
    }
    /// Multiply by a scalar function (module structure over the ring).
    friend VectorField operator*(const ExpPoly<C>& h, const VectorField& v) {
        if (h.dim() != v.dim_) throw DimensionMismatch("scalar function * field: dimension mismatch");
        VectorField r(v.dim_);
        for (int j = 0; j < v.dim_; ++j) r.coeffs_[j] = h * v.coeffs_[j];
        return r;
    }

    friend bool operator==(const VectorField& a, const VectorField& b) {
        return a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const VectorField& a, const VectorField& b) { return !(a == b); }

    /// Apply the field to a scalar function as a derivation: X(h) = sum_i f_i dh/dx_i.
    ExpPoly<C> apply(const ExpPoly<C>& h) const {
        if (h.dim() != dim_) throw DimensionMismatch("VectorField::apply: dimension mismatch");
        ExpPoly<C> r(dim_);
        for (int i = 0; i < dim_; ++i) {
            if (coeffs_[i].is_zero()) continue;
            r += coeffs_[i] * h.partial(i + 1);
        }
        return r;
    }

    /// Reinterpret on C^new_dim with coordinates shifted up by offset:
    /// old coordinate j becomes j + offset. Used to place block factors
    /// side by side on a product space.
    VectorField shifted_embed(int new_dim, int offset) const {
        if (offset < 0 || offset + dim_ > new_dim)
            throw DimensionMismatch("VectorField::shifted_embed: block does not fit");
        VectorField r(new_dim);
        for (int j = 0; j < dim_; ++j) {
            ExpPoly<C> f(new_dim);
            for (const auto& [m, c] : coeffs_[j].terms()) {
                ExpMonomial mm(new_dim);
                for (int k = 0; k < dim_; ++k) {
                    mm.pow[k + offset] = m.pow[k];
                    mm.freq[k + offset] = m.freq[k];
                }
                f.add_term(std::move(mm), c);
            }
            r.coeffs_[static_cast<size_t>(j + offset)] = std::move(f);
        }
        return r;
    }

    /// Relabel coordinates by a permutation of 0..dim-1 (internal plumbing):
    /// new coordinate j plays the role of old coordinate perm[j].
    VectorField permuted(const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != dim_)
            throw DimensionMismatch("VectorField::permuted: permutation length mismatch");
        VectorField r(dim_);
        for (int j = 0; j < dim_; ++j)
            r.coeffs_[j] = coeffs_[static_cast<size_t>(perm[static_cast<size_t>(j)])].permuted(perm);
        return r;
    }

    /// True iff every coefficient is free of x_{k+1}, ..., x_dim.
    bool depends_only_on_first(int k) const {
        for (const auto& f : coeffs_)
            for (int i = k + 1; i <= dim_; ++i)
                if (f.depends_on(i)) return false;
        return true;
    }

private:
    void check_same_dim(const VectorField& o) const {
        if (dim_ != o.dim_) throw DimensionMismatch("VectorField: operand dimension mismatch");
    }

    int dim_;
    std::vector<ExpPoly<C>> coeffs_;
};

/// Lie bracket of vector fields: [X,Y]_j = sum_i (X_i d(Y_j)/dx_i - Y_i d(X_j)/dx_i).
/// Exact in the coefficient ring; the class of exponential-polynomial
/// coefficients is closed under it.
template <class C>
VectorField<C> bracket(const VectorField<C>& X, const VectorField<C>& Y) {
    if (X.dim() != Y.dim()) throw DimensionMismatch("bracket: operand dimension mismatch");
    const int n = X.dim();
    VectorField<C> r(n);
    for (int j = 1; j <= n; ++j) {
        ExpPoly<C> acc = X.apply(Y.coeff(j));
        acc -= Y.apply(X.coeff(j));
        r.set_coeff(j, std::move(acc));
    }
    return r;
}

/// Truncation onto the first k coordinates: drop slots k+1..N and read the
/// remaining coefficients as functions of x_1..x_k. Requires every
/// coefficient of X (kept or dropped) to be independent of the dropped
/// variables; under that hypothesis the map is a Lie algebra homomorphism,
/// which the test suite checks against bracket directly.
template <class C>
VectorField<C> project(const VectorField<C>& X, int k) {
    if (k < 1 || k > X.dim()) throw IndexError("project: target dimension out of range");
    if (!X.depends_only_on_first(k))
        throw PreconditionError("project: a coefficient depends on a dropped coordinate");
    std::vector<ExpPoly<C>> coeffs;
    coeffs.reserve(static_cast<size_t>(k));
    for (int j = 1; j <= k; ++j) coeffs.push_back(X.coeff(j).truncated(k));
    return VectorField<C>(std::move(coeffs));
}

/// Split X into simultaneous ad-eigencomponents of d/dx_i: X = sum_k X_k with
/// [d/dx_i, X_k] = lambda_k X_k, grouping terms by their exponential
/// frequency in x_i. Requires no polynomial dependence on x_i anywhere in X.
/// Components are returned in increasing eigenvalue order; eigenvalues are
/// pairwise distinct and each component is nonzero.
template <class C>
std::vector<std::pair<Rat, VectorField<C>>> eigenfield_decompose(const VectorField<C>& X, int i) {
    const int n = X.dim();
    const int k = ExpPoly<C>::check_index(n, i);
    std::map<Rat, VectorField<C>> buckets;
    for (int j = 1; j <= n; ++j) {
        for (const auto& [m, c] : X.coeff(j).terms()) {
            if (m.pow[static_cast<size_t>(k)] != 0)
                throw PreconditionError("eigenfield_decompose: polynomial dependence on the splitting coordinate");
            auto [it, inserted] = buckets.try_emplace(m.freq[static_cast<size_t>(k)], VectorField<C>(n));
            ExpPoly<C> f = it->second.coeff(j);
            f.add_term(m, c);
            it->second.set_coeff(j, std::move(f));
        }
    }
    std::vector<std::pair<Rat, VectorField<C>>> out;
    out.reserve(buckets.size());
    for (auto& [lam, comp] : buckets) out.emplace_back(lam, std::move(comp));
    return out;
}

/// Torus substitution x_i = exp(u_i) for every i in coords (1-based):
/// x_i d/dx_i becomes d/du_i, so powers of x_i turn into frequencies in u_i
/// and the slot-i coefficient picks up one factor exp(-u_i). Fails iff some
/// term carries a nonzero exponential frequency on a substituted coordinate
/// (exp(exp(u)) leaves the coefficient class); that check is the exact
/// criterion, term by term.
template <class C>
VectorField<C> substitute_exp(const VectorField<C>& X, const std::set<int>& coords) {
    const int n = X.dim();
    std::vector<bool> in_set(static_cast<size_t>(n), false);
    for (int i : coords) in_set[static_cast<size_t>(ExpPoly<C>::check_index(n, i))] = true;

    for (int j = 1; j <= n; ++j)
        for (const auto& [m, c] : X.coeff(j).terms())
            for (int k = 0; k < n; ++k)
                if (in_set[static_cast<size_t>(k)] && m.freq[static_cast<size_t>(k)] != 0)
                    throw SubstitutionError(
                        "substitute_exp: coefficient of slot " + std::to_string(j) +
                        " has exponential dependence on substituted coordinate x" + std::to_string(k + 1));

    VectorField<C> r(n);
    for (int j = 1; j <= n; ++j) {
        ExpPoly<C> f(n);
        for (const auto& [m, c] : X.coeff(j).terms()) {
            ExpMonomial mm(n);
            for (int k = 0; k < n; ++k) {
                if (in_set[static_cast<size_t>(k)]) {
                    mm.freq[static_cast<size_t>(k)] = Rat(m.pow[static_cast<size_t>(k)]);
                } else {
                    mm.pow[static_cast<size_t>(k)] = m.pow[static_cast<size_t>(k)];
                    mm.freq[static_cast<size_t>(k)] = m.freq[static_cast<size_t>(k)];
                }
            }
            if (in_set[static_cast<size_t>(j - 1)]) mm.freq[static_cast<size_t>(j - 1)] -= 1;
            f.add_term(std::move(mm), c);
        }
        r.set_coeff(j, std::move(f));
    }
    return r;
}

using GField = VectorField<GaussianRational>;

} // namespace liefield
