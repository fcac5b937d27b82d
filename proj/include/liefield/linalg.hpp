#pragma once

#include "liefield/vfield.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace liefield {

/// Coordinate of a vector field in the free module over monomials:
/// one slot of one exponential-polynomial term.
struct FieldCoord {
    ExpMonomial mono;
    int slot; // 0-based

    friend bool operator<(const FieldCoord& a, const FieldCoord& b) {
        if (a.mono < b.mono) return true;
        if (b.mono < a.mono) return false;
        return a.slot < b.slot;
    }
    friend bool operator==(const FieldCoord& a, const FieldCoord& b) {
        return a.slot == b.slot && a.mono == b.mono;
    }
};

template <class Key>
using Sparse = std::map<Key, GaussianRational>;

using FieldVec = Sparse<FieldCoord>;
using IntVec = Sparse<int>;

FieldVec to_sparse(const GField& X);
GField from_sparse(int dim, const FieldVec& v);

/// Exact echelon basis over Q(i) with sparse rows keyed by an ordered Key.
/// Each row is normalized to a unit leading (smallest-key) coefficient and
/// rows have pairwise distinct pivots. Insertion order is the basis order,
/// so the result is deterministic given the input sequence.
template <class Key>
class Echelon {
public:
    /// Eliminate v against the rows (in ascending pivot order). The
    /// remainder has no entry at any pivot. When coords is non-null it
    /// receives the combination: v = sum coords[r] * row(r) + remainder.
    Sparse<Key> reduce(Sparse<Key> v, std::vector<GaussianRational>* coords = nullptr) const {
        if (coords) coords->assign(rows_.size(), GaussianRational::zero());
        for (int r : pivot_order_) {
            auto it = v.find(pivots_[static_cast<size_t>(r)]);
            if (it == v.end()) continue;
            GaussianRational c = it->second;
            if (coords) (*coords)[static_cast<size_t>(r)] = c;
            axpy(v, -c, rows_[static_cast<size_t>(r)]);
        }
        return v;
    }

    /// Add v to the span. Returns the new row index, or -1 if v was already
    /// in the span.
    int insert(Sparse<Key> v) {
        Sparse<Key> rem = reduce(std::move(v));
        if (rem.empty()) return -1;
        GaussianRational lead = rem.begin()->second;
        GaussianRational inv = lead.inverse();
        for (auto& [k, c] : rem) c *= inv;
        Key pivot = rem.begin()->first;
        rows_.push_back(std::move(rem));
        pivots_.push_back(pivot);
        int idx = static_cast<int>(rows_.size()) - 1;
        pivot_order_.insert(
            std::upper_bound(pivot_order_.begin(), pivot_order_.end(), idx,
                             [this](int a, int b) { return pivots_[static_cast<size_t>(a)] < pivots_[static_cast<size_t>(b)]; }),
            idx);
        return idx;
    }

    /// Exact coordinates of v over the rows, or nullopt if v is outside.
    std::optional<std::vector<GaussianRational>> coordinates(const Sparse<Key>& v) const {
        std::vector<GaussianRational> coords;
        Sparse<Key> rem = reduce(v, &coords);
        if (!rem.empty()) return std::nullopt;
        return coords;
    }

    bool contains(const Sparse<Key>& v) const { return reduce(v).empty(); }

    int dimension() const { return static_cast<int>(rows_.size()); }
    const Sparse<Key>& row(int r) const { return rows_[static_cast<size_t>(r)]; }

    static void axpy(Sparse<Key>& dst, const GaussianRational& c, const Sparse<Key>& src) {
        if (c.is_zero()) return;
        for (const auto& [k, x] : src) {
            auto [it, inserted] = dst.try_emplace(k, c * x);
            if (!inserted) {
                it->second += c * x;
                if (it->second.is_zero()) dst.erase(it);
            }
        }
    }

private:
    std::vector<Sparse<Key>> rows_;
    std::vector<Key> pivots_;
    std::vector<int> pivot_order_; // row indices sorted by pivot key
};

using FieldSpan = Echelon<FieldCoord>;
using VecSpan = Echelon<int>;

/// Dense matrix over Q(i), row major.
using Matrix = std::vector<std::vector<GaussianRational>>;

Matrix identity_matrix(int n);

/// Reduce in place to reduced row echelon form; returns pivot columns.
std::vector<int> rref(Matrix& m);

int rank(Matrix m);

/// Basis of the right kernel {v : m v = 0}.
std::vector<std::vector<GaussianRational>> kernel_basis(const Matrix& m);

GaussianRational determinant(Matrix m);

/// Coefficients c_0..c_n of the characteristic polynomial
/// det(tI - m) = sum c_k t^k (monic: c_n = 1), computed exactly via a
/// similarity reduction to Hessenberg form and the leading-minor recurrence.
std::vector<GaussianRational> char_poly(Matrix m);

/// All rational roots of a polynomial with Gaussian-rational coefficients
/// (ascending coefficient order), found by the rational-root theorem on an
/// integerized real or imaginary part and verified exactly on the full
/// polynomial. Ascending order, no duplicates.
std::vector<Rat> rational_roots(const std::vector<GaussianRational>& coeffs);

GaussianRational eval_poly(const std::vector<GaussianRational>& coeffs, const Rat& t);

} // namespace liefield
