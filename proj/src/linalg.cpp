#include "liefield/linalg.hpp"

#include "liefield/error.hpp"

namespace liefield {

FieldVec to_sparse(const GField& X) {
    FieldVec v;
    for (int j = 1; j <= X.dim(); ++j)
        for (const auto& [m, c] : X.coeff(j).terms()) v.emplace(FieldCoord{m, j - 1}, c);
    return v;
}

GField from_sparse(int dim, const FieldVec& v) {
    GField X(dim);
    for (const auto& [key, c] : v) {
        GPoly f = X.coeff(key.slot + 1);
        f.add_term(key.mono, c);
        X.set_coeff(key.slot + 1, std::move(f));
    }
    return X;
}

Matrix identity_matrix(int n) {
    Matrix m(static_cast<size_t>(n), std::vector<GaussianRational>(static_cast<size_t>(n)));
    for (int k = 0; k < n; ++k) m[static_cast<size_t>(k)][static_cast<size_t>(k)] = GaussianRational::one();
    return m;
}

std::vector<int> rref(Matrix& m) {
    std::vector<int> pivot_cols;
    if (m.empty()) return pivot_cols;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int k = r; k < rows; ++k)
            if (!m[static_cast<size_t>(k)][static_cast<size_t>(c)].is_zero()) {
                piv = k;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(r)]);
        GaussianRational inv = m[static_cast<size_t>(r)][static_cast<size_t>(c)].inverse();
        for (int j = c; j < cols; ++j) m[static_cast<size_t>(r)][static_cast<size_t>(j)] *= inv;
        for (int k = 0; k < rows; ++k) {
            if (k == r) continue;
            GaussianRational f = m[static_cast<size_t>(k)][static_cast<size_t>(c)];
            if (f.is_zero()) continue;
            for (int j = c; j < cols; ++j)
                m[static_cast<size_t>(k)][static_cast<size_t>(j)] -= f * m[static_cast<size_t>(r)][static_cast<size_t>(j)];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<GaussianRational>> kernel_basis(const Matrix& mat) {
    if (mat.empty()) return {};
    Matrix m = mat;
    const int cols = static_cast<int>(m[0].size());
    std::vector<int> pivot_cols = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : pivot_cols) is_pivot[static_cast<size_t>(c)] = true;

    std::vector<std::vector<GaussianRational>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<GaussianRational> v(static_cast<size_t>(cols));
        v[static_cast<size_t>(free)] = GaussianRational::one();
        for (size_t r = 0; r < pivot_cols.size(); ++r)
            v[static_cast<size_t>(pivot_cols[r])] = -m[r][static_cast<size_t>(free)];
        basis.push_back(std::move(v));
    }
    return basis;
}

GaussianRational determinant(Matrix m) {
    const int n = static_cast<int>(m.size());
    GaussianRational det = GaussianRational::one();
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int k = c; k < n; ++k)
            if (!m[static_cast<size_t>(k)][static_cast<size_t>(c)].is_zero()) {
                piv = k;
                break;
            }
        if (piv < 0) return GaussianRational::zero();
        if (piv != c) {
            std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(c)]);
            det = -det;
        }
        const GaussianRational& p = m[static_cast<size_t>(c)][static_cast<size_t>(c)];
        det *= p;
        GaussianRational inv = p.inverse();
        for (int k = c + 1; k < n; ++k) {
            GaussianRational f = m[static_cast<size_t>(k)][static_cast<size_t>(c)] * inv;
            if (f.is_zero()) continue;
            for (int j = c; j < n; ++j)
                m[static_cast<size_t>(k)][static_cast<size_t>(j)] -= f * m[static_cast<size_t>(c)][static_cast<size_t>(j)];
        }
    }
    return det;
}

namespace {

/// Similarity reduction to upper Hessenberg form (exact row/column pairs).
void hessenberg(Matrix& a) {
    const int n = static_cast<int>(a.size());
    for (int c = 0; c + 2 < n; ++c) {
        int piv = -1;
        for (int r = c + 1; r < n; ++r)
            if (!a[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != c + 1) {
            std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(c + 1)]);
            for (int r = 0; r < n; ++r)
                std::swap(a[static_cast<size_t>(r)][static_cast<size_t>(piv)],
                          a[static_cast<size_t>(r)][static_cast<size_t>(c + 1)]);
        }
        GaussianRational inv = a[static_cast<size_t>(c + 1)][static_cast<size_t>(c)].inverse();
        for (int r = c + 2; r < n; ++r) {
            GaussianRational f = a[static_cast<size_t>(r)][static_cast<size_t>(c)] * inv;
            if (f.is_zero()) continue;
            // row_r -= f * row_{c+1}; col_{c+1} += f * col_r  (similarity)
            for (int j = 0; j < n; ++j)
                a[static_cast<size_t>(r)][static_cast<size_t>(j)] -= f * a[static_cast<size_t>(c + 1)][static_cast<size_t>(j)];
            for (int i = 0; i < n; ++i)
                a[static_cast<size_t>(i)][static_cast<size_t>(c + 1)] += f * a[static_cast<size_t>(i)][static_cast<size_t>(r)];
        }
    }
}

} // namespace

std::vector<GaussianRational> char_poly(Matrix m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return {GaussianRational::one()};
    hessenberg(m);
    auto at = [&m](int i, int j) -> const GaussianRational& {
        return m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
    };
    // p_k = charpoly of the leading k x k block (ascending coefficients).
    std::vector<std::vector<GaussianRational>> p(static_cast<size_t>(n) + 1);
    p[0] = {GaussianRational::one()};
    for (int k = 1; k <= n; ++k) {
        // p_k = (t - H_kk) p_{k-1} - sum_{i<k} H_ik (prod_{j=i..k-1} H_{j+1,j}) p_{i-1}
        std::vector<GaussianRational> pk(static_cast<size_t>(k) + 1, GaussianRational::zero());
        const auto& prev = p[static_cast<size_t>(k - 1)];
        for (size_t d = 0; d < prev.size(); ++d) {
            pk[d + 1] += prev[d];
            pk[d] -= at(k, k) * prev[d];
        }
        GaussianRational subdiag = GaussianRational::one();
        for (int i = k - 1; i >= 1; --i) {
            subdiag *= at(i + 1, i);
            if (subdiag.is_zero()) break;
            GaussianRational f = at(i, k) * subdiag;
            if (f.is_zero()) continue;
            const auto& pi = p[static_cast<size_t>(i - 1)];
            for (size_t d = 0; d < pi.size(); ++d) pk[d] -= f * pi[d];
        }
        p[static_cast<size_t>(k)] = std::move(pk);
    }
    return p[static_cast<size_t>(n)];
}

GaussianRational eval_poly(const std::vector<GaussianRational>& coeffs, const Rat& t) {
    GaussianRational acc;
    for (size_t k = coeffs.size(); k-- > 0;) {
        acc *= GaussianRational(t);
        acc += coeffs[k];
    }
    return acc;
}

namespace {

/// All positive divisors of |z| (nonzero), by trial division. The iteration
/// cap keeps pathological inputs from spinning; hitting it is a resource
/// error, never a wrong answer.
std::vector<mpz_class> divisors_of(mpz_class z) {
    z = abs(z);
    std::vector<mpz_class> divs;
    mpz_class d(1);
    long iterations = 0;
    for (; d * d <= z; ++d) {
        if (++iterations > 2000000L)
            throw ResourceExhausted("rational root search: constant term too large to factor");
        if (z % d == 0) {
            divs.push_back(d);
            mpz_class q = z / d;
            if (q != d) divs.push_back(q);
        }
    }
    return divs;
}

} // namespace

std::vector<Rat> rational_roots(const std::vector<GaussianRational>& coeffs) {
    // Degenerate and zero polynomials have no meaningful root list here.
    if (coeffs.empty()) return {};
    size_t deg = coeffs.size() - 1;
    while (deg > 0 && coeffs[deg].is_zero()) --deg;
    if (deg == 0) return {};

    // Any rational root annihilates both the real and the imaginary part;
    // run the divisor search on whichever part is a nonzero polynomial.
    std::vector<Rat> part(deg + 1);
    bool use_real = false;
    for (size_t k = 0; k <= deg; ++k)
        if (coeffs[k].re() != 0) use_real = true;
    for (size_t k = 0; k <= deg; ++k) part[k] = use_real ? coeffs[k].re() : coeffs[k].im();

    // Integerize: multiply by the lcm of denominators.
    mpz_class common(1);
    for (const Rat& q : part) common = lcm(common, q.get_den());
    std::vector<mpz_class> a(deg + 1);
    for (size_t k = 0; k <= deg; ++k) {
        Rat scaled = part[k] * Rat(common);
        scaled.canonicalize();
        a[k] = scaled.get_num(); // exact: the denominator divides common
    }

    size_t hi = deg;
    while (hi > 0 && a[hi] == 0) --hi;
    size_t lo = 0;
    while (lo < hi && a[lo] == 0) ++lo;

    std::vector<Rat> roots;
    // t^lo factors out of the chosen part; 0 is a root of the full
    // polynomial only when its constant coefficient vanishes too.
    if (lo > 0 && coeffs[0].is_zero()) roots.push_back(Rat(0));
    if (hi == lo) {
        // Monomial c * t^lo: only root is 0 (already recorded if lo > 0).
    } else {
        std::vector<mpz_class> nums = divisors_of(a[lo]);
        std::vector<mpz_class> dens = divisors_of(a[hi]);
        for (const mpz_class& p : nums) {
            for (const mpz_class& q : dens) {
                for (int s = 0; s < 2; ++s) {
                    Rat cand(s == 0 ? p : -p, q);
                    cand.canonicalize();
                    if (eval_poly(coeffs, cand).is_zero()) roots.push_back(cand);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

    // The verification step above used the full Gaussian polynomial, so a
    // spurious candidate from the integerized part cannot slip through.
    return roots;
}

} // namespace liefield
