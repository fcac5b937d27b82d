#include "liefield/liestruct.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <complex>
#include <random>
#include <set>

namespace liefield {

IntVec StructureConstants::bracket_coords(int a, int b) const {
    IntVec out;
    if (a == b) return out;
    bool flip = a > b;
    if (flip) std::swap(a, b);
    auto it = table.find({a, b});
    if (it == table.end()) return out;
    for (const auto& [c, x] : it->second) out.emplace(c, flip ? -x : x);
    return out;
}

GField Subalgebra::materialize(const std::vector<GaussianRational>& coords) const {
    GField X(ambient_);
    for (size_t a = 0; a < coords.size() && a < basis_.size(); ++a)
        if (!coords[a].is_zero()) X += coords[a] * basis_[a];
    return X;
}

Matrix Subalgebra::ad_matrix(const std::vector<GaussianRational>& coords) const {
    const int n = dimension();
    Matrix m(static_cast<size_t>(n), std::vector<GaussianRational>(static_cast<size_t>(n)));
    for (int d = 0; d < n; ++d) {
        // column d: [x, e_d] = sum_a coords[a] [e_a, e_d]
        for (int a = 0; a < n; ++a) {
            if (coords[static_cast<size_t>(a)].is_zero()) continue;
            for (const auto& [c, x] : sc_.bracket_coords(a, d))
                m[static_cast<size_t>(c)][static_cast<size_t>(d)] += coords[static_cast<size_t>(a)] * x;
        }
    }
    return m;
}

Subalgebra span_closure(const std::vector<GField>& generators, int max_dim) {
    if (generators.empty()) throw PreconditionError("span_closure: no generators");
    const int ambient = generators[0].dim();
    for (const GField& g : generators)
        if (g.dim() != ambient) throw DimensionMismatch("span_closure: mixed ambient dimensions");
    if (max_dim < 1) throw IndexError("span_closure: max_dim must be positive");

    FieldSpan span;
    std::vector<GField> basis;
    auto try_insert = [&](const GField& X) -> bool {
        FieldVec v = to_sparse(X);
        if (span.insert(std::move(v)) < 0) return false;
        basis.push_back(from_sparse(ambient, span.row(span.dimension() - 1)));
        if (span.dimension() > max_dim)
            throw ResourceExhausted("span_closure: dimension exceeds the cap of " + std::to_string(max_dim));
        return true;
    };

    for (const GField& g : generators) try_insert(g);
    if (basis.empty()) throw PreconditionError("span_closure: all generators are zero");

    // Work queue of unordered index pairs, processed in creation order.
    std::vector<std::pair<int, int>> queue;
    size_t head = 0;
    auto enqueue_pairs_for = [&](int b) {
        for (int a = 0; a < b; ++a) queue.emplace_back(a, b);
    };
    for (int b = 0; b < static_cast<int>(basis.size()); ++b) enqueue_pairs_for(b);

    while (head < queue.size()) {
        auto [a, b] = queue[head++];
        GField br = bracket(basis[static_cast<size_t>(a)], basis[static_cast<size_t>(b)]);
        if (br.is_zero()) continue;
        if (try_insert(br)) enqueue_pairs_for(static_cast<int>(basis.size()) - 1);
    }

    // Structure constants over the finished basis.
    StructureConstants sc;
    sc.dim = static_cast<int>(basis.size());
    for (int a = 0; a < sc.dim; ++a) {
        for (int b = a + 1; b < sc.dim; ++b) {
            GField br = bracket(basis[static_cast<size_t>(a)], basis[static_cast<size_t>(b)]);
            if (br.is_zero()) continue;
            auto coords = span.coordinates(to_sparse(br));
            if (!coords) throw Error("span_closure: closure reported but a bracket escapes the span");
            std::vector<std::pair<int, GaussianRational>> entry;
            for (int c = 0; c < sc.dim; ++c)
                if (!(*coords)[static_cast<size_t>(c)].is_zero()) entry.emplace_back(c, (*coords)[static_cast<size_t>(c)]);
            if (!entry.empty()) sc.table.emplace(std::make_pair(a, b), std::move(entry));
        }
    }
    return Subalgebra(ambient, std::move(basis), std::move(span), std::move(sc));
}

Matrix killing_form(const Subalgebra& A) {
    const int n = A.dimension();
    const StructureConstants& sc = A.structure();
    // Sparse columns of each ad matrix.
    std::vector<std::vector<IntVec>> ad(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
        ad[static_cast<size_t>(a)].resize(static_cast<size_t>(n));
        for (int d = 0; d < n; ++d) ad[static_cast<size_t>(a)][static_cast<size_t>(d)] = sc.bracket_coords(a, d);
    }
    Matrix kappa(static_cast<size_t>(n), std::vector<GaussianRational>(static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            GaussianRational tr;
            // tr(ad a ad b) = sum_d sum_c (ad a)_{d,c} (ad b)_{c,d}
            for (int d = 0; d < n; ++d) {
                for (const auto& [c, x] : ad[static_cast<size_t>(b)][static_cast<size_t>(d)]) {
                    const IntVec& col = ad[static_cast<size_t>(a)][static_cast<size_t>(c)];
                    auto it = col.find(d);
                    if (it != col.end()) tr += it->second * x;
                }
            }
            kappa[static_cast<size_t>(a)][static_cast<size_t>(b)] = tr;
            kappa[static_cast<size_t>(b)][static_cast<size_t>(a)] = tr;
        }
    }
    return kappa;
}

GaussianRational killing_determinant(const Subalgebra& A) { return determinant(killing_form(A)); }

bool is_semisimple(const Subalgebra& A) { return !killing_determinant(A).is_zero(); }

int generic_rank(const std::vector<GField>& fields, std::uint64_t seed) {
    if (fields.empty()) return 0;
    const int n = fields[0].dim();
    for (const GField& f : fields)
        if (f.dim() != n) throw DimensionMismatch("generic_rank: mixed ambient dimensions");

    std::vector<std::vector<double>> points;
    points.emplace_back(static_cast<size_t>(n), 0.0);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> numerator(-24, 24); // eighths in [-3,3]
    for (int p = 0; p < 8; ++p) {
        std::vector<double> pt(static_cast<size_t>(n));
        for (double& x : pt) x = numerator(rng) / 8.0;
        points.push_back(std::move(pt));
    }

    int best = 0;
    for (const auto& pt : points) {
        Eigen::MatrixXcd m(static_cast<Eigen::Index>(fields.size()), n);
        bool ok = true;
        for (size_t r = 0; r < fields.size() && ok; ++r) {
            for (int j = 1; j <= n; ++j) {
                try {
                    m(static_cast<Eigen::Index>(r), j - 1) = fields[r].coeff(j).eval(pt);
                } catch (const EvalError&) {
                    ok = false; // overflow at this sample; skip the point
                    break;
                }
            }
        }
        if (!ok) continue;
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
        const auto& sv = svd.singularValues();
        if (sv.size() == 0) continue;
        double top = sv(0);
        if (!(top > 0.0)) continue;
        int r = 0;
        for (Eigen::Index k = 0; k < sv.size(); ++k)
            if (sv(k) > 1e-8 * top) ++r;
        best = std::max(best, r);
    }
    return best;
}

namespace {

struct Block {
    std::vector<Rat> values;                         // eigenvalues seen so far
    std::vector<std::vector<GaussianRational>> vecs; // basis in A-coordinates
};

std::vector<GaussianRational> matvec(const Matrix& m, const std::vector<GaussianRational>& v) {
    const size_t n = m.size();
    std::vector<GaussianRational> out(n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
            if (!m[r][c].is_zero() && !v[c].is_zero()) out[r] += m[r][c] * v[c];
    return out;
}

IntVec dense_to_sparse(const std::vector<GaussianRational>& v) {
    IntVec s;
    for (size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) s.emplace(static_cast<int>(k), v[k]);
    return s;
}

} // namespace

CartanData root_decomposition(const Subalgebra& A, const std::vector<GField>& cartan) {
    if (cartan.empty()) throw PreconditionError("root_decomposition: empty cartan family");
    const int n = A.dimension();

    std::vector<std::vector<GaussianRational>> cartan_coords;
    for (const GField& h : cartan) {
        auto coords = A.coordinates(h);
        if (!coords) throw PreconditionError("root_decomposition: cartan element outside the algebra");
        cartan_coords.push_back(std::move(*coords));
    }
    for (size_t i = 0; i < cartan.size(); ++i)
        for (size_t j = i + 1; j < cartan.size(); ++j)
            if (!bracket(cartan[i], cartan[j]).is_zero())
                throw PreconditionError("root_decomposition: the family does not commute");

    // Start from the whole algebra and refine under each ad(h).
    Block whole;
    for (int k = 0; k < n; ++k) {
        std::vector<GaussianRational> e(static_cast<size_t>(n));
        e[static_cast<size_t>(k)] = GaussianRational::one();
        whole.vecs.push_back(std::move(e));
    }
    std::vector<Block> blocks{std::move(whole)};

    for (const auto& hc : cartan_coords) {
        Matrix ad_h = A.ad_matrix(hc);
        std::vector<Block> refined;
        for (Block& blk : blocks) {
            const int bdim = static_cast<int>(blk.vecs.size());
            // Represent ad(h) restricted to the block.
            VecSpan frame;
            for (const auto& v : blk.vecs) frame.insert(dense_to_sparse(v));
            Matrix restricted(static_cast<size_t>(bdim), std::vector<GaussianRational>(static_cast<size_t>(bdim)));
            for (int c = 0; c < bdim; ++c) {
                std::vector<GaussianRational> image = matvec(ad_h, blk.vecs[static_cast<size_t>(c)]);
                auto rep = frame.coordinates(dense_to_sparse(image));
                if (!rep) throw Error("root_decomposition: block is not ad-invariant");
                for (int r = 0; r < bdim; ++r) restricted[static_cast<size_t>(r)][static_cast<size_t>(c)] = (*rep)[static_cast<size_t>(r)];
            }

            std::vector<Rat> eigs = rational_roots(char_poly(restricted));
            int found = 0;
            for (const Rat& lam : eigs) {
                Matrix shifted = restricted;
                for (int k = 0; k < bdim; ++k)
                    shifted[static_cast<size_t>(k)][static_cast<size_t>(k)] -= GaussianRational(lam);
                auto kern = kernel_basis(shifted);
                if (kern.empty()) continue;
                Block sub;
                sub.values = blk.values;
                sub.values.push_back(lam);
                for (const auto& kv : kern) {
                    // Lift from block coordinates to A-coordinates.
                    std::vector<GaussianRational> lifted(static_cast<size_t>(n));
                    for (int c = 0; c < bdim; ++c) {
                        if (kv[static_cast<size_t>(c)].is_zero()) continue;
                        for (int r = 0; r < n; ++r)
                            lifted[static_cast<size_t>(r)] += kv[static_cast<size_t>(c)] * blk.vecs[static_cast<size_t>(c)][static_cast<size_t>(r)];
                    }
                    sub.vecs.push_back(std::move(lifted));
                }
                found += static_cast<int>(sub.vecs.size());
                refined.push_back(std::move(sub));
            }
            if (found != bdim)
                throw Error("root_decomposition: ad of a cartan element is not diagonalizable over the rationals");
        }
        blocks = std::move(refined);
    }

    // Separate the zero block and check self-centralization.
    CartanData cd;
    cd.cartan = cartan;
    std::vector<std::pair<std::vector<Rat>, Block>> nonzero;
    for (Block& blk : blocks) {
        bool zero = std::all_of(blk.values.begin(), blk.values.end(), [](const Rat& q) { return q == 0; });
        if (zero) {
            VecSpan cartan_span;
            for (const auto& hc : cartan_coords) cartan_span.insert(dense_to_sparse(hc));
            if (static_cast<int>(blk.vecs.size()) != cartan_span.dimension())
                throw Error("root_decomposition: cartan family is not self-centralizing");
            for (const auto& v : blk.vecs)
                if (!cartan_span.contains(dense_to_sparse(v)))
                    throw Error("root_decomposition: cartan family is not self-centralizing");
            for (const auto& v : blk.vecs) cd.zero_space.push_back(A.materialize(v));
        } else {
            nonzero.emplace_back(blk.values, std::move(blk));
        }
    }
    std::sort(nonzero.begin(), nonzero.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    for (auto& [values, blk] : nonzero) {
        std::vector<GField> fields;
        for (const auto& v : blk.vecs) {
            GField F = A.materialize(v);
            // Re-verify the claimed eigenfield property by exact brackets.
            for (size_t i = 0; i < cartan.size(); ++i)
                if (bracket(cartan[i], F) != values[i] * F)
                    throw Error("root_decomposition: eigenfield verification failed");
            fields.push_back(std::move(F));
        }
        cd.roots.push_back(values);
        cd.root_spaces.push_back(std::move(fields));
    }
    return cd;
}

std::vector<SimpleType> identify_type(const CartanData& cd) {
    if (cd.roots.empty()) throw PreconditionError("identify_type: no roots (algebra may be abelian)");
    const size_t rank_values = cd.cartan.size();

    std::set<std::vector<Rat>> root_set(cd.roots.begin(), cd.roots.end());
    auto is_root = [&](const std::vector<Rat>& v) { return root_set.count(v) > 0; };

    // Lex-positive cone; the set must be symmetric.
    std::vector<std::vector<Rat>> positive;
    for (const auto& r : cd.roots) {
        std::vector<Rat> neg(r.size());
        for (size_t k = 0; k < r.size(); ++k) neg[k] = -r[k];
        if (!is_root(neg)) throw Error("identify_type: root set is not symmetric");
        auto lead = std::find_if(r.begin(), r.end(), [](const Rat& q) { return q != 0; });
        if (lead != r.end() && *lead > 0) positive.push_back(r);
    }
    if (positive.size() * 2 != cd.roots.size()) throw Error("identify_type: positive cone is not half the roots");

    // Simple roots: positive and not a sum of two positive roots.
    std::set<std::vector<Rat>> positive_set(positive.begin(), positive.end());
    std::vector<std::vector<Rat>> simple;
    for (const auto& r : positive) {
        bool decomposable = false;
        for (const auto& s : positive) {
            if (s == r) continue;
            std::vector<Rat> rest(r.size());
            for (size_t k = 0; k < r.size(); ++k) rest[k] = r[k] - s[k];
            if (positive_set.count(rest)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(r);
    }
    if (simple.size() != rank_values)
        throw Error("identify_type: simple root count " + std::to_string(simple.size()) +
                    " does not match the cartan dimension " + std::to_string(rank_values));

    // Cartan matrix from exact root strings: A[i][j] = -max{k : a_i + k a_j is a root}.
    const int rank = static_cast<int>(simple.size());
    IntMatrix cartan_mat(static_cast<size_t>(rank), std::vector<long>(static_cast<size_t>(rank), 0));
    for (int i = 0; i < rank; ++i) cartan_mat[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            if (i == j) continue;
            long q = 0;
            std::vector<Rat> probe = simple[static_cast<size_t>(i)];
            for (;;) {
                for (size_t k = 0; k < probe.size(); ++k) probe[k] += simple[static_cast<size_t>(j)][k];
                if (!is_root(probe)) break;
                if (++q > 3) throw Error("identify_type: root string longer than 3");
            }
            cartan_mat[static_cast<size_t>(i)][static_cast<size_t>(j)] = -q;
        }

    std::vector<SimpleType> out;
    for (auto& [type, order] : identify_cartan_matrix(cartan_mat)) out.push_back(type);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace liefield
