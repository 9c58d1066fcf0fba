#ifndef PLSEEDS_CHARMAP_HPP
#define PLSEEDS_CHARMAP_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "plseeds/complex.hpp"
#include "plseeds/errors.hpp"

namespace plseeds {

/**
 * A mod 2 characteristic matrix: n rows, m columns, column j is the image
 * vector of vertex j packed into the low n bits of a word.
 */
struct CharMatrixZ2 {
    int n = 0;
    int m = 0;
    std::vector<std::uint32_t> cols;

    bool get(int r, int c) const { return (cols[static_cast<std::size_t>(c)] >> r) & 1; }
};

/// An integer characteristic matrix; entries stay in {-1, 0, 1} here since
/// they arise from sign-lifting a mod 2 map.
struct CharMatrixZ {
    int n = 0;
    int m = 0;
    std::vector<std::array<int, 16>> col_data;  // n <= 16 entries used per column

    int get(int r, int c) const { return col_data[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)]; }
    void set(int r, int c, int v) { col_data[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = v; }

    CharMatrixZ2 mod2() const {
        CharMatrixZ2 out;
        out.n = n;
        out.m = m;
        out.cols.assign(static_cast<std::size_t>(m), 0);
        for (int c = 0; c < m; ++c)
            for (int r = 0; r < n; ++r)
                if (get(r, c) % 2 != 0) out.cols[static_cast<std::size_t>(c)] |= 1u << r;
        return out;
    }
};

inline CharMatrixZ char_matrix_z(int n, int m) {
    CharMatrixZ z;
    z.n = n;
    z.m = m;
    z.col_data.assign(static_cast<std::size_t>(m), {});
    return z;
}

/**
 * A dual characteristic matrix: one row per vertex, each a vector of Z_2^p
 * packed into the low p bits.  Orbit representatives carry the identity
 * pattern on the last p rows; matrices produced from a DCM search carry it
 * on the rows of some cofacet instead.
 */
struct DualCharMatrix {
    int m = 0;
    int p = 0;
    std::vector<std::uint32_t> rows;

    bool is_injective() const {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i] == 0) return false;
            for (std::size_t j = i + 1; j < rows.size(); ++j)
                if (rows[i] == rows[j]) return false;
        }
        return true;
    }

    bool standard_form() const {
        for (int i = 0; i < p; ++i)
            if (rows[static_cast<std::size_t>(m - p + i)] != (1u << i)) return false;
        return true;
    }

    bool operator==(const DualCharMatrix& o) const {
        return m == o.m && p == o.p && rows == o.rows;
    }
};

namespace gf2col {

/// Rank of a list of bit-packed vectors.
inline int rank(std::vector<std::uint32_t> v) {
    int rank = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::uint32_t x = v[i];
        for (std::size_t j = 0; j < static_cast<std::size_t>(rank); ++j)
            x = std::min(x, x ^ v[j]);
        if (x) {
            v[static_cast<std::size_t>(rank)] = x;
            // keep reduced vectors sorted descending so min-reduction works
            for (int j = rank; j > 0 && v[static_cast<std::size_t>(j)] > v[static_cast<std::size_t>(j - 1)]; --j)
                std::swap(v[static_cast<std::size_t>(j)], v[static_cast<std::size_t>(j - 1)]);
            ++rank;
        }
    }
    return rank;
}

inline bool independent(const std::vector<std::uint32_t>& v) {
    return rank(v) == static_cast<int>(v.size());
}

} // namespace gf2col

/// Binary matroid of a full-row-rank mod 2 matrix: facets are the n-subsets
/// of columns that are linearly independent.
inline PureComplex binary_matroid(const CharMatrixZ2& lam) {
    {
        std::vector<std::uint32_t> all(lam.cols.begin(), lam.cols.end());
        if (gf2col::rank(all) != lam.n) throw std::invalid_argument("matrix is rank deficient");
    }
    std::vector<VertexSet> out;
    std::vector<int> idx(static_cast<std::size_t>(lam.n));
    std::iota(idx.begin(), idx.end(), 1);
    while (true) {
        std::vector<std::uint32_t> sel;
        for (int v : idx) sel.push_back(lam.cols[static_cast<std::size_t>(v - 1)]);
        if (gf2col::independent(sel)) {
            VertexSet f;
            for (int v : idx) f = f.with(v);
            out.push_back(f);
        }
        int pos = lam.n - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == lam.m - (lam.n - 1 - pos)) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < lam.n; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    return PureComplex(lam.m, lam.n, std::move(out), /*embedded=*/true);
}

/// Dual matroid: complement every facet.
inline PureComplex dual_matroid(const PureComplex& M) {
    const VertexSet full = VertexSet::full(M.m);
    std::vector<VertexSet> out;
    out.reserve(M.facets.size());
    for (VertexSet f : M.facets) out.push_back(full - f);
    return PureComplex(M.m, M.m - M.n, std::move(out), /*embedded=*/true);
}

/// lambda^R built from a dual matrix: rows of the output span the
/// orthogonal complement of the DCM's column space, normalized to [I_n | M]
/// when the DCM is in standard form.
inline CharMatrixZ2 charmap_of_dcm(const DualCharMatrix& d) {
    const int n = d.m - d.p;
    CharMatrixZ2 lam;
    lam.n = n;
    lam.m = d.m;
    lam.cols.assign(static_cast<std::size_t>(d.m), 0);
    if (d.standard_form()) {
        for (int i = 0; i < n; ++i) lam.cols[static_cast<std::size_t>(i)] = 1u << i;
        for (int j = 0; j < d.p; ++j) {
            std::uint32_t col = 0;
            for (int i = 0; i < n; ++i)
                if ((d.rows[static_cast<std::size_t>(i)] >> j) & 1) col |= 1u << i;
            lam.cols[static_cast<std::size_t>(n + j)] = col;
        }
        return lam;
    }
    // general case: kernel of the transposed row list
    std::vector<std::uint64_t> rows_of_dt(static_cast<std::size_t>(d.p), 0);  // p x m
    for (int j = 0; j < d.p; ++j)
        for (int v = 0; v < d.m; ++v)
            if ((d.rows[static_cast<std::size_t>(v)] >> j) & 1)
                rows_of_dt[static_cast<std::size_t>(j)] |= std::uint64_t{1} << v;
    // eliminate to find m-p independent kernel vectors x with D^t x = 0
    std::vector<int> pivot_col;
    std::vector<std::uint64_t> mat = rows_of_dt;
    int rank = 0;
    for (int c = 0; c < d.m && rank < d.p; ++c) {
        int piv = -1;
        for (int r = rank; r < d.p; ++r)
            if ((mat[static_cast<std::size_t>(r)] >> c) & 1) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(mat[static_cast<std::size_t>(rank)], mat[static_cast<std::size_t>(piv)]);
        for (int r = 0; r < d.p; ++r)
            if (r != rank && ((mat[static_cast<std::size_t>(r)] >> c) & 1))
                mat[static_cast<std::size_t>(r)] ^= mat[static_cast<std::size_t>(rank)];
        pivot_col.push_back(c);
        ++rank;
    }
    if (rank != d.p) throw std::invalid_argument("dual matrix is rank deficient");
    int row = 0;
    for (int fc = 0; fc < d.m; ++fc) {
        if (std::find(pivot_col.begin(), pivot_col.end(), fc) != pivot_col.end()) continue;
        lam.cols[static_cast<std::size_t>(fc)] |= 1u << row;
        for (int r = 0; r < rank; ++r)
            if ((mat[static_cast<std::size_t>(r)] >> fc) & 1)
                lam.cols[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] |= 1u << row;
        ++row;
    }
    return lam;
}

/**
 * One representative per orbit of injective dual matrices [M; I_p] under
 * row and column permutations.  Representatives are lexicographically
 * minimal sorted row lists; m = n + p must stay at most 2^p - 1 or no
 * injective matrix exists.
 */
inline std::vector<DualCharMatrix> idcm_orbits(int n, int p) {
    if (n < 1 || p < 1 || p > 8) throw std::invalid_argument("unsupported (n, p)");
    if (n + p > (1 << p) - 1)
        throw std::invalid_argument("no injective dual matrix: m exceeds 2^p - 1");

    // pool: nonzero vectors that are not identity rows
    std::vector<std::uint32_t> pool;
    for (std::uint32_t v = 1; v < (1u << p); ++v)
        if ((v & (v - 1)) != 0) pool.push_back(v);

    // all column permutations of Z_2^p as bit shuffles
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> base(static_cast<std::size_t>(p));
        std::iota(base.begin(), base.end(), 0);
        do {
            perms.push_back(base);
        } while (std::next_permutation(base.begin(), base.end()));
    }
    auto apply = [&](std::uint32_t v, const std::vector<int>& perm) {
        std::uint32_t out = 0;
        for (int b = 0; b < p; ++b)
            if ((v >> b) & 1) out |= 1u << perm[static_cast<std::size_t>(b)];
        return out;
    };
    auto canonical = [&](std::vector<std::uint32_t> rows) {
        std::sort(rows.begin(), rows.end());
        std::vector<std::uint32_t> best = rows;
        std::vector<std::uint32_t> tmp(rows.size());
        bool first = true;
        for (const auto& perm : perms) {
            for (std::size_t i = 0; i < rows.size(); ++i) tmp[i] = apply(rows[i], perm);
            std::sort(tmp.begin(), tmp.end());
            if (first || tmp < best) best = tmp;
            first = false;
        }
        return best;
    };

    std::vector<std::vector<std::uint32_t>> reps;
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    const int pool_size = static_cast<int>(pool.size());
    if (n > pool_size) throw std::invalid_argument("no injective dual matrix: m exceeds 2^p - 1");
    while (true) {
        std::vector<std::uint32_t> rows;
        for (int i : idx) rows.push_back(pool[static_cast<std::size_t>(i)]);
        auto canon = canonical(rows);
        if (std::find(reps.begin(), reps.end(), canon) == reps.end()) reps.push_back(canon);
        int pos = n - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == pool_size - (n - pos)) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < n; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    std::sort(reps.begin(), reps.end());

    std::vector<DualCharMatrix> out;
    out.reserve(reps.size());
    for (auto& rows : reps) {
        DualCharMatrix d;
        d.m = n + p;
        d.p = p;
        d.rows = std::move(rows);
        for (int i = 0; i < p; ++i) d.rows.push_back(1u << i);
        out.push_back(std::move(d));
    }
    return out;
}

/**
 * Searches for a DCM over K by assigning a Z_2^p row to each vertex so
 * that the rows of every cofacet are linearly independent.  Rows are
 * assigned in descending order of cofacet membership; with `injective`
 * the rows must also be pairwise distinct.  On success the matrix is
 * basis-changed so the cofacet of the lexicographically smallest facet
 * carries the identity rows.
 */
inline std::optional<DualCharMatrix> supports_dcm(const PureComplex& K, int p, bool injective) {
    if (picard(K) != p) throw std::invalid_argument("Picard number does not match p");
    if (injective && K.m > (1 << p) - 1) return std::nullopt;

    std::vector<VertexSet> cofacets;
    const VertexSet full = VertexSet::full(K.m);
    cofacets.reserve(K.facets.size());
    for (VertexSet f : K.facets) cofacets.push_back(full - f);

    std::vector<int> touch(static_cast<std::size_t>(K.m + 1), 0);
    for (VertexSet c : cofacets) c.for_each([&](int v) { ++touch[static_cast<std::size_t>(v)]; });
    std::vector<int> order;
    for (int v = 1; v <= K.m; ++v) order.push_back(v);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return touch[static_cast<std::size_t>(a)] > touch[static_cast<std::size_t>(b)]; });

    std::vector<std::uint32_t> assign(static_cast<std::size_t>(K.m + 1), 0);
    std::vector<bool> assigned(static_cast<std::size_t>(K.m + 1), false);
    std::uint32_t used_values = 0;  // injectivity bitmask over Z_2^p

    auto cofacet_ok = [&](VertexSet c) {
        std::vector<std::uint32_t> sel;
        c.for_each([&](int v) {
            if (assigned[static_cast<std::size_t>(v)]) sel.push_back(assign[static_cast<std::size_t>(v)]);
        });
        return gf2col::independent(sel);
    };

    std::optional<DualCharMatrix> result;
    auto rec = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == order.size()) {
            DualCharMatrix d;
            d.m = K.m;
            d.p = p;
            for (int v = 1; v <= K.m; ++v) d.rows.push_back(assign[static_cast<std::size_t>(v)]);
            result = std::move(d);
            return true;
        }
        const int v = order[depth];
        for (std::uint32_t val = 1; val < (1u << p); ++val) {
            if (injective && ((used_values >> val) & 1)) continue;
            assign[static_cast<std::size_t>(v)] = val;
            assigned[static_cast<std::size_t>(v)] = true;
            if (injective) used_values |= 1u << val;
            bool ok = true;
            for (VertexSet c : cofacets)
                if (c.contains(v) && !cofacet_ok(c)) { ok = false; break; }
            if (ok && self(self, depth + 1)) return true;
            assigned[static_cast<std::size_t>(v)] = false;
            if (injective) used_values &= ~(1u << val);
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;

    // basis change: the cofacet of the lex-min facet becomes the identity
    DualCharMatrix& d = *result;
    const VertexSet c0 = full - K.facets.front();
    std::vector<std::uint32_t> basis;
    c0.for_each([&](int v) { basis.push_back(d.rows[static_cast<std::size_t>(v - 1)]); });
    // invert: solve basis^t X = I via row ops on [basis | I]
    std::vector<std::uint64_t> aug(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i)
        aug[static_cast<std::size_t>(i)] = basis[static_cast<std::size_t>(i)] | (std::uint64_t{1} << (p + i));
    for (int c = 0; c < p; ++c) {
        int piv = -1;
        for (int r = c; r < p; ++r)
            if ((aug[static_cast<std::size_t>(r)] >> c) & 1) { piv = r; break; }
        if (piv < 0) throw std::logic_error("cofacet basis not invertible");
        std::swap(aug[static_cast<std::size_t>(c)], aug[static_cast<std::size_t>(piv)]);
        for (int r = 0; r < p; ++r)
            if (r != c && ((aug[static_cast<std::size_t>(r)] >> c) & 1))
                aug[static_cast<std::size_t>(r)] ^= aug[static_cast<std::size_t>(c)];
    }
    // rows transform as r -> r * B^{-1}: bit j of the image is <r, col j of B^{-1}>
    std::vector<std::uint32_t> inv_cols(static_cast<std::size_t>(p), 0);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if ((aug[static_cast<std::size_t>(i)] >> (p + j)) & 1) inv_cols[static_cast<std::size_t>(j)] |= 1u << i;
    for (std::uint32_t& r : d.rows) {
        std::uint32_t out = 0;
        for (int j = 0; j < p; ++j)
            if (std::popcount(r & inv_cols[static_cast<std::size_t>(j)]) & 1) out |= 1u << j;
        r = out;
    }
    return result;
}

/// True iff the columns of every facet are independent over GF(2).
inline bool is_nonsingular_z2(const CharMatrixZ2& lam, const PureComplex& K) {
    for (VertexSet f : K.facets) {
        std::vector<std::uint32_t> sel;
        f.for_each([&](int v) { sel.push_back(lam.cols[static_cast<std::size_t>(v - 1)]); });
        if (!gf2col::independent(sel)) return false;
    }
    return true;
}

namespace detail {

/// Exact determinant by fraction-free (Bareiss) elimination; entries stay
/// far inside int64 for n <= 16 and inputs in {-1, 0, 1}.
inline long long int_det(std::vector<std::vector<long long>> a) {
    const int n = static_cast<int>(a.size());
    long long sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) { swap_row = r; break; }
            if (swap_row < 0) return 0;
            std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                long long num = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = num / prev;
            }
        prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    return sign * a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
}

inline long long facet_minor(const CharMatrixZ& lam, VertexSet f) {
    std::vector<std::vector<long long>> a;
    f.for_each([&](int v) {
        std::vector<long long> col;
        for (int r = 0; r < lam.n; ++r) col.push_back(lam.get(r, v - 1));
        a.push_back(std::move(col));
    });
    return int_det(std::move(a));  // determinant is transpose-invariant
}

} // namespace detail

/// True iff every facet minor has determinant +-1 (exact arithmetic).
inline bool is_nonsingular_z(const CharMatrixZ& lam, const PureComplex& K) {
    for (VertexSet f : K.facets) {
        const long long det = detail::facet_minor(lam, f);
        if (det != 1 && det != -1) return false;
    }
    return true;
}

/**
 * Sign-lifts a mod 2 characteristic map to the integers: entries keep
 * their parity, unit columns of the normalization facet stay +1, every
 * other 1 may flip to -1.  Depth-first in column-major order, trying the
 * flip first.  Returns the first full assignment whose facet minors are
 * all +-1, or nullopt.
 */
inline std::optional<CharMatrixZ> lift_to_integer(const CharMatrixZ2& lam, const PureComplex& K) {
    if (!is_nonsingular_z2(lam, K)) return std::nullopt;
    CharMatrixZ z = char_matrix_z(lam.n, lam.m);
    for (int c = 0; c < lam.m; ++c)
        for (int r = 0; r < lam.n; ++r) z.set(r, c, lam.get(r, c) ? 1 : 0);

    // unit columns of the lex-min facet are the sign-fixed identity block
    std::vector<bool> sign_fixed(static_cast<std::size_t>(lam.m), false);
    K.facets.front().for_each([&](int v) { sign_fixed[static_cast<std::size_t>(v - 1)] = true; });

    std::vector<std::pair<int, int>> flips;  // (col, row) in column-major order
    for (int c = 0; c < lam.m; ++c) {
        if (sign_fixed[static_cast<std::size_t>(c)]) continue;
        for (int r = 0; r < lam.n; ++r)
            if (lam.get(r, c)) flips.emplace_back(c, r);
    }

    // facets checkable once their last flip column is decided
    std::vector<std::vector<VertexSet>> check_after(flips.size() + 1);
    for (VertexSet f : K.facets) {
        std::size_t last = 0;
        for (std::size_t i = 0; i < flips.size(); ++i)
            if (f.contains(flips[i].first + 1)) last = i + 1;
        check_after[last].push_back(f);
    }

    auto rec = [&](auto&& self, std::size_t depth) -> bool {
        for (VertexSet f : check_after[depth]) {
            const long long det = detail::facet_minor(z, f);
            if (det != 1 && det != -1) return false;
        }
        if (depth == flips.size()) return true;
        const auto [c, r] = flips[depth];
        z.set(r, c, -1);
        if (self(self, depth + 1)) return true;
        z.set(r, c, 1);
        return self(self, depth + 1);
    };
    if (!rec(rec, 0)) return std::nullopt;
    return z;
}

/**
 * Every mod 2 characteristic map over K, normalized so the columns of the
 * lexicographically smallest facet form the identity (one representative
 * per left-GL(n, Z_2) class).  Backtracks over the remaining columns with
 * per-facet independence pruning.
 */
inline std::vector<CharMatrixZ2> mod2_charmaps(const PureComplex& K) {
    CharMatrixZ2 lam;
    lam.n = K.n;
    lam.m = K.m;
    lam.cols.assign(static_cast<std::size_t>(K.m), 0);

    const VertexSet f0 = K.facets.front();
    std::vector<bool> fixed(static_cast<std::size_t>(K.m + 1), false);
    int unit = 0;
    f0.for_each([&](int v) {
        lam.cols[static_cast<std::size_t>(v - 1)] = 1u << unit++;
        fixed[static_cast<std::size_t>(v)] = true;
    });

    std::vector<int> free_vertices;
    for (int v = 1; v <= K.m; ++v)
        if (!fixed[static_cast<std::size_t>(v)]) free_vertices.push_back(v);

    std::vector<bool> assigned(static_cast<std::size_t>(K.m + 1), false);
    for (int v = 1; v <= K.m; ++v) assigned[static_cast<std::size_t>(v)] = fixed[static_cast<std::size_t>(v)];

    auto facets_ok = [&](int v) {
        for (VertexSet f : K.facets) {
            if (!f.contains(v)) continue;
            std::vector<std::uint32_t> sel;
            f.for_each([&](int w) {
                if (assigned[static_cast<std::size_t>(w)]) sel.push_back(lam.cols[static_cast<std::size_t>(w - 1)]);
            });
            if (!gf2col::independent(sel)) return false;
        }
        return true;
    };

    std::vector<CharMatrixZ2> out;
    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == free_vertices.size()) {
            out.push_back(lam);
            return;
        }
        const int v = free_vertices[depth];
        for (std::uint32_t val = 1; val < (1u << K.n); ++val) {
            lam.cols[static_cast<std::size_t>(v - 1)] = val;
            assigned[static_cast<std::size_t>(v)] = true;
            if (facets_ok(v)) self(self, depth + 1);
            assigned[static_cast<std::size_t>(v)] = false;
        }
        lam.cols[static_cast<std::size_t>(v - 1)] = 0;
    };
    rec(rec, 0);
    return out;
}

} // namespace plseeds

#endif
