#ifndef PLSEEDS_KERNEL_BASIS_HPP
#define PLSEEDS_KERNEL_BASIS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "plseeds/bitmatrix.hpp"
#include "plseeds/incidence.hpp"

namespace plseeds {

/**
 * A basis of the GF(2) kernel of a ridge-facet incidence matrix, arranged
 * for the constrained search.
 *
 * Columns (generators) are M-bit characteristic vectors over the facet
 * universe.  The leading `blocks` are induced by chosen ridges with
 * pairwise-disjoint parent sets: restricted to the parents of its ridge, a
 * block shows the pattern e_i + e_last per column (the (k+1) x k identity-
 * over-ones matrix) and every other generator vanishes there.  Summing
 * three or more generators of one block therefore pushes that ridge's
 * facet count above two, so the search never has to visit those
 * combinations.  Columns after the blocks are unconstrained singletons.
 *
 * When link constraints are applied, the first `pinned_ones` generators are
 * forced into every solution and the next `pinned_zeros` are forced out,
 * realizing BX = (1, 0, *)^t.
 */
struct KernelBasis {
    struct Block {
        int offset = 0;  // first column of the block
        int width = 0;
        int ridge = -1;  // index into the incidence ridge list
    };

    int M = 0;
    std::vector<BitVec> gens;  // size s, each M bits
    std::vector<Block> blocks;
    int pinned_ones = 0;   // s_I
    int pinned_zeros = 0;  // s_J - s_I

    int s() const { return static_cast<int>(gens.size()); }
    int blocked_columns() const {
        int c = 0;
        for (const Block& b : blocks) c += b.width;
        return c;
    }
    std::vector<int> chosen_ridges() const {
        std::vector<int> out;
        out.reserve(blocks.size());
        for (const Block& b : blocks) out.push_back(b.ridge);
        return out;
    }
};

namespace detail {

inline int lead_bit(std::uint64_t v) { return 63 - std::countl_zero(v); }

// Reduce v against an echelon list of (value) pairs keyed by leading bit.
inline std::uint64_t reduce_value(std::uint64_t v, const std::vector<std::uint64_t>& echelon) {
    for (std::uint64_t e : echelon)
        if (v && lead_bit(v) == lead_bit(e)) v ^= e;
    return v;
}

inline std::uint64_t restrict_to(const BitVec& g, const std::vector<int>& rows) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (g.test(rows[i])) v |= std::uint64_t{1} << i;
    return v;
}

} // namespace detail

/**
 * Tries to induce a Z-pattern block for `ridge` starting at column
 * `offset`.  Fails (returning false, touching nothing) when the span of
 * the tail restrictions does not admit the exact pattern or an earlier
 * column cannot be cleared on the ridge's parent rows.
 */
inline bool try_make_block(KernelBasis& kb, const IncidenceMatrix& A, int ridge, int offset) {
    const std::vector<int>& P = A.parents[static_cast<std::size_t>(ridge)];
    const int p = static_cast<int>(P.size());
    if (p < 3 || p > 64) return false;  // width < 2 gains nothing
    const int s = kb.s();

    // span of tail restrictions, echelon by leading bit
    std::vector<std::uint64_t> echelon;
    for (int g = offset; g < s; ++g) {
        std::uint64_t v = detail::reduce_value(detail::restrict_to(kb.gens[static_cast<std::size_t>(g)], P), echelon);
        if (v) {
            echelon.push_back(v);
            std::sort(echelon.begin(), echelon.end(), std::greater<>());
        }
    }
    const int k = static_cast<int>(echelon.size());
    if (k < 2) return false;

    auto in_span = [&](std::uint64_t v) { return detail::reduce_value(v, echelon) == 0; };

    // weight-2 members of the span form disjoint cliques on the parent
    // rows; the pattern needs one clique of size k+1 (it then spans).
    std::vector<int> comp(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) comp[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
        while (comp[static_cast<std::size_t>(x)] != x) x = comp[static_cast<std::size_t>(x)] = comp[static_cast<std::size_t>(comp[static_cast<std::size_t>(x)])];
        return x;
    };
    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b)
            if (in_span((std::uint64_t{1} << a) | (std::uint64_t{1} << b))) {
                int ra = find(a), rb = find(b);
                if (ra != rb) comp[static_cast<std::size_t>(ra)] = rb;
            }
    std::vector<int> clique;
    for (int root = 0; root < p && clique.empty(); ++root) {
        if (find(root) != root) continue;
        std::vector<int> members;
        for (int i = 0; i < p; ++i)
            if (find(i) == root) members.push_back(i);
        if (static_cast<int>(members.size()) == k + 1) clique = std::move(members);
    }
    if (clique.empty()) return false;

    // every earlier column must be clearable on these rows
    for (int g = 0; g < offset; ++g)
        if (!in_span(detail::restrict_to(kb.gens[static_cast<std::size_t>(g)], P))) return false;

    // --- commit ---
    // forward echelon with generator bookkeeping
    std::vector<std::pair<std::uint64_t, int>> pivots;  // (value, gen index)
    for (int g = offset; g < s; ++g) {
        std::uint64_t v = detail::restrict_to(kb.gens[static_cast<std::size_t>(g)], P);
        for (auto& [pv, pg] : pivots)
            if (v && detail::lead_bit(v) == detail::lead_bit(pv)) {
                v ^= pv;
                kb.gens[static_cast<std::size_t>(g)] ^= kb.gens[static_cast<std::size_t>(pg)];
            }
        if (v) {
            pivots.emplace_back(v, g);
            std::sort(pivots.begin(), pivots.end(),
                      [](const auto& a, const auto& b) { return a.first > b.first; });
        }
    }

    const int last = clique.back();
    std::vector<BitVec> star;  // new block generators, one per clique row except `last`
    std::vector<int> star_row;
    for (std::size_t i = 0; i + 1 < clique.size(); ++i) {
        const std::uint64_t target =
            (std::uint64_t{1} << clique[i]) | (std::uint64_t{1} << last);
        std::uint64_t v = target;
        BitVec combo(kb.M);
        for (auto& [pv, pg] : pivots)
            if (v && detail::lead_bit(v) == detail::lead_bit(pv)) {
                v ^= pv;
                combo ^= kb.gens[static_cast<std::size_t>(pg)];
            }
        if (v != 0) return false;  // unreachable: target is in the span
        star.push_back(std::move(combo));
        star_row.push_back(clique[i]);
    }

    // rebuild the tail: star generators first, zero-restriction ones after
    std::vector<BitVec> tail;
    tail.reserve(static_cast<std::size_t>(s - offset));
    for (BitVec& b : star) tail.push_back(std::move(b));
    std::vector<bool> is_pivot(static_cast<std::size_t>(s), false);
    for (auto& [pv, pg] : pivots) is_pivot[static_cast<std::size_t>(pg)] = true;
    for (int g = offset; g < s; ++g)
        if (!is_pivot[static_cast<std::size_t>(g)])
            tail.push_back(std::move(kb.gens[static_cast<std::size_t>(g)]));
    for (int g = offset; g < s; ++g)
        kb.gens[static_cast<std::size_t>(g)] = std::move(tail[static_cast<std::size_t>(g - offset)]);

    // clear earlier columns on the parent rows using the star generators
    for (int g = 0; g < offset; ++g) {
        const std::uint64_t u = detail::restrict_to(kb.gens[static_cast<std::size_t>(g)], P);
        if (!u) continue;
        for (std::size_t i = 0; i < star_row.size(); ++i)
            if ((u >> star_row[i]) & 1)
                kb.gens[static_cast<std::size_t>(g)] ^= kb.gens[static_cast<std::size_t>(offset + static_cast<int>(i))];
    }

    kb.blocks.push_back({offset, k, ridge});
    return true;
}

/**
 * Column-transforms a raw kernel basis into block form.  Ridges are chosen
 * greedily: among those with parents disjoint from every previously chosen
 * ridge, the largest parent count wins, ties broken by smallest ridge
 * index; a candidate that cannot realize the exact pattern is skipped.
 */
inline KernelBasis convenient_basis(std::vector<BitVec> raw, const IncidenceMatrix& A) {
    KernelBasis kb;
    kb.M = A.M;
    kb.gens = std::move(raw);

    std::vector<bool> ridge_used(static_cast<std::size_t>(A.N), false);
    std::vector<bool> facet_used(static_cast<std::size_t>(A.M), false);
    int offset = 0;

    while (offset < kb.s()) {
        std::vector<int> candidates;
        for (int r = 0; r < A.N; ++r) {
            if (ridge_used[static_cast<std::size_t>(r)]) continue;
            bool disjoint = true;
            for (int f : A.parents[static_cast<std::size_t>(r)])
                if (facet_used[static_cast<std::size_t>(f)]) { disjoint = false; break; }
            if (disjoint) candidates.push_back(r);
        }
        std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
            const std::size_t pa = A.parents[static_cast<std::size_t>(a)].size();
            const std::size_t pb = A.parents[static_cast<std::size_t>(b)].size();
            return pa != pb ? pa > pb : a < b;
        });
        bool advanced = false;
        for (int r : candidates) {
            ridge_used[static_cast<std::size_t>(r)] = true;  // never reconsidered
            if (try_make_block(kb, A, r, offset)) {
                for (int f : A.parents[static_cast<std::size_t>(r)])
                    facet_used[static_cast<std::size_t>(f)] = true;
                offset += kb.blocks.back().width;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return kb;
}

inline KernelBasis convenient_basis(const IncidenceMatrix& A) {
    return convenient_basis(kernel_basis(A), A);
}

/**
 * Pins generators so that every solution satisfies K_j = 1 on `required`
 * and K_j = 0 on `forbidden` (facet indices into the universe).  Returns
 * the re-arranged basis, or nullopt when the constraint system is
 * infeasible.  Induced blocks do not survive the re-elimination; the free
 * part becomes unconstrained singletons.
 */
inline std::optional<KernelBasis> apply_link_constraints(const KernelBasis& kb,
                                                         const std::vector<int>& required,
                                                         const std::vector<int>& forbidden) {
    if (required.empty() && forbidden.empty()) return kb;
    for (int r : required)
        for (int f : forbidden)
            if (r == f) return std::nullopt;

    std::vector<BitVec> gens = kb.gens;
    const int s = static_cast<int>(gens.size());

    struct Row {
        int facet;
        bool target;
    };
    std::vector<Row> rows;
    rows.reserve(required.size() + forbidden.size());
    for (int f : required) rows.push_back({f, true});
    for (int f : forbidden) rows.push_back({f, false});

    // full-reduction column echelon over the constraint rows, in order;
    // afterwards each pivot row has a single generator carrying a 1 and
    // non-pivot generators vanish on every constraint row
    std::vector<int> pivot_of_row(rows.size(), -1);
    int cur = 0;
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        const int facet = rows[ri].facet;
        int pivot = -1;
        for (int g = cur; g < s; ++g)
            if (gens[static_cast<std::size_t>(g)].test(facet)) { pivot = g; break; }
        if (pivot < 0) continue;
        std::swap(gens[static_cast<std::size_t>(pivot)], gens[static_cast<std::size_t>(cur)]);
        for (int g = 0; g < s; ++g)
            if (g != cur && gens[static_cast<std::size_t>(g)].test(facet))
                gens[static_cast<std::size_t>(g)] ^= gens[static_cast<std::size_t>(cur)];
        pivot_of_row[ri] = cur;
        ++cur;
    }

    // forced assignment: pivots of required rows in, pivots of forbidden out
    std::vector<int> ones, zeros;
    std::vector<bool> selected(static_cast<std::size_t>(s), false);
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        const int g = pivot_of_row[ri];
        if (g < 0) continue;
        if (rows[ri].target) {
            ones.push_back(g);
            selected[static_cast<std::size_t>(g)] = true;
        } else {
            zeros.push_back(g);
        }
    }
    // consistency on rows without a pivot of their own
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        bool value = false;
        for (int g : ones)
            if (gens[static_cast<std::size_t>(g)].test(rows[ri].facet)) value = !value;
        if (value != rows[ri].target) return std::nullopt;
    }

    KernelBasis out;
    out.M = kb.M;
    out.pinned_ones = static_cast<int>(ones.size());
    out.pinned_zeros = static_cast<int>(zeros.size());
    out.gens.reserve(gens.size());
    for (int g : ones) out.gens.push_back(gens[static_cast<std::size_t>(g)]);
    for (int g : zeros) out.gens.push_back(gens[static_cast<std::size_t>(g)]);
    std::vector<bool> placed(static_cast<std::size_t>(s), false);
    for (int g : ones) placed[static_cast<std::size_t>(g)] = true;
    for (int g : zeros) placed[static_cast<std::size_t>(g)] = true;
    for (int g = 0; g < s; ++g)
        if (!placed[static_cast<std::size_t>(g)]) out.gens.push_back(gens[static_cast<std::size_t>(g)]);
    return out;
}

} // namespace plseeds

#endif
