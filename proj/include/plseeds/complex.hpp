#ifndef PLSEEDS_COMPLEX_HPP
#define PLSEEDS_COMPLEX_HPP

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "plseeds/errors.hpp"
#include "plseeds/vertex_set.hpp"

namespace plseeds {

/**
 * A pure simplicial complex: every facet has exactly n vertices, so the
 * dimension is n-1.  Facets are kept strictly sorted by bitmask value,
 * which is the canonical order used by every serialized output.
 *
 * By default every vertex of 1..m must appear in some facet.  A complex
 * flagged `embedded` lives inside a larger label set (links, or complexes
 * enumerated inside a facet universe) and may have unused labels.
 */
struct PureComplex {
    int m = 0;
    int n = 0;
    std::vector<VertexSet> facets;
    bool embedded = false;

    PureComplex() = default;

    PureComplex(int m_, int n_, std::vector<VertexSet> facets_, bool embedded_ = false)
        : m(m_), n(n_), facets(std::move(facets_)), embedded(embedded_) {
        std::sort(facets.begin(), facets.end());
        validate();
    }

    void validate() const {
        if (m < 0 || m > 63) throw std::invalid_argument("vertex count out of range");
        if (n < 0) throw std::invalid_argument("negative facet size");
        VertexSet full = VertexSet::full(m);
        VertexSet seen;
        for (std::size_t i = 0; i < facets.size(); ++i) {
            const VertexSet f = facets[i];
            if (!f.subset_of(full))
                throw std::invalid_argument("facet uses a label outside 1..m");
            if (f.count() != n)
                throw purity_error("facet of size " + std::to_string(f.count()) +
                                   " in a complex of facet size " + std::to_string(n));
            if (i > 0 && !(facets[i - 1] < f))
                throw std::invalid_argument("duplicate facet");
            seen = seen | f;
        }
        if (!embedded && !facets.empty() && seen != full)
            throw std::invalid_argument("unused vertex label in a non-embedded complex");
    }

    bool operator==(const PureComplex& o) const {
        return m == o.m && n == o.n && facets == o.facets;
    }

    int facet_count() const { return static_cast<int>(facets.size()); }
    int dim() const { return n - 1; }

    VertexSet support() const {
        VertexSet s;
        for (VertexSet f : facets) s = s | f;
        return s;
    }

    bool is_face(VertexSet sigma) const {
        for (VertexSet f : facets)
            if (sigma.subset_of(f)) return true;
        return sigma.empty() && !facets.empty();
    }

    /// Relabels the support order-preservingly onto 1..|support| and drops
    /// the embedded flag.
    PureComplex compactified() const {
        const VertexSet sup = support();
        std::vector<int> new_label(64, 0);
        int next = 1;
        sup.for_each([&](int v) { new_label[static_cast<std::size_t>(v)] = next++; });
        std::vector<VertexSet> out;
        out.reserve(facets.size());
        for (VertexSet f : facets) {
            VertexSet g;
            f.for_each([&](int v) { g = g.with(new_label[static_cast<std::size_t>(v)]); });
            out.push_back(g);
        }
        return PureComplex(next - 1, n, std::move(out));
    }

    /// Applies a relabeling perm[v] = new label of v; perm is 1-based.
    PureComplex relabeled(const std::vector<int>& perm) const {
        std::vector<VertexSet> out;
        out.reserve(facets.size());
        for (VertexSet f : facets) {
            VertexSet g;
            f.for_each([&](int v) { g = g.with(perm[static_cast<std::size_t>(v)]); });
            out.push_back(g);
        }
        return PureComplex(m, n, std::move(out), embedded);
    }
};

/// All (n-1)-subsets of the given facets, deduplicated, in canonical order.
inline std::vector<VertexSet> ridges_of(const std::vector<VertexSet>& facets) {
    if (facets.empty()) return {};
    const int n = facets.front().count();
    if (n < 1) throw purity_error("ridges of a 0-size facet set");
    std::vector<VertexSet> out;
    for (VertexSet f : facets) {
        if (f.count() != n) throw purity_error("mixed facet sizes");
        f.for_each([&](int v) { out.push_back(f.without(v)); });
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Lk_K(sigma) = { tau \ sigma : sigma <= tau in K }, kept on K's label set.
inline PureComplex link(const PureComplex& K, VertexSet sigma) {
    if (!K.is_face(sigma)) throw not_a_face_error("link of a non-face");
    std::vector<VertexSet> out;
    for (VertexSet f : K.facets)
        if (sigma.subset_of(f)) out.push_back(f - sigma);
    return PureComplex(K.m, K.n - sigma.count(), std::move(out), /*embedded=*/true);
}

/// K * L with L's labels shifted by K.m; |facets| multiplies.
inline PureComplex join(const PureComplex& K, const PureComplex& L) {
    std::vector<VertexSet> out;
    out.reserve(K.facets.size() * L.facets.size());
    for (VertexSet f : K.facets)
        for (VertexSet g : L.facets)
            out.push_back(VertexSet(f.bits | (g.bits << K.m)));
    return PureComplex(K.m + L.m, K.n + L.n, std::move(out), K.embedded || L.embedded);
}

/// Join with S^0 on two fresh vertices m+1, m+2.
inline PureComplex suspension(const PureComplex& K) {
    PureComplex s0(2, 1, {VertexSet{1}, VertexSet{2}});
    return join(K, s0);
}

/**
 * Simplicial wedge at v.  The two copies of v take labels v and m+1; all
 * other labels are unchanged.  Facets are
 *   {v, m+1} u tau   for facets tau of Lk_K(v), and
 *   {v} u F, {m+1} u F  for facets F of K avoiding v.
 */
inline PureComplex wedge(const PureComplex& K, int v) {
    if (!K.is_face(VertexSet{v})) throw not_a_face_error("wedge at a non-vertex");
    const int w = K.m + 1;
    std::vector<VertexSet> out;
    for (VertexSet f : K.facets) {
        if (f.contains(v)) {
            out.push_back(f.with(w));
        } else {
            out.push_back(f.with(v));
            out.push_back(f.with(w));
        }
    }
    return PureComplex(K.m + 1, K.n + 1, std::move(out), K.embedded);
}

/// Every face of K, grouped by cardinality (index k = faces of k vertices).
/// Includes singletons through facets; the empty face is left implicit.
inline std::vector<std::vector<VertexSet>> faces_by_card(const PureComplex& K) {
    std::unordered_set<VertexSet> seen;
    for (VertexSet f : K.facets) {
        // enumerate subsets of f
        std::uint64_t sub = f.bits;
        while (true) {
            seen.insert(VertexSet(sub));
            if (sub == 0) break;
            sub = (sub - 1) & f.bits;
        }
    }
    seen.erase(VertexSet());
    std::vector<std::vector<VertexSet>> out(static_cast<std::size_t>(K.n) + 1);
    for (VertexSet s : seen) out[static_cast<std::size_t>(s.count())].push_back(s);
    for (auto& level : out) std::sort(level.begin(), level.end());
    return out;
}

/**
 * All inclusion-minimal subsets of [m] that are not faces, in canonical
 * order.  Candidates are built by extending faces by one vertex, so the
 * cost scales with the face count rather than 2^m.
 */
inline std::vector<VertexSet> minimal_nonfaces(const PureComplex& K) {
    const auto levels = faces_by_card(K);
    std::unordered_set<VertexSet> face_set;
    for (const auto& level : levels)
        face_set.insert(level.begin(), level.end());

    const VertexSet full = VertexSet::full(K.m);
    std::unordered_set<VertexSet> cand;
    // ghost vertices give singleton non-faces
    full.for_each([&](int v) {
        if (!face_set.count(VertexSet{v})) cand.insert(VertexSet{v});
    });
    for (const auto& level : levels)
        for (VertexSet f : level)
            (full - f).for_each([&](int v) {
                VertexSet ext = f.with(v);
                if (!face_set.count(ext)) cand.insert(ext);
            });

    std::vector<VertexSet> out;
    for (VertexSet c : cand) {
        bool minimal = true;
        c.for_each([&](int v) {
            if (!face_set.count(c.without(v))) minimal = false;
        });
        if (minimal) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Direct recount oracle: every ridge lies in exactly two facets.
inline bool is_weak_pseudomanifold_direct(const PureComplex& K) {
    if (K.facets.empty()) return true;
    for (VertexSet r : ridges_of(K.facets)) {
        int cnt = 0;
        for (VertexSet f : K.facets)
            if (r.subset_of(f) && ++cnt > 2) break;
        if (cnt != 2) return false;
    }
    return true;
}

inline int picard(const PureComplex& K) { return K.m - K.n; }

/// f_vector[k] = number of k-dimensional faces, k = 0..n-1.
inline std::vector<long long> f_vector(const PureComplex& K) {
    const auto levels = faces_by_card(K);
    std::vector<long long> out;
    for (int k = 1; k <= K.n; ++k)
        out.push_back(static_cast<long long>(levels[static_cast<std::size_t>(k)].size()));
    return out;
}

} // namespace plseeds

#endif
