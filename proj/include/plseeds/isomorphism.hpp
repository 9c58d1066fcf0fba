#ifndef PLSEEDS_ISOMORPHISM_HPP
#define PLSEEDS_ISOMORPHISM_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <unordered_set>
#include <vector>

#include "plseeds/complex.hpp"

namespace plseeds {

/// Sorted sizes of the minimal non-faces containing each vertex, indexed
/// 1..m; an isomorphism invariant of the vertex.
inline std::vector<std::vector<int>> color_sequences(int m, const std::vector<VertexSet>& mnfs) {
    std::vector<std::vector<int>> seq(static_cast<std::size_t>(m) + 1);
    for (VertexSet s : mnfs)
        s.for_each([&](int v) { seq[static_cast<std::size_t>(v)].push_back(s.count()); });
    for (auto& s : seq) std::sort(s.begin(), s.end());
    return seq;
}

inline std::vector<std::vector<int>> color_sequences(const PureComplex& K,
                                                     const std::vector<VertexSet>& mnfs) {
    return color_sequences(K.m, mnfs);
}

inline std::vector<std::vector<int>> color_sequences(const PureComplex& K) {
    return color_sequences(K, minimal_nonfaces(K));
}

/// Cheap comparable summary: (m, n, facet count, mnf count, f-vector,
/// sorted color-sequence multiset).
struct Fingerprint {
    int m, n, facet_count, mnf_count;
    std::vector<long long> f_vec;
    std::vector<std::vector<int>> color_multiset;

    auto tied() const { return std::tie(m, n, facet_count, mnf_count, f_vec, color_multiset); }
    bool operator==(const Fingerprint& o) const { return tied() == o.tied(); }
    bool operator<(const Fingerprint& o) const { return tied() < o.tied(); }
};

inline Fingerprint fingerprint(const PureComplex& K, const std::vector<VertexSet>& mnfs) {
    Fingerprint fp;
    fp.m = K.m;
    fp.n = K.n;
    fp.facet_count = K.facet_count();
    fp.mnf_count = static_cast<int>(mnfs.size());
    fp.f_vec = f_vector(K);
    auto seq = color_sequences(K, mnfs);
    fp.color_multiset.assign(seq.begin() + 1, seq.end());
    std::sort(fp.color_multiset.begin(), fp.color_multiset.end());
    return fp;
}

inline Fingerprint fingerprint(const PureComplex& K) {
    return fingerprint(K, minimal_nonfaces(K));
}

/**
 * Isomorphism test via minimal non-faces: combinatorial fingerprints
 * first, then color-sequence classes, then a backtracking search over the
 * class-respecting relabelings that must map the MNF sets bijectively.
 * Returns a witness relabeling (index v -> image of v) or absence.
 */
inline std::optional<std::vector<int>> are_isomorphic(const PureComplex& K, const PureComplex& L) {
    const auto mnf_k = minimal_nonfaces(K);
    const auto mnf_l = minimal_nonfaces(L);
    if (fingerprint(K, mnf_k) != fingerprint(L, mnf_l)) return std::nullopt;

    const auto seq_k = color_sequences(K, mnf_k);
    const auto seq_l = color_sequences(L, mnf_l);

    // vertices of L per color sequence
    std::map<std::vector<int>, std::vector<int>> classes_l;
    for (int v = 1; v <= L.m; ++v) classes_l[seq_l[static_cast<std::size_t>(v)]].push_back(v);

    // assign K's vertices smallest class first
    std::vector<int> order(static_cast<std::size_t>(K.m));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& ca = classes_l.at(seq_k[static_cast<std::size_t>(a)]);
        const auto& cb = classes_l.at(seq_k[static_cast<std::size_t>(b)]);
        return ca.size() < cb.size();
    });

    // adjacency: {u, v} is a face
    auto adjacency = [](const PureComplex& C) {
        std::vector<VertexSet> adj(static_cast<std::size_t>(C.m) + 1);
        for (VertexSet f : C.facets)
            f.for_each([&](int u) { adj[static_cast<std::size_t>(u)] = adj[static_cast<std::size_t>(u)] | f.without(u); });
        return adj;
    };
    const auto adj_k = adjacency(K);
    const auto adj_l = adjacency(L);

    std::unordered_set<VertexSet> mnf_set_l(mnf_l.begin(), mnf_l.end());
    std::vector<int> image(static_cast<std::size_t>(K.m) + 1, 0);
    std::vector<bool> used(static_cast<std::size_t>(L.m) + 1, false);

    auto rec = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == order.size()) {
            for (VertexSet s : mnf_k) {
                VertexSet img;
                s.for_each([&](int v) { img = img.with(image[static_cast<std::size_t>(v)]); });
                if (!mnf_set_l.count(img)) return false;
            }
            return true;
        }
        const int v = order[depth];
        for (int w : classes_l.at(seq_k[static_cast<std::size_t>(v)])) {
            if (used[static_cast<std::size_t>(w)]) continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth; ++d) {
                const int u = order[d];
                if (adj_k[static_cast<std::size_t>(v)].contains(u) !=
                    adj_l[static_cast<std::size_t>(w)].contains(image[static_cast<std::size_t>(u)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = true;
            if (self(self, depth + 1)) return true;
            used[static_cast<std::size_t>(w)] = false;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return image;
}

/// All-permutations oracle for small m; used to validate are_isomorphic.
inline bool brute_force_isomorphic(const PureComplex& K, const PureComplex& L) {
    if (K.m != L.m || K.n != L.n || K.facet_count() != L.facet_count()) return false;
    std::vector<int> perm(static_cast<std::size_t>(K.m) + 1);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        std::vector<VertexSet> mapped;
        mapped.reserve(K.facets.size());
        for (VertexSet f : K.facets) {
            VertexSet g;
            f.for_each([&](int v) { g = g.with(perm[static_cast<std::size_t>(v)]); });
            mapped.push_back(g);
        }
        std::sort(mapped.begin(), mapped.end());
        match = mapped == L.facets;
        if (match) return true;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return false;
}

namespace detail {

// Iterated invariant refinement of the color-sequence partition; returns
// per-vertex class ids, ordered canonically (class 0 first).
inline std::vector<int> refine_classes(const PureComplex& K, const std::vector<VertexSet>& mnfs) {
    using Key = std::vector<long long>;
    std::vector<Key> key(static_cast<std::size_t>(K.m) + 1);
    const auto seq = color_sequences(K, mnfs);
    for (int v = 1; v <= K.m; ++v)
        key[static_cast<std::size_t>(v)].assign(seq[static_cast<std::size_t>(v)].begin(),
                                                seq[static_cast<std::size_t>(v)].end());

    auto ranks_of = [&](const std::vector<Key>& keys) {
        std::vector<Key> distinct(keys.begin() + 1, keys.end());
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<int> rank(keys.size(), -1);
        for (std::size_t v = 1; v < keys.size(); ++v)
            rank[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), keys[v]) -
                                       distinct.begin());
        rank[0] = static_cast<int>(distinct.size());
        return rank;
    };

    std::vector<int> rank = ranks_of(key);
    int classes = *std::max_element(rank.begin() + 1, rank.end()) + 1;
    for (int round = 0; round < K.m; ++round) {
        std::vector<Key> next(static_cast<std::size_t>(K.m) + 1);
        for (int v = 1; v <= K.m; ++v) {
            Key k;
            k.push_back(rank[static_cast<std::size_t>(v)]);
            std::vector<Key> env;
            for (VertexSet s : mnfs) {
                if (!s.contains(v)) continue;
                Key e{0, s.count()};
                s.for_each([&](int u) { e.push_back(rank[static_cast<std::size_t>(u)]); });
                std::sort(e.begin() + 2, e.end());
                env.push_back(std::move(e));
            }
            for (VertexSet f : K.facets) {
                if (!f.contains(v)) continue;
                Key e{1};
                f.for_each([&](int u) { e.push_back(rank[static_cast<std::size_t>(u)]); });
                std::sort(e.begin() + 1, e.end());
                env.push_back(std::move(e));
            }
            std::sort(env.begin(), env.end());
            for (const Key& e : env) {
                k.push_back(-1);
                k.insert(k.end(), e.begin(), e.end());
            }
            next[static_cast<std::size_t>(v)] = std::move(k);
        }
        std::vector<int> new_rank = ranks_of(next);
        int new_classes = *std::max_element(new_rank.begin() + 1, new_rank.end()) + 1;
        if (new_classes == classes) break;
        rank = std::move(new_rank);
        classes = new_classes;
    }
    return rank;
}

} // namespace detail

/**
 * Canonical relabeling: lexicographically minimal facet-list encoding over
 * the relabelings that respect the refined color classes.  Classes are
 * assigned consecutive label ranges in canonical class order, and partial
 * encodings prune the search at class boundaries.
 */
inline PureComplex canonical_form(const PureComplex& K, const std::vector<VertexSet>& mnfs) {
    if (K.facets.empty()) return K;
    const std::vector<int> cls = detail::refine_classes(K, mnfs);
    const int num_classes = *std::max_element(cls.begin() + 1, cls.end()) + 1;
    std::vector<std::vector<int>> members(static_cast<std::size_t>(num_classes));
    for (int v = 1; v <= K.m; ++v) members[static_cast<std::size_t>(cls[static_cast<std::size_t>(v)])].push_back(v);

    std::vector<int> label(static_cast<std::size_t>(K.m) + 1, 0);
    std::vector<bool> taken(static_cast<std::size_t>(K.m) + 1, false);
    std::vector<VertexSet> best;
    bool have_best = false;

    // facets fully labeled so far, sorted ascending; labels 1..t are the
    // smallest, so this is a strict prefix of the final sorted encoding
    auto prefix = [&](int labeled_count) {
        std::vector<VertexSet> out;
        for (VertexSet f : K.facets) {
            VertexSet g;
            bool full = true;
            f.for_each([&](int v) {
                if (label[static_cast<std::size_t>(v)] == 0)
                    full = false;
                else
                    g = g.with(label[static_cast<std::size_t>(v)]);
            });
            if (full) out.push_back(g);
        }
        (void)labeled_count;
        std::sort(out.begin(), out.end());
        return out;
    };

    int next_label = 1;
    auto rec = [&](auto&& self, std::size_t class_idx) -> void {
        if (class_idx == members.size()) {
            auto enc = prefix(K.m);
            if (!have_best || enc < best) {
                best = std::move(enc);
                have_best = true;
            }
            return;
        }
        auto& mem = members[class_idx];
        // permute this class over its label range
        auto place = [&](auto&& self_place, std::size_t depth) -> void {
            if (depth == mem.size()) {
                if (have_best) {
                    auto part = prefix(next_label - 1);
                    const std::size_t len = std::min(part.size(), best.size());
                    for (std::size_t i = 0; i < len; ++i) {
                        if (part[i] < best[i]) break;
                        if (best[i] < part[i]) return;  // prune
                    }
                }
                self(self, class_idx + 1);
                return;
            }
            for (int v : mem) {
                if (taken[static_cast<std::size_t>(v)]) continue;
                taken[static_cast<std::size_t>(v)] = true;
                label[static_cast<std::size_t>(v)] = next_label++;
                self_place(self_place, depth + 1);
                --next_label;
                label[static_cast<std::size_t>(v)] = 0;
                taken[static_cast<std::size_t>(v)] = false;
            }
        };
        place(place, 0);
    };
    rec(rec, 0);
    return PureComplex(K.m, K.n, std::move(best), K.embedded);
}

inline PureComplex canonical_form(const PureComplex& K) {
    return canonical_form(K, minimal_nonfaces(K));
}

} // namespace plseeds

#endif
