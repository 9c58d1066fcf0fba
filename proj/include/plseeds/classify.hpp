#ifndef PLSEEDS_CLASSIFY_HPP
#define PLSEEDS_CLASSIFY_HPP

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "plseeds/catalog.hpp"
#include "plseeds/complex.hpp"
#include "plseeds/complex_io.hpp"
#include "plseeds/errors.hpp"
#include "plseeds/homology.hpp"
#include "plseeds/isomorphism.hpp"

namespace plseeds {

/// The wedge witness: an edge {v, w} such that every minimal non-face
/// contains both vertices or neither.
inline std::optional<std::pair<int, int>> wedge_witness(const PureComplex& K,
                                                        const std::vector<VertexSet>& mnfs) {
    std::vector<VertexSet> edges;
    {
        std::unordered_set<VertexSet> seen;
        for (VertexSet f : K.facets)
            f.for_each([&](int u) {
                f.for_each([&](int v) {
                    if (u < v) seen.insert(VertexSet{u, v});
                });
            });
        edges.assign(seen.begin(), seen.end());
        std::sort(edges.begin(), edges.end());
    }
    for (VertexSet e : edges) {
        bool witness = true;
        for (VertexSet s : mnfs) {
            const int hits = (e & s).count();
            if (hits == 1) { witness = false; break; }
        }
        if (witness) {
            const int v = e.min_vertex();
            return std::make_pair(v, e.without(v).min_vertex());
        }
    }
    return std::nullopt;
}

/// Seedness condition: no edge is a wedge witness.
inline bool is_seed(const PureComplex& K) {
    return !wedge_witness(K, minimal_nonfaces(K)).has_value();
}

/**
 * De-wedges until no witness remains: each step replaces K by the link of
 * the lexicographically smallest witness vertex, relabeled onto a compact
 * label set.  The result is independent of the witness choice up to
 * isomorphism.
 */
inline PureComplex reduce_to_seed(PureComplex K) {
    for (;;) {
        if (K.embedded) K = K.compactified();
        const auto witness = wedge_witness(K, minimal_nonfaces(K));
        if (!witness) return K;
        K = link(K, VertexSet{witness->first}).compactified();
    }
}

/// Finds non-adjacent poles v, w with every facet containing exactly one of
/// them and equal links; returns (poles, base = link of v, compactified).
inline std::optional<std::pair<std::pair<int, int>, PureComplex>> is_suspension(
    const PureComplex& K) {
    for (int v = 1; v <= K.m; ++v) {
        if (!K.is_face(VertexSet{v})) continue;
        for (int w = v + 1; w <= K.m; ++w) {
            if (!K.is_face(VertexSet{w})) continue;
            if (K.is_face(VertexSet{v, w})) continue;
            bool split = true;
            for (VertexSet f : K.facets)
                if (!f.contains(v) && !f.contains(w)) { split = false; break; }
            if (!split) continue;
            const PureComplex lv = link(K, VertexSet{v});
            const PureComplex lw = link(K, VertexSet{w});
            if (lv.facets == lw.facets)
                return std::make_pair(std::make_pair(v, w), lv.compactified());
        }
    }
    return std::nullopt;
}

/**
 * Classified seeds per (n, Picard number).  Strata for Picard <= 3 are
 * hard-seeded from the known classification; Picard 4 strata are added by
 * pipeline runs.  Asking for a stratum that is neither known nor computed
 * raises db_stratum_error.
 */
class SeedDatabase {
  public:
    SeedDatabase() {
        for (int n = 1; n <= 11; ++n)
            for (int pic = 1; pic <= 3; ++pic) strata_[{n, pic}] = {};
        strata_[{1, 1}] = {s0()};
        strata_[{2, 2}] = {square()};
        strata_[{2, 3}] = {pentagon()};
        strata_[{3, 3}] = {octahedron()};
        strata_[{4, 3}] = {cyclic_polytope_boundary(4, 7)};
    }

    bool has_stratum(int n, int pic) const { return strata_.count({n, pic}) > 0; }

    const std::vector<PureComplex>& stratum(int n, int pic) const {
        auto it = strata_.find({n, pic});
        if (it == strata_.end())
            throw db_stratum_error("seed database lacks stratum n=" + std::to_string(n) +
                                   " p=" + std::to_string(pic));
        return it->second;
    }

    void store(int n, int pic, std::vector<PureComplex> seeds) {
        strata_[{n, pic}] = std::move(seeds);
    }

    std::vector<std::pair<int, int>> strata_keys() const {
        std::vector<std::pair<int, int>> out;
        for (const auto& [key, value] : strata_) out.push_back(key);
        return out;
    }

    /// Directory layout: seeds_p{P}_n{N}.cplx per stratum plus an index
    /// file listing strata and counts.
    void save(const std::string& dir) const {
        namespace fs = std::filesystem;
        fs::create_directories(dir);
        std::ofstream index(fs::path(dir) / "index.txt");
        if (!index) throw format_error("cannot write seed database index in '" + dir + "'");
        for (const auto& [key, seeds] : strata_) {
            index << key.second << ' ' << key.first << ' ' << seeds.size() << '\n';
            const std::string name =
                "seeds_p" + std::to_string(key.second) + "_n" + std::to_string(key.first) + ".cplx";
            write_complex_file((fs::path(dir) / name).string(), seeds);
        }
    }

    static SeedDatabase load(const std::string& dir) {
        namespace fs = std::filesystem;
        std::ifstream index(fs::path(dir) / "index.txt");
        if (!index) throw format_error("cannot read seed database index in '" + dir + "'");
        SeedDatabase db;
        db.strata_.clear();
        int pic, n;
        std::size_t count;
        while (index >> pic >> n >> count) {
            const std::string name =
                "seeds_p" + std::to_string(pic) + "_n" + std::to_string(n) + ".cplx";
            auto seeds = read_complex_file((fs::path(dir) / name).string());
            if (seeds.size() != count)
                throw format_error("stratum " + name + " holds " + std::to_string(seeds.size()) +
                                   " complexes, index says " + std::to_string(count));
            db.strata_[{n, pic}] = std::move(seeds);
        }
        return db;
    }

  private:
    std::map<std::pair<int, int>, std::vector<PureComplex>> strata_;
};

inline bool matches_db_entry(const PureComplex& seed, const SeedDatabase& db) {
    const int n = seed.n, pic = picard(seed);
    for (const PureComplex& entry : db.stratum(n, pic))
        if (are_isomorphic(seed, entry)) return true;
    return false;
}

/**
 * PL sphere test for weak pseudo-manifolds of Picard number <= 7: the
 * mod 2 Betti numbers must be a sphere's, and the link of every vertex
 * must reduce to a seed already classified in the database.
 */
inline bool is_pl_sphere(const PureComplex& K, const SeedDatabase& db) {
    if (K.facets.empty()) return false;
    if (K.n == 1) return K.facet_count() == 2;
    if (!is_z2_homology_sphere(K)) return false;
    const VertexSet sup = K.support();
    bool ok = true;
    sup.for_each([&](int v) {
        if (!ok) return;
        const PureComplex seed = reduce_to_seed(link(K, VertexSet{v}));
        if (!matches_db_entry(seed, db)) ok = false;
    });
    return ok;
}

} // namespace plseeds

#endif
