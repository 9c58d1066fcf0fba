#ifndef PLSEEDS_PIPELINE_HPP
#define PLSEEDS_PIPELINE_HPP

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "plseeds/charmap.hpp"
#include "plseeds/classify.hpp"
#include "plseeds/parallel.hpp"
#include "plseeds/search.hpp"

namespace plseeds {

struct PipelineOptions {
    int threads = 1;
    std::uint64_t candidate_cap = std::uint64_t{1} << 48;
    std::function<void(const std::string&)> log;
};

struct PipelineResult {
    long long line7 = 0;   // labeled complexes after the per-orbit union
    long long line13 = 0;  // after the Picard and seedness filters
    long long line15 = 0;  // isomorphism classes
    long long line19 = 0;  // PL spheres among them
    int appended_suspensions = 0;
    std::vector<PureComplex> seeds;  // final list, canonical forms
};

/// Facet universe of the binary matroid associated with an orbit
/// representative: complements of the row-independent p-subsets.
inline std::vector<VertexSet> matroid_universe(const DualCharMatrix& d) {
    return binary_matroid(charmap_of_dcm(d)).facets;
}

/**
 * The Picard-4 seed pipeline for one dimension: enumerate weak
 * pseudo-manifolds inside every IDCM-orbit matroid under the upper bound
 * theorem filter, union the labeled outputs, filter to full support and
 * seedness, dedupe up to isomorphism, keep the PL spheres, then append the
 * suspensions of lower Picard seeds that support a DCM but no IDCM.
 *
 * The database must already hold every stratum with n' < n; the final
 * seed list is stored into stratum (n, 4).
 */
inline PipelineResult pipeline(int n, SeedDatabase& db, const PipelineOptions& opt = {}) {
    const int m = n + 4;
    PipelineResult res;
    auto log = [&](const std::string& s) {
        if (opt.log) opt.log(s);
    };

    const auto orbits = idcm_orbits(n, 4);
    log("orbits: " + std::to_string(orbits.size()));

    std::set<std::vector<VertexSet>> labeled;
    for (std::size_t oi = 0; oi < orbits.size(); ++oi) {
        SearchJob job;
        job.m = m;
        job.n = n;
        job.facets = matroid_universe(orbits[oi]);
        const IncidenceMatrix A = incidence_matrix(job.facets);
        job.basis = convenient_basis(kernel_basis(A), A);
        job.properties = {ubt_property(n, static_cast<int>(job.facets.size()))};
        job.threads = opt.threads;
        job.candidate_cap = opt.candidate_cap;
        const auto found = enumerate_wpm(job);
        for (const PureComplex& K : found) labeled.insert(K.facets);
        log("orbit " + std::to_string(oi + 1) + "/" + std::to_string(orbits.size()) + ": " +
            std::to_string(found.size()) + " complexes, union " + std::to_string(labeled.size()));
    }
    res.line7 = static_cast<long long>(labeled.size());

    // Picard filter (full support) and seedness filter
    std::vector<PureComplex> survivors;
    {
        std::vector<std::vector<VertexSet>> all(labeled.begin(), labeled.end());
        std::vector<char> keep(all.size(), 0);
        parallel_for_index(static_cast<long long>(all.size()), opt.threads, [&](long long i) {
            PureComplex K(m, n, all[static_cast<std::size_t>(i)], /*embedded=*/true);
            if (K.support() != VertexSet::full(m)) return;
            if (!is_seed(K)) return;
            keep[static_cast<std::size_t>(i)] = 1;
        });
        for (std::size_t i = 0; i < all.size(); ++i)
            if (keep[i]) survivors.emplace_back(m, n, std::move(all[i]));
    }
    res.line13 = static_cast<long long>(survivors.size());
    log("after Picard and seedness filters: " + std::to_string(res.line13));

    // one representative per isomorphism class, via canonical forms
    std::vector<PureComplex> reps;
    {
        std::vector<PureComplex> canon(survivors.size());
        parallel_for_index(static_cast<long long>(survivors.size()), opt.threads, [&](long long i) {
            canon[static_cast<std::size_t>(i)] = canonical_form(survivors[static_cast<std::size_t>(i)]);
        });
        std::set<std::vector<VertexSet>> seen;
        for (auto& c : canon)
            if (seen.insert(c.facets).second) reps.push_back(std::move(c));
    }
    res.line15 = static_cast<long long>(reps.size());
    log("isomorphism classes: " + std::to_string(res.line15));

    // PL sphere filter
    std::vector<PureComplex> spheres;
    {
        std::vector<char> keep(reps.size(), 0);
        parallel_for_index(static_cast<long long>(reps.size()), opt.threads, [&](long long i) {
            if (is_pl_sphere(reps[static_cast<std::size_t>(i)], db)) keep[static_cast<std::size_t>(i)] = 1;
        });
        for (std::size_t i = 0; i < reps.size(); ++i)
            if (keep[i]) spheres.push_back(std::move(reps[i]));
    }
    res.line19 = static_cast<long long>(spheres.size());
    log("PL spheres: " + std::to_string(res.line19));

    // seeds missed by the IDCM search are suspensions of Picard-3 seeds
    // that support a DCM but no IDCM
    if (db.has_stratum(n - 1, 3)) {
        for (const PureComplex& S : db.stratum(n - 1, 3)) {
            const PureComplex T = suspension(S);
            if (!supports_dcm(T, 4, /*injective=*/false)) continue;
            if (supports_dcm(T, 4, /*injective=*/true)) continue;
            bool known = false;
            for (const PureComplex& have : spheres)
                if (are_isomorphic(T, have)) { known = true; break; }
            if (!known) {
                spheres.push_back(canonical_form(T));
                ++res.appended_suspensions;
            }
        }
    }
    if (res.appended_suspensions)
        log("appended " + std::to_string(res.appended_suspensions) + " suspension seed(s)");

    std::sort(spheres.begin(), spheres.end(),
              [](const PureComplex& a, const PureComplex& b) { return a.facets < b.facets; });
    res.seeds = spheres;
    db.store(n, 4, std::move(spheres));
    return res;
}

struct UniverseClassification {
    long long wpm_total = 0;        // labeled, nonempty
    long long full_support = 0;     // labeled complexes using all m vertices
    long long classes = 0;          // isomorphism classes among those
    long long pl_spheres = 0;
    long long seeds = 0;            // seeds among the PL spheres
    long long colorable_seeds = 0;  // seeds supporting a DCM (maximal real
                                    // Buchstaber number)
};

/// Enumerates every weak pseudo-manifold over the complete n-subset
/// universe of [m] and classifies the full-support ones.
inline UniverseClassification classify_full_universe(int n, int m, const SeedDatabase& db,
                                                     const PipelineOptions& opt = {}) {
    UniverseClassification out;
    SearchJob job;
    job.m = m;
    job.n = n;
    job.facets = all_subsets_universe(m, n);
    const IncidenceMatrix A = incidence_matrix(job.facets);
    job.basis = convenient_basis(kernel_basis(A), A);
    job.threads = opt.threads;
    job.candidate_cap = opt.candidate_cap;
    const auto found = enumerate_wpm(job);
    out.wpm_total = static_cast<long long>(found.size());

    std::vector<PureComplex> full;
    for (const PureComplex& K : found)
        if (K.support() == VertexSet::full(m)) full.emplace_back(m, n, K.facets);
    out.full_support = static_cast<long long>(full.size());

    std::vector<PureComplex> reps;
    {
        std::vector<PureComplex> canon(full.size());
        parallel_for_index(static_cast<long long>(full.size()), opt.threads, [&](long long i) {
            canon[static_cast<std::size_t>(i)] = canonical_form(full[static_cast<std::size_t>(i)]);
        });
        std::set<std::vector<VertexSet>> seen;
        for (auto& c : canon)
            if (seen.insert(c.facets).second) reps.push_back(std::move(c));
    }
    out.classes = static_cast<long long>(reps.size());

    for (const PureComplex& K : reps) {
        if (!is_pl_sphere(K, db)) continue;
        ++out.pl_spheres;
        if (!is_seed(K)) continue;
        ++out.seeds;
        if (supports_dcm(K, picard(K), /*injective=*/false)) ++out.colorable_seeds;
    }
    return out;
}

} // namespace plseeds

#endif
