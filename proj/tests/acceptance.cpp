// Acceptance suite: runs every acceptance criterion at its stated
// tolerance and prints one PASS/FAIL line per criterion.  The process
// exits with the number of failed criteria.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "plseeds/catalog.hpp"
#include "plseeds/charmap.hpp"
#include "plseeds/classify.hpp"
#include "plseeds/homology.hpp"
#include "plseeds/isomorphism.hpp"
#include "plseeds/pipeline.hpp"
#include "plseeds/rcurves.hpp"
#include "plseeds/search.hpp"

using namespace plseeds;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
std::ostringstream detail;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int criterion, bool pass, const std::string& summary) {
    std::cout << "CRITERION " << criterion << ": " << (pass ? "PASS" : "FAIL") << " - "
              << summary << "\n";
    const std::string extra = detail.str();
    if (!extra.empty()) std::cout << extra;
    detail.str("");
    std::cout << std::flush;
    if (!pass) ++failures;
}

bool expect(bool ok, const std::string& what) {
    if (!ok) detail << "    MISMATCH: " << what << "\n";
    return ok;
}

// ---------------------------------------------------------------- oracle

// Gray-code scan over every facet subset: counts nonempty weak
// pseudo-manifolds under optional required/forbidden facets and an
// optional facet-count cap.
long long brute_force_wpm_count(const std::vector<VertexSet>& universe,
                                const std::vector<int>& required = {},
                                const std::vector<int>& forbidden = {},
                                long long facet_cap = -1) {
    const auto A = incidence_matrix(universe);
    const int M = A.M;
    std::vector<int> cnt(static_cast<std::size_t>(A.N), 0);
    std::vector<char> in_req(static_cast<std::size_t>(M), 0), in_forb(static_cast<std::size_t>(M), 0);
    for (int j : required) in_req[static_cast<std::size_t>(j)] = 1;
    for (int j : forbidden) in_forb[static_cast<std::size_t>(j)] = 1;

    int bad = 0;                 // ridges whose count is neither 0 nor 2
    int missing = static_cast<int>(required.size());
    int clashes = 0;             // forbidden facets currently selected
    int size = 0;
    long long total = 0;
    std::vector<char> selected(static_cast<std::size_t>(M), 0);

    const std::uint64_t end = std::uint64_t{1} << M;
    for (std::uint64_t i = 1; i < end; ++i) {
        const int j = std::countr_zero(i);
        const bool adding = !selected[static_cast<std::size_t>(j)];
        selected[static_cast<std::size_t>(j)] ^= 1;
        size += adding ? 1 : -1;
        if (in_req[static_cast<std::size_t>(j)]) missing += adding ? -1 : 1;
        if (in_forb[static_cast<std::size_t>(j)]) clashes += adding ? 1 : -1;
        for (int r : A.cols[static_cast<std::size_t>(j)]) {
            auto& c = cnt[static_cast<std::size_t>(r)];
            const bool was_ok = c == 0 || c == 2;
            c += adding ? 1 : -1;
            const bool now_ok = c == 0 || c == 2;
            bad += static_cast<int>(was_ok) - static_cast<int>(now_ok);
        }
        if (bad == 0 && size > 0 && missing == 0 && clashes == 0 &&
            (facet_cap < 0 || size <= facet_cap))
            ++total;
    }
    return total;
}

SearchJob make_job(const std::vector<VertexSet>& universe, int m, int n, int threads) {
    SearchJob job;
    job.m = m;
    job.n = n;
    job.facets = universe;
    const auto A = incidence_matrix(universe);
    job.basis = convenient_basis(kernel_basis(A), A);
    job.threads = threads;
    return job;
}

// ------------------------------------------------------------- criteria

void criterion_1_orbit_counts() {
    const auto t0 = Clock::now();
    const std::vector<std::size_t> expect_counts = {7, 16, 28, 35, 35, 28, 16, 7, 3, 1};
    bool ok = true;
    for (int n = 2; n <= 11; ++n) {
        const auto got = idcm_orbits(n, 4).size();
        ok &= expect(got == expect_counts[static_cast<std::size_t>(n - 2)],
                     "orbits n=" + std::to_string(n) + ": got " + std::to_string(got) +
                         ", want " + std::to_string(expect_counts[static_cast<std::size_t>(n - 2)]));
    }
    const double dt = seconds_since(t0);
    ok &= expect(dt < 5.0, "orbit enumeration took " + std::to_string(dt) + " s, budget 5 s");
    std::ostringstream s;
    s << "IDCM orbit counts n=2..11 (" << dt << " s)";
    report(1, ok, s.str());
}

struct PipelineRuns {
    SeedDatabase db;
    std::vector<PipelineResult> results;  // index n-2
    double n_le_4_seconds = 0;
    double n5_seconds = 0;
};

PipelineRuns criterion_2_pipeline(int threads) {
    PipelineRuns runs;
    PipelineOptions opt;
    opt.threads = threads;
    const std::vector<std::size_t> expect_final = {1, 4, 21, 142};
    bool ok = true;

    auto t0 = Clock::now();
    for (int n = 2; n <= 4; ++n)
        runs.results.push_back(pipeline(n, runs.db, opt));
    runs.n_le_4_seconds = seconds_since(t0);

    t0 = Clock::now();
    runs.results.push_back(pipeline(5, runs.db, opt));
    runs.n5_seconds = seconds_since(t0);

    for (int n = 2; n <= 5; ++n) {
        const auto got = runs.results[static_cast<std::size_t>(n - 2)].seeds.size();
        ok &= expect(got == expect_final[static_cast<std::size_t>(n - 2)],
                     "seed count n=" + std::to_string(n) + ": got " + std::to_string(got) +
                         ", want " + std::to_string(expect_final[static_cast<std::size_t>(n - 2)]));
    }
    ok &= expect(runs.results[2].appended_suspensions == 1,
                 "n=4 should append exactly the cross-polytope suspension");
    ok &= expect(runs.n_le_4_seconds < 120.0,
                 "n<=4 took " + std::to_string(runs.n_le_4_seconds) + " s, budget 120 s");
    ok &= expect(runs.n5_seconds < 1800.0,
                 "n=5 took " + std::to_string(runs.n5_seconds) + " s, budget 1800 s");

    if (std::getenv("PLSEEDS_EXTENDED")) {
        const auto t6 = Clock::now();
        const auto r6 = pipeline(6, runs.db, opt);
        detail << "    extended n=6: " << r6.seeds.size() << " seeds (want 733) in "
               << seconds_since(t6) << " s\n";
        ok &= expect(r6.seeds.size() == 733, "extended n=6 seed count");
    }

    std::ostringstream s;
    s << "pipeline seed counts 1/4/21/142 (n<=4: " << runs.n_le_4_seconds
      << " s, n=5: " << runs.n5_seconds << " s)";
    report(2, ok, s.str());
    return runs;
}

void criterion_3_intermediate_counts(const PipelineRuns& runs) {
    struct Want {
        int n;
        long long line7, line13, line15, line19;
    };
    const std::vector<Want> want = {{2, 90, 22, 2, 1}, {3, 1119, 578, 5, 4}};
    bool ok = true;
    for (const auto& w : want) {
        const auto& r = runs.results[static_cast<std::size_t>(w.n - 2)];
        ok &= expect(r.line7 == w.line7, "n=" + std::to_string(w.n) + " line7: got " +
                                             std::to_string(r.line7) + ", reference count " +
                                             std::to_string(w.line7));
        ok &= expect(r.line13 == w.line13, "n=" + std::to_string(w.n) + " line13: got " +
                                               std::to_string(r.line13) + ", reference count " +
                                               std::to_string(w.line13));
        ok &= expect(r.line15 == w.line15, "n=" + std::to_string(w.n) + " line15: got " +
                                               std::to_string(r.line15) + ", want " +
                                               std::to_string(w.line15));
        ok &= expect(r.line19 == w.line19, "n=" + std::to_string(w.n) + " line19: got " +
                                               std::to_string(r.line19) + ", want " +
                                               std::to_string(w.line19));
    }
    if (!ok)
        detail << "    NOTE: line7/line13 count distinct labeled complexes in the running\n"
                  "    union, which depends on the chosen orbit representatives; an\n"
                  "    exhaustive search over every representative choice (n=2) shows no\n"
                  "    choice reproduces the reference labeled counts, while the\n"
                  "    representative-independent counts (line15, line19) match exactly.\n"
                  "    Reported, not reconciled.\n";
    report(3, ok, "reference intermediate counts for n=2,3 under the labeled-distinct reading");
}

void criterion_4_full_universe(const PipelineRuns& runs, int threads) {
    const auto t0 = Clock::now();
    PipelineOptions opt;
    opt.threads = threads;
    bool ok = true;

    const auto c26 = classify_full_universe(2, 6, runs.db, opt);
    ok &= expect(c26.pl_spheres == 1, "(2,6) PL spheres: got " + std::to_string(c26.pl_spheres));
    ok &= expect(c26.seeds == 1, "(2,6) seeds: got " + std::to_string(c26.seeds));
    ok &= expect(c26.colorable_seeds == 1,
                 "(2,6) colorable seeds: got " + std::to_string(c26.colorable_seeds));

    const auto c37 = classify_full_universe(3, 7, runs.db, opt);
    ok &= expect(c37.pl_spheres == 5, "(3,7) PL spheres: got " + std::to_string(c37.pl_spheres));
    ok &= expect(c37.seeds == 4, "(3,7) seeds: got " + std::to_string(c37.seeds));
    ok &= expect(c37.colorable_seeds == 4,
                 "(3,7) colorable seeds: got " + std::to_string(c37.colorable_seeds));

    const double dt = seconds_since(t0);
    ok &= expect(dt < 60.0, "full-universe classification took " + std::to_string(dt) + " s");

    if (std::getenv("PLSEEDS_EXTENDED")) {
        const auto t1 = Clock::now();
        const auto c48 = classify_full_universe(4, 8, runs.db, opt);
        detail << "    extended (4,8): spheres " << c48.pl_spheres << " (want 39), seeds "
               << c48.seeds << " (want 23), colorable " << c48.colorable_seeds
               << " (want 21) in " << seconds_since(t1) << " s\n";
        ok &= expect(c48.pl_spheres == 39 && c48.seeds == 23 && c48.colorable_seeds == 21,
                     "extended (4,8) classification");
    }

    std::ostringstream s;
    s << "full-universe classification (2,6) and (3,7) (" << dt << " s)";
    report(4, ok, s.str());
}

void criterion_5_oracle_equivalence(int threads) {
    const auto t0 = Clock::now();
    bool ok = true;
    int universes = 0;

    auto check_universe = [&](const std::vector<VertexSet>& u, int m, int n,
                              const std::string& name) {
        auto job = make_job(u, m, n, threads);
        const auto fast = enumerate_wpm(job);
        const auto brute = brute_force_wpm_count(u);
        ++universes;
        ok &= expect(static_cast<long long>(fast.size()) == brute,
                     name + ": search found " + std::to_string(fast.size()) + ", oracle " +
                         std::to_string(brute));
    };

    for (auto [m, n] : {std::pair{4, 2}, {5, 2}, {6, 2}, {7, 2}, {4, 3}, {5, 3}, {6, 3},
                        {6, 4}, {5, 4}, {6, 5}, {7, 5}, {7, 6}})
        check_universe(all_subsets_universe(m, n), m, n,
                       "all " + std::to_string(n) + "-subsets of [" + std::to_string(m) + "]");

    std::mt19937 rng(20240809);
    int made = 0;
    while (made < 10) {
        const int m = 6 + static_cast<int>(rng() % 3);
        const int n = 2 + static_cast<int>(rng() % 3);
        if (n >= m) continue;
        std::vector<VertexSet> u;
        for (VertexSet f : all_subsets_universe(m, n))
            if (rng() % 3 == 0) u.push_back(f);
        if (u.size() < 8 || u.size() > 24) continue;
        check_universe(u, m, n,
                       "random universe #" + std::to_string(made) + " (M=" +
                           std::to_string(u.size()) + ")");
        ++made;
    }

    // constrained variants: required/forbidden facets against the same oracle
    int constrained = 0;
    while (constrained < 5) {
        const int m = 6, n = 3;
        std::vector<VertexSet> u;
        for (VertexSet f : all_subsets_universe(m, n))
            if (rng() % 2 == 0) u.push_back(f);
        if (u.size() < 10 || u.size() > 18) continue;
        std::vector<int> required, forbidden;
        for (std::size_t j = 0; j < u.size(); ++j) {
            const auto roll = rng() % 10;
            if (roll == 0) required.push_back(static_cast<int>(j));
            else if (roll == 1) forbidden.push_back(static_cast<int>(j));
        }
        const auto A = incidence_matrix(u);
        const auto kb = convenient_basis(kernel_basis(A), A);
        const auto pinned = apply_link_constraints(kb, required, forbidden);
        const auto brute = brute_force_wpm_count(u, required, forbidden);
        ++constrained;
        if (!pinned) {
            ok &= expect(brute == 0, "constrained universe declared infeasible, oracle found " +
                                         std::to_string(brute));
            continue;
        }
        SearchJob job;
        job.m = m;
        job.n = n;
        job.facets = u;
        job.basis = *pinned;
        job.threads = threads;
        const auto fast = enumerate_wpm(job);
        ok &= expect(static_cast<long long>(fast.size()) == brute,
                     "constrained universe #" + std::to_string(constrained) + ": search " +
                         std::to_string(fast.size()) + ", oracle " + std::to_string(brute));
    }

    std::ostringstream s;
    s << "oracle equivalence on " << universes << " universes + " << constrained
      << " constrained variants (" << seconds_since(t0) << " s)";
    report(5, ok, s.str());
}

void criterion_6_cyclic_counts() {
    bool ok = true;
    for (int n = 2; n <= 11; ++n) {
        const auto closed = cyclic_facet_bound(n);
        const auto counted = cyclic_facet_count(n, n + 4);
        ok &= expect(closed == counted, "n=" + std::to_string(n) + ": formula " +
                                            std::to_string(closed) + ", Gale evenness " +
                                            std::to_string(counted));
    }
    report(6, ok, "cyclic polytope facet formula against Gale evenness, n=2..11");
}

void criterion_7_homology() {
    bool ok = true;
    for (int k = 1; k <= 10; ++k) {
        const auto b = betti_z2(simplex_boundary(k));
        std::vector<long long> want(static_cast<std::size_t>(k), 0);
        want.front() = 1;
        want.back() += 1;  // k = 1 collapses to (2)
        ok &= expect(b == want, "simplex boundary k=" + std::to_string(k));
    }
    ok &= expect(betti_z2(rp2_six()) == std::vector<long long>{1, 1, 1},
                 "6-vertex projective plane");
    ok &= expect(betti_z2(torus_seven()) == std::vector<long long>{1, 2, 1}, "7-vertex torus");
    report(7, ok, "homology suite: simplex boundaries, projective plane, torus");
}

void criterion_8_isomorphism_oracle() {
    const auto t0 = Clock::now();
    std::mt19937 rng(987654321);
    bool ok = true;
    int agreements = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 5 + static_cast<int>(rng() % 3);
        const int n = 2 + static_cast<int>(rng() % 2);
        auto random_complex = [&]() {
            for (;;) {
                std::vector<VertexSet> fs;
                for (VertexSet f : all_subsets_universe(m, n))
                    if (rng() % 3 == 0) fs.push_back(f);
                if (fs.empty()) continue;
                PureComplex K(m, n, fs, true);
                if (K.support() != VertexSet::full(m)) continue;
                return PureComplex(m, n, fs);
            }
        };
        PureComplex K = random_complex();
        PureComplex L = K;
        if (trial % 2 == 0) {
            std::vector<int> perm(static_cast<std::size_t>(m) + 1);
            for (int v = 1; v <= m; ++v) perm[static_cast<std::size_t>(v)] = v;
            std::shuffle(perm.begin() + 1, perm.end(), rng);
            L = PureComplex(m, n, K.relabeled(perm).facets);
        } else {
            L = random_complex();
        }
        const auto fast = are_isomorphic(K, L);
        const bool brute = brute_force_isomorphic(K, L);
        if (fast.has_value() == brute) ++agreements;
        if (fast) {
            auto img = K.relabeled(*fast);
            std::sort(img.facets.begin(), img.facets.end());
            ok &= expect(img.facets == L.facets, "witness relabeling is wrong");
        }
    }
    ok &= expect(agreements == 200,
                 "agreement on " + std::to_string(agreements) + "/200 pairs");
    std::ostringstream s;
    s << "isomorphism vs all-permutations oracle on 200 pairs (" << seconds_since(t0) << " s)";
    report(8, ok, s.str());
}

void criterion_9_lifting(const PipelineRuns& runs) {
    const auto t0 = Clock::now();
    bool ok = true;
    long long lifted = 0, seeds = 0;
    for (int n = 2; n <= 5; ++n) {
        for (const auto& S : runs.db.stratum(n, 4)) {
            ++seeds;
            bool found = false;
            for (const auto& lam : mod2_charmaps(S)) {
                const auto lift = lift_to_integer(lam, S);
                if (!lift) continue;
                if (!is_nonsingular_z(*lift, S)) {
                    ok &= expect(false, "lift fails the exact determinant check");
                    continue;
                }
                if (!(lift->mod2().cols == lam.cols)) {
                    ok &= expect(false, "lift does not reduce to its mod-2 map");
                    continue;
                }
                found = true;
                ++lifted;
                break;
            }
            ok &= expect(found, "seed with " + std::to_string(S.facet_count()) +
                                    " facets (n=" + std::to_string(n) + ") admits no lift");
        }
    }
    std::ostringstream s;
    s << "integer lifts for " << lifted << "/" << seeds << " seeds with n<=5 ("
      << seconds_since(t0) << " s)";
    report(9, ok, s.str());
}

void criterion_10_rational_curves(const PipelineRuns& runs) {
    bool ok = true;

    const auto parts = mnf_vertex_partitions(hexagon());
    ok &= expect(parts.size() == 4, "hexagon has " + std::to_string(parts.size()) +
                                        " partitions, want 4");
    std::set<std::set<std::uint64_t>> got;
    for (const auto& p : parts) {
        std::set<std::uint64_t> one;
        for (VertexSet s : p) one.insert(s.bits);
        got.insert(one);
    }
    const std::set<std::set<std::uint64_t>> expect_parts = {
        {VertexSet{1, 3}.bits, VertexSet{2, 5}.bits, VertexSet{4, 6}.bits},
        {VertexSet{1, 4}.bits, VertexSet{2, 6}.bits, VertexSet{3, 5}.bits},
        {VertexSet{1, 5}.bits, VertexSet{2, 4}.bits, VertexSet{3, 6}.bits},
        {VertexSet{1, 4}.bits, VertexSet{2, 5}.bits, VertexSet{3, 6}.bits}};
    ok &= expect(got == expect_parts, "hexagon partitions differ from P1..P4");

    CharMatrixZ lam = char_matrix_z(2, 6);
    const int vals[2][6] = {{1, 0, -1, -1, 0, 1}, {0, 1, 1, 0, -1, -1}};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 6; ++c) lam.set(r, c, vals[r][c]);
    ok &= expect(is_nonsingular_z(lam, hexagon()), "the reference hexagon map is non-singular");
    const auto op = optimal_partition(hexagon(), lam);
    ok &= expect(op.has_value(), "the reference hexagon map admits an optimal partition");
    if (op) {
        std::set<std::uint64_t> one;
        for (VertexSet s : *op) one.insert(s.bits);
        ok &= expect(one == std::set<std::uint64_t>{VertexSet{1, 4}.bits, VertexSet{2, 5}.bits,
                                                    VertexSet{3, 6}.bits},
                     "the optimal partition is P4");
    }

    ok &= expect(mnf_vertex_partitions(pentagon()).empty(), "pentagon admits no partition");
    ok &= expect(mnf_vertex_partitions(suspension(pentagon())).empty(),
                 "the suspended pentagon admits no partition");
    ok &= expect(mnf_vertex_partitions(suspension(cyclic_polytope_boundary(4, 7))).empty(),
                 "the suspended cyclic polytope admits no partition");

    CharMatrixZ cross = char_matrix_z(4, 8);
    for (int i = 0; i < 4; ++i) {
        cross.set(i, i, 1);
        cross.set(i, i + 4, -1);
    }
    ok &= expect(optimal_partition(cross_polytope_boundary(4), cross).has_value(),
                 "the 4-dimensional cross polytope with the block map is optimal");

    for (int n : {10, 11}) {
        if (!runs.db.has_stratum(n, 4)) {
            detail << "    note: stratum (" << n
                   << ", 4) absent at desk scale; the no-partition check is vacuous\n";
            continue;
        }
        for (const auto& S : runs.db.stratum(n, 4))
            ok &= expect(mnf_vertex_partitions(S).empty(),
                         "n=" + std::to_string(n) + " seed admits a partition");
    }

    report(10, ok, "minimal-component partitions: hexagon, pentagon, suspensions, cross polytope");
}

} // namespace

int main() {
    const int threads = default_thread_count();
    std::cout << "acceptance suite (threads=" << threads << ")\n";

    criterion_1_orbit_counts();
    auto runs = criterion_2_pipeline(threads);
    criterion_3_intermediate_counts(runs);
    criterion_4_full_universe(runs, threads);
    criterion_5_oracle_equivalence(threads);
    criterion_6_cyclic_counts();
    criterion_7_homology();
    criterion_8_isomorphism_oracle();
    criterion_9_lifting(runs);
    criterion_10_rational_curves(runs);

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED")
              << "\n";
    return failures;
}
