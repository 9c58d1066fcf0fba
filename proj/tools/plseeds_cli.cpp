// Command-line surface for the weak pseudo-manifold enumerator and the
// Picard-number-4 seed pipeline.
//
// Exit codes: 0 success, 1 failure (verify mismatch or internal error),
// 2 parse/format error, 3 infeasible constraints, 4 missing seed-database
// stratum, 5 combination-space cap exceeded.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plseeds/catalog.hpp"
#include "plseeds/charmap.hpp"
#include "plseeds/classify.hpp"
#include "plseeds/complex_io.hpp"
#include "plseeds/homology.hpp"
#include "plseeds/isomorphism.hpp"
#include "plseeds/matrix_io.hpp"
#include "plseeds/pipeline.hpp"
#include "plseeds/rcurves.hpp"
#include "plseeds/search.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitMissingStratum = 4;
constexpr int kExitCapExceeded = 5;

struct CommonOpts {
    int threads = plseeds::default_thread_count();
    int cap_bits = 48;
    bool progress = false;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--threads", c.threads, "parallel worker count");
    cmd->add_option("--cap", c.cap_bits, "refuse combination spaces above 2^CAP candidates");
    cmd->add_flag("--progress", c.progress, "report outer work items as they finish");
}

std::string facet_string(plseeds::VertexSet f) {
    std::string s;
    f.for_each([&](int v) {
        if (!s.empty()) s += ' ';
        s += std::to_string(v);
    });
    return s;
}

plseeds::PureComplex load_first_complex(const std::string& path, bool embedded = false) {
    auto list = plseeds::read_complex_file(path, embedded);
    if (list.empty()) throw plseeds::format_error("no complex in '" + path + "'");
    return list.front();
}

// Resolve a .cplx facet list against the universe; required facets must be
// present, forbidden ones outside the universe are vacuous.
std::vector<int> facet_indices(const std::vector<plseeds::VertexSet>& universe,
                               const std::string& path, bool must_exist) {
    std::vector<int> out;
    const auto K = load_first_complex(path, /*embedded=*/true);
    for (plseeds::VertexSet f : K.facets) {
        auto it = std::lower_bound(universe.begin(), universe.end(), f);
        if (it == universe.end() || *it != f) {
            if (must_exist)
                throw plseeds::format_error("required facet {" + facet_string(f) +
                                            "} is not in the facet universe");
            continue;
        }
        out.push_back(static_cast<int>(it - universe.begin()));
    }
    return out;
}

int run_orbits(int n, int p, const std::string& out_path) {
    const auto orbits = plseeds::idcm_orbits(n, p);
    std::cout << "IDCM orbits for n=" << n << " p=" << p << ": " << orbits.size() << "\n";
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw plseeds::format_error("cannot write '" + out_path + "'");
        os = &file;
    }
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        *os << "# orbit " << i << "\n";
        plseeds::write_matrix(*os, orbits[i]);
    }
    return 0;
}

int run_enumerate(const std::string& universe_path, const std::string& lambda_path, int n,
                  int orbit_index, int p, const std::vector<std::string>& props,
                  const std::string& require_path, const std::string& forbid_path,
                  const std::string& out_path, const CommonOpts& common) {
    plseeds::SearchJob job;
    if (!universe_path.empty()) {
        const auto U = load_first_complex(universe_path, /*embedded=*/true);
        job.m = U.m;
        job.n = U.n;
        job.facets = U.facets;
    } else if (!lambda_path.empty()) {
        const auto mat = plseeds::read_matrix_file(lambda_path);
        const auto* lam = std::get_if<plseeds::CharMatrixZ2>(&mat);
        if (!lam) throw plseeds::format_error("--lambda expects a Z2 matrix");
        const auto matroid = plseeds::binary_matroid(*lam);
        job.m = matroid.m;
        job.n = matroid.n;
        job.facets = matroid.facets;
    } else if (orbit_index >= 0) {
        const auto orbits = plseeds::idcm_orbits(n, p);
        if (orbit_index >= static_cast<int>(orbits.size()))
            throw plseeds::format_error("orbit index out of range (have " +
                                        std::to_string(orbits.size()) + ")");
        job.m = n + p;
        job.n = n;
        job.facets = plseeds::matroid_universe(orbits[static_cast<std::size_t>(orbit_index)]);
    } else {
        throw plseeds::format_error("enumerate needs a universe file, --lambda, or --n/--orbit");
    }

    const auto A = plseeds::incidence_matrix(job.facets);
    job.basis = plseeds::convenient_basis(plseeds::kernel_basis(A), A);

    if (!require_path.empty() || !forbid_path.empty()) {
        std::vector<int> required, forbidden;
        if (!require_path.empty()) required = facet_indices(job.facets, require_path, true);
        if (!forbid_path.empty()) forbidden = facet_indices(job.facets, forbid_path, false);
        auto pinned = plseeds::apply_link_constraints(job.basis, required, forbidden);
        if (!pinned) {
            std::cerr << "infeasible constraint system\n";
            return kExitInfeasible;
        }
        job.basis = std::move(*pinned);
    }
    for (const std::string& prop : props) {
        if (prop == "ubt")
            job.properties.push_back(
                plseeds::ubt_property(job.n, static_cast<int>(job.facets.size())));
        else
            throw plseeds::format_error("unknown property '" + prop + "' (try: ubt)");
    }
    job.threads = common.threads;
    job.candidate_cap = common.cap_bits >= 64 ? UINT64_MAX : (std::uint64_t{1} << common.cap_bits);
    if (common.progress)
        job.progress = [](long long done, long long total) {
            if (done % 64 == 0 || done == total)
                std::cerr << "\r" << done << "/" << total << std::flush;
        };

    const auto found = plseeds::enumerate_wpm(job);
    if (common.progress) std::cerr << "\n";
    std::cout << "universe facets: " << job.facets.size() << "\n";
    std::cout << "kernel dimension: " << job.basis.s() << "\n";
    std::cout << "combination space: " << plseeds::combination_space(job.basis).size_saturated()
              << "\n";
    std::cout << "weak pseudo-manifolds: " << found.size() << "\n";
    if (!out_path.empty()) plseeds::write_complex_file(out_path, found);
    return 0;
}

int run_pipeline(int n, const std::string& db_dir, const std::string& out_path,
                 const CommonOpts& common) {
    plseeds::SeedDatabase db;
    namespace fs = std::filesystem;
    if (!db_dir.empty() && fs::exists(fs::path(db_dir) / "index.txt"))
        db = plseeds::SeedDatabase::load(db_dir);

    plseeds::PipelineOptions opt;
    opt.threads = common.threads;
    opt.candidate_cap = common.cap_bits >= 64 ? UINT64_MAX : (std::uint64_t{1} << common.cap_bits);
    if (common.progress) opt.log = [](const std::string& s) { std::cerr << s << "\n"; };

    const auto res = plseeds::pipeline(n, db, opt);
    std::cout << "COUNTS line7=" << res.line7 << " line13=" << res.line13
              << " line15=" << res.line15 << " line19=" << res.line19 << "\n";
    std::cout << "seeds (with suspension completion): " << res.seeds.size() << "\n";
    if (!db_dir.empty()) db.save(db_dir);
    if (!out_path.empty()) plseeds::write_complex_file(out_path, res.seeds);
    return 0;
}

int run_verify(const std::string& suite, const CommonOpts& common) {
    using namespace plseeds;
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    if (suite == "all" || suite == "wpm") {
        // brute force over every facet subset vs the kernel-based search
        for (auto [m, n] : {std::pair{4, 2}, {5, 2}, {4, 3}, {5, 3}, {6, 5}}) {
            const auto universe = all_subsets_universe(m, n);
            long long brute = 0;
            for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << universe.size()); ++pick) {
                std::vector<VertexSet> fs;
                for (std::size_t j = 0; j < universe.size(); ++j)
                    if ((pick >> j) & 1) fs.push_back(universe[j]);
                if (is_weak_pseudomanifold_direct(PureComplex(m, n, fs, true))) ++brute;
            }
            SearchJob job;
            job.m = m;
            job.n = n;
            job.facets = universe;
            const auto A = incidence_matrix(universe);
            job.basis = convenient_basis(kernel_basis(A), A);
            job.threads = common.threads;
            const auto fast = enumerate_wpm(job);
            check("wpm oracle m=" + std::to_string(m) + " n=" + std::to_string(n) + " (" +
                      std::to_string(brute) + ")",
                  static_cast<long long>(fast.size()) == brute);
        }
    }
    if (suite == "all" || suite == "cyclic") {
        bool ok = true;
        for (int n = 2; n <= 11; ++n)
            if (cyclic_facet_bound(n) != cyclic_facet_count(n, n + 4)) ok = false;
        check("cyclic polytope facet formula vs Gale evenness, n=2..11", ok);
        check("cyclic n=4 has 20 facets", cyclic_facet_count(4, 8) == 20);
    }
    if (suite == "all" || suite == "homology") {
        check("boundary of 4-simplex is a homology 3-sphere",
              betti_z2(simplex_boundary(4)) == std::vector<long long>({1, 0, 0, 1}));
        check("6-vertex projective plane has Betti (1,1,1)",
              betti_z2(rp2_six()) == std::vector<long long>({1, 1, 1}));
        check("7-vertex torus has Betti (1,2,1)",
              betti_z2(torus_seven()) == std::vector<long long>({1, 2, 1}));
        check("7-vertex torus is a weak pseudo-manifold",
              is_weak_pseudomanifold_direct(torus_seven()));
    }
    if (suite == "all" || suite == "iso") {
        std::mt19937 rng(20240811);
        bool agree = true;
        for (int trial = 0; trial < 60 && agree; ++trial) {
            const int m = 4 + static_cast<int>(rng() % 3);
            const auto universe = all_subsets_universe(m, 3);
            auto random_complex = [&]() {
                std::vector<VertexSet> fs;
                while (fs.empty())
                    for (auto f : universe)
                        if (rng() % 3 == 0) fs.push_back(f);
                return PureComplex(m, 3, fs, true);
            };
            PureComplex K = random_complex();
            PureComplex L = random_complex();
            if (trial % 2 == 0) {
                std::vector<int> perm(static_cast<std::size_t>(m) + 1);
                for (int v = 1; v <= m; ++v) perm[static_cast<std::size_t>(v)] = v;
                std::shuffle(perm.begin() + 1, perm.end(), rng);
                L = PureComplex(m, 3, K.relabeled(perm).facets, true);
            }
            if (are_isomorphic(K, L).has_value() != brute_force_isomorphic(K, L)) agree = false;
        }
        check("isomorphism agrees with the all-permutations oracle", agree);
    }
    return failures == 0 ? 0 : kExitFailure;
}

int run_analyze(const std::string& complex_path, const std::string& lambda_path,
                const std::string& db_dir) {
    using namespace plseeds;
    const PureComplex K = load_first_complex(complex_path);
    const auto mnfs = minimal_nonfaces(K);

    std::cout << "m=" << K.m << " n=" << K.n << " dim=" << K.dim() << " Pic=" << picard(K)
              << " facets=" << K.facet_count() << "\n";
    std::cout << "f-vector:";
    for (long long f : f_vector(K)) std::cout << ' ' << f;
    std::cout << "\n";
    std::cout << "weak pseudo-manifold: " << (is_weak_pseudomanifold_direct(K) ? "yes" : "no")
              << "\n";
    std::cout << "minimal non-faces (" << mnfs.size() << "):";
    for (VertexSet s : mnfs) std::cout << " {" << facet_string(s) << "}";
    std::cout << "\n";
    const auto seq = color_sequences(K, mnfs);
    std::cout << "color sequences:";
    for (int v = 1; v <= K.m; ++v) {
        std::cout << " " << v << ":(";
        for (std::size_t i = 0; i < seq[static_cast<std::size_t>(v)].size(); ++i)
            std::cout << (i ? "," : "") << seq[static_cast<std::size_t>(v)][i];
        std::cout << ")";
    }
    std::cout << "\n";
    std::cout << "Betti (mod 2):";
    for (long long b : betti_z2(K)) std::cout << ' ' << b;
    std::cout << "\n";
    std::cout << "seed: " << (is_seed(K) ? "yes" : "no") << "\n";
    if (auto susp = is_suspension(K)) {
        std::cout << "suspension: yes, poles {" << susp->first.first << "," << susp->first.second
                  << "}, base has " << susp->second.facet_count() << " facets\n";
    } else {
        std::cout << "suspension: no\n";
    }
    const int p = picard(K);
    if (p >= 1 && p <= 8) {
        const auto dcm = supports_dcm(K, p, false);
        const auto idcm = supports_dcm(K, p, true);
        std::cout << "DCM: " << (dcm ? "yes" : "no") << ", IDCM: " << (idcm ? "yes" : "no") << "\n";
        if (dcm && !lambda_path.empty()) {
            // fall through; analysis of the supplied map below
        }
        if (dcm) {
            const auto lam2 = charmap_of_dcm(*dcm);
            if (auto lift = lift_to_integer(lam2, K)) {
                std::cout << "integer lift of a supporting mod-2 map: found, nonsingular="
                          << (is_nonsingular_z(*lift, K) ? "yes" : "no") << "\n";
            } else {
                std::cout << "integer lift of a supporting mod-2 map: none under {-1,0,1}\n";
            }
        }
    }
    const auto parts = mnf_vertex_partitions(K);
    std::cout << "MNF vertex-partitions: " << parts.size() << "\n";
    for (const auto& part : parts) {
        std::cout << "  ";
        for (VertexSet s : part) std::cout << "{" << facet_string(s) << "} ";
        std::cout << "\n";
    }
    if (!lambda_path.empty()) {
        const auto mat = read_matrix_file(lambda_path);
        if (const auto* lamz = std::get_if<CharMatrixZ>(&mat)) {
            std::cout << "supplied integer map: nonsingular="
                      << (is_nonsingular_z(*lamz, K) ? "yes" : "no") << "\n";
            const auto zs = zero_sum_collections(K, *lamz);
            std::cout << "zero-sum collections: " << zs.size() << ":";
            for (const auto& pc : zs) std::cout << " {" << facet_string(pc.mnf) << "}";
            std::cout << "\n";
            const auto ineq = degree_inequality(K, *lamz);
            std::cout << "degree inequality: " << ineq.lhs << " <= " << ineq.rhs
                      << (ineq.tight ? " (tight)" : "") << "\n";
            if (auto op = optimal_partition(K, *lamz)) {
                std::cout << "optimal partition:";
                for (VertexSet s : *op) std::cout << " {" << facet_string(s) << "}";
                std::cout << "\n";
            } else {
                std::cout << "optimal partition: none\n";
            }
        } else if (const auto* lam2 = std::get_if<CharMatrixZ2>(&mat)) {
            std::cout << "supplied mod-2 map: nonsingular="
                      << (is_nonsingular_z2(*lam2, K) ? "yes" : "no") << "\n";
            const auto weak = weakly_optimal_partitions(K, *lam2);
            std::cout << "weakly optimal partitions: " << weak.size() << "\n";
        }
    }
    if (!db_dir.empty()) {
        const auto db = SeedDatabase::load(db_dir);
        std::cout << "PL sphere: " << (is_pl_sphere(K, db) ? "yes" : "no") << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"enumeration of weak pseudo-manifolds and classification of "
                 "toric-colorable PL-sphere seeds"};
    app.require_subcommand(1);

    int n = 0, p = 4, orbit_index = -1;
    std::string out_path, universe_path, lambda_path, require_path, forbid_path, db_dir;
    std::string suite = "all", complex_path;
    CommonOpts common;

    auto* orbits_cmd = app.add_subcommand("orbits", "list IDCM orbit representatives");
    orbits_cmd->add_option("--n", n, "dimension parameter")->required();
    orbits_cmd->add_option("--p", p, "Picard number (default 4)");
    orbits_cmd->add_option("--out", out_path, "write representatives to a .mat file");

    auto* enum_cmd = app.add_subcommand("enumerate", "enumerate weak pseudo-manifolds");
    enum_cmd->add_option("universe", universe_path, ".cplx file whose facets form the universe");
    enum_cmd->add_option("--lambda", lambda_path, "Z2 matrix; universe = its binary matroid");
    enum_cmd->add_option("--n", n, "dimension parameter for --orbit");
    enum_cmd->add_option("--p", p, "Picard number (default 4)");
    enum_cmd->add_option("--orbit", orbit_index, "orbit index into the representative list");
    std::vector<std::string> props;
    enum_cmd->add_option("--props", props, "affine property filters to attach (ubt)");
    enum_cmd->add_option("--require", require_path, ".cplx of facets forced into every output");
    enum_cmd->add_option("--forbid", forbid_path, ".cplx of facets excluded from every output");
    enum_cmd->add_option("--out", out_path, "write the output complexes to a .cplx file");
    add_common(enum_cmd, common);

    auto* pipe_cmd = app.add_subcommand("pipeline", "Picard-4 seed pipeline for one dimension");
    pipe_cmd->add_option("--n", n, "dimension parameter")->required();
    pipe_cmd->add_option("--seed-db", db_dir, "seed database directory (read and updated)");
    pipe_cmd->add_option("--out", out_path, "write the final seeds to a .cplx file");
    add_common(pipe_cmd, common);

    auto* verify_cmd = app.add_subcommand("verify", "run brute-force oracle suites");
    verify_cmd->add_option("--suite", suite, "all|wpm|cyclic|homology|iso");
    add_common(verify_cmd, common);

    auto* analyze_cmd = app.add_subcommand("analyze", "report the invariants of a complex");
    analyze_cmd->add_option("complex", complex_path, ".cplx file")->required();
    analyze_cmd->add_option("--lambda", lambda_path, ".mat characteristic matrix");
    analyze_cmd->add_option("--seed-db", db_dir, "seed database for the PL sphere check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (orbits_cmd->parsed()) return run_orbits(n, p, out_path);
        if (enum_cmd->parsed())
            return run_enumerate(universe_path, lambda_path, n, orbit_index, p, props,
                                 require_path, forbid_path, out_path, common);
        if (pipe_cmd->parsed()) return run_pipeline(n, db_dir, out_path, common);
        if (verify_cmd->parsed()) return run_verify(suite, common);
        if (analyze_cmd->parsed()) return run_analyze(complex_path, lambda_path, db_dir);
    } catch (const plseeds::format_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const plseeds::db_stratum_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMissingStratum;
    } catch (const plseeds::cap_exceeded_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return 0;
}
