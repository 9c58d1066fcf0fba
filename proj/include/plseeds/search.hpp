#ifndef PLSEEDS_SEARCH_HPP
#define PLSEEDS_SEARCH_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "plseeds/affine_property.hpp"
#include "plseeds/complex.hpp"
#include "plseeds/errors.hpp"
#include "plseeds/incidence.hpp"
#include "plseeds/kernel_basis.hpp"
#include "plseeds/parallel.hpp"

namespace plseeds {

/// Per-ridge facet counts of a candidate; evaluation stops early once any
/// count reaches 3, since the candidate can no longer be a weak
/// pseudo-manifold.
struct IncidenceCounts {
    std::vector<int> counts;
    bool aborted = false;
    int abort_ridge = -1;
};

inline IncidenceCounts evaluate_incidence(const BitVec& K, const IncidenceMatrix& A) {
    IncidenceCounts out;
    out.counts.assign(static_cast<std::size_t>(A.N), 0);
    bool stop = false;
    K.for_each_set([&](int j) {
        if (stop) return;
        for (int r : A.cols[static_cast<std::size_t>(j)]) {
            if (++out.counts[static_cast<std::size_t>(r)] >= 3) {
                out.aborted = true;
                out.abort_ridge = r;
                stop = true;
                return;
            }
        }
    });
    return out;
}

struct SearchJob {
    int m = 0;
    int n = 0;
    std::vector<VertexSet> facets;  // the universe, canonical order
    KernelBasis basis;
    std::vector<AffineProperty> properties;
    int threads = 1;
    std::uint64_t candidate_cap = std::uint64_t{1} << 48;
    std::function<void(long long done, long long total)> progress;  // outer items
};

/**
 * The enumerable combination space of a kernel basis: a forced prefix from
 * link constraints, one candidate list per induced block (at most two
 * generators each), and free singleton columns.
 */
struct CombinationSpace {
    struct BlockChoices {
        std::vector<std::vector<int>> candidates;  // generator index lists
    };
    std::vector<int> forced;  // generators present in every candidate
    std::vector<BlockChoices> blocks;

    /// Saturating product of the per-block candidate counts.
    std::uint64_t size_saturated() const {
        std::uint64_t total = 1;
        for (const auto& b : blocks) {
            const std::uint64_t c = b.candidates.size();
            if (total > UINT64_MAX / c) return UINT64_MAX;
            total *= c;
        }
        return total;
    }
};

inline CombinationSpace combination_space(const KernelBasis& kb) {
    CombinationSpace cs;
    for (int g = 0; g < kb.pinned_ones; ++g) cs.forced.push_back(g);
    const int first_free = kb.pinned_ones + kb.pinned_zeros;

    int covered = first_free;
    for (const KernelBasis::Block& b : kb.blocks) {
        CombinationSpace::BlockChoices bc;
        bc.candidates.push_back({});
        for (int i = 0; i < b.width; ++i) bc.candidates.push_back({b.offset + i});
        for (int i = 0; i < b.width; ++i)
            for (int j = i + 1; j < b.width; ++j)
                bc.candidates.push_back({b.offset + i, b.offset + j});
        cs.blocks.push_back(std::move(bc));
        covered = std::max(covered, b.offset + b.width);
    }
    for (int g = covered; g < kb.s(); ++g) {
        CombinationSpace::BlockChoices bc;
        bc.candidates.push_back({});
        bc.candidates.push_back({g});
        cs.blocks.push_back(std::move(bc));
    }
    return cs;
}

namespace detail {

struct PreparedBlock {
    std::vector<BitVec> deltas;  // XOR mask per candidate
};

// Checks all ridge counts of K via the sparse columns; true iff every
// touched ridge is covered exactly twice.
inline bool wpm_counts_ok(const BitVec& K, const IncidenceMatrix& A,
                          std::vector<std::uint8_t>& cnt, std::vector<int>& touched) {
    touched.clear();
    bool ok = true;
    K.for_each_set([&](int j) {
        if (!ok) return;
        for (int r : A.cols[static_cast<std::size_t>(j)]) {
            auto& c = cnt[static_cast<std::size_t>(r)];
            if (c == 0) touched.push_back(r);
            if (++c >= 3) { ok = false; return; }
        }
    });
    if (ok)
        for (int r : touched)
            if (cnt[static_cast<std::size_t>(r)] != 2) { ok = false; break; }
    for (int r : touched) cnt[static_cast<std::size_t>(r)] = 0;
    return ok;
}

} // namespace detail

/**
 * Enumerates every nonempty weak pseudo-manifold whose facets lie in the
 * job's universe and that satisfies all attached properties.  The output
 * is deduplicated and canonically ordered, and is identical for every
 * parallelism width.
 */
inline std::vector<PureComplex> enumerate_wpm(const SearchJob& job) {
    const IncidenceMatrix A = incidence_matrix(job.facets);
    const KernelBasis& kb = job.basis;
    const int M = A.M;

    CombinationSpace cs = combination_space(kb);
    const std::uint64_t space = cs.size_saturated();
    if (space > job.candidate_cap)
        throw cap_exceeded_error("combination space of " + std::to_string(space) +
                                 " candidates exceeds cap " + std::to_string(job.candidate_cap));

    BitVec base(M);
    for (int g : cs.forced) base ^= kb.gens[static_cast<std::size_t>(g)];

    // XOR mask per block candidate
    std::vector<detail::PreparedBlock> blocks;
    blocks.reserve(cs.blocks.size());
    for (const auto& bc : cs.blocks) {
        detail::PreparedBlock pb;
        for (const auto& cand : bc.candidates) {
            BitVec d(M);
            for (int g : cand) d ^= kb.gens[static_cast<std::size_t>(g)];
            pb.deltas.push_back(std::move(d));
        }
        blocks.push_back(std::move(pb));
    }
    // widest blocks outermost, so the outer product spreads evenly
    std::stable_sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
        return a.deltas.size() > b.deltas.size();
    });

    // split: outer product feeds the workers, inner product is the scan
    const int threads = std::max(1, job.threads);
    const std::uint64_t outer_target = std::max<std::uint64_t>(64, 8u * static_cast<unsigned>(threads));
    std::size_t outer_blocks = 0;
    std::uint64_t outer_size = 1;
    while (outer_blocks < blocks.size() && outer_size < outer_target)
        outer_size *= blocks[outer_blocks++].deltas.size();

    // facet-count shortcut when every property is a pure count cap
    std::int64_t count_cap = -1;
    bool caps_only = !job.properties.empty();
    for (const auto& g : job.properties) {
        if (!g.is_count_cap()) { caps_only = false; break; }
        const std::int64_t cap = g.constant - 1;
        count_cap = count_cap < 0 ? cap : std::min(count_cap, cap);
    }

    std::vector<std::vector<BitVec>> found(static_cast<std::size_t>(outer_size));
    std::atomic<long long> done{0};

    parallel_for_index(static_cast<long long>(outer_size), threads, [&](long long item) {
        BitVec K = base;
        std::uint64_t rest = static_cast<std::uint64_t>(item);
        for (std::size_t b = 0; b < outer_blocks; ++b) {
            const auto& pb = blocks[b];
            K ^= pb.deltas[static_cast<std::size_t>(rest % pb.deltas.size())];
            rest /= pb.deltas.size();
        }
        std::vector<std::uint8_t> cnt(static_cast<std::size_t>(A.N), 0);
        std::vector<int> touched;
        auto& bucket = found[static_cast<std::size_t>(item)];

        auto leaf = [&](const BitVec& cand) {
            if (!cand.any()) return;
            if (caps_only) {
                if (cand.popcount() > count_cap) return;
            } else {
                for (const auto& g : job.properties)
                    if (g.evaluate(cand) <= 0) return;
            }
            if (detail::wpm_counts_ok(cand, A, cnt, touched)) bucket.push_back(cand);
        };

        // iterative product over the inner blocks
        const std::size_t inner_count = blocks.size() - outer_blocks;
        if (inner_count == 0) {
            leaf(K);
        } else {
            std::vector<std::size_t> pos(inner_count, 0);
            std::vector<BitVec> stack(inner_count + 1);
            stack[0] = K;
            std::size_t level = 0;
            while (true) {
                if (level == inner_count) {
                    leaf(stack[level]);
                    // backtrack to the deepest level with candidates left
                    while (level > 0 && pos[level - 1] + 1 ==
                                            blocks[outer_blocks + level - 1].deltas.size())
                        --level;
                    if (level == 0) break;
                    ++pos[level - 1];
                    stack[level] = stack[level - 1];
                    stack[level] ^= blocks[outer_blocks + level - 1]
                                        .deltas[pos[level - 1]];
                    for (std::size_t l = level; l < inner_count; ++l) pos[l] = 0;
                    continue;
                }
                stack[level + 1] = stack[level];
                stack[level + 1] ^= blocks[outer_blocks + level].deltas[pos[level]];
                ++level;
            }
        }
        if (job.progress) job.progress(++done, static_cast<long long>(outer_size));
    });

    std::vector<PureComplex> out;
    for (auto& bucket : found)
        for (BitVec& K : bucket) {
            std::vector<VertexSet> fs;
            K.for_each_set([&](int j) { fs.push_back(job.facets[static_cast<std::size_t>(j)]); });
            out.emplace_back(job.m, job.n, std::move(fs), /*embedded=*/true);
        }
    std::sort(out.begin(), out.end(),
              [](const PureComplex& a, const PureComplex& b) { return a.facets < b.facets; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace plseeds

#endif
