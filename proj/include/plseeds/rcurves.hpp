#ifndef PLSEEDS_RCURVES_HPP
#define PLSEEDS_RCURVES_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "plseeds/charmap.hpp"
#include "plseeds/complex.hpp"

namespace plseeds {

/// A minimal non-face together with the image vectors it picks out of a
/// characteristic map.
struct PrimitiveCollection {
    VertexSet mnf;
    std::vector<std::vector<int>> images;  // one integer vector per vertex
    int degree() const { return mnf.count(); }
};

/// All minimal non-faces whose image vectors sum to zero over the
/// integers.  Distinct zero-sum collections are necessarily disjoint; a
/// violation means the inputs break the non-singularity precondition.
inline std::vector<PrimitiveCollection> zero_sum_collections(const PureComplex& K,
                                                             const CharMatrixZ& lam) {
    std::vector<PrimitiveCollection> out;
    for (VertexSet s : minimal_nonfaces(K)) {
        std::vector<int> sum(static_cast<std::size_t>(lam.n), 0);
        PrimitiveCollection pc;
        pc.mnf = s;
        s.for_each([&](int v) {
            std::vector<int> img;
            for (int r = 0; r < lam.n; ++r) {
                img.push_back(lam.get(r, v - 1));
                sum[static_cast<std::size_t>(r)] += lam.get(r, v - 1);
            }
            pc.images.push_back(std::move(img));
        });
        bool zero = true;
        for (int c : sum)
            if (c != 0) { zero = false; break; }
        if (zero) out.push_back(std::move(pc));
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (out[i].mnf.intersects(out[j].mnf))
                throw std::logic_error("zero-sum collections are not pairwise disjoint");
    return out;
}

struct DegreeInequality {
    long long lhs = 0;  // sum of the zero-sum collection cardinalities
    long long rhs = 0;  // n + p = m
    bool tight = false;
};

/// The minimal-component degree bound: the disjoint zero-sum collections
/// can cover at most all m vertices, with equality exactly when they
/// partition the vertex set.
inline DegreeInequality degree_inequality(const PureComplex& K, const CharMatrixZ& lam) {
    DegreeInequality d;
    d.rhs = K.m;
    for (const auto& pc : zero_sum_collections(K, lam)) d.lhs += pc.degree();
    d.tight = (d.lhs == d.rhs);
    return d;
}

using PartitionCandidate = std::vector<VertexSet>;

namespace detail {

inline void exact_cover(const std::vector<VertexSet>& parts, VertexSet uncovered,
                        PartitionCandidate& current, std::vector<PartitionCandidate>& out,
                        bool first_only) {
    if (uncovered.empty()) {
        out.push_back(current);
        return;
    }
    if (first_only && !out.empty()) return;
    const int v = uncovered.min_vertex();
    for (VertexSet p : parts) {
        if (!p.contains(v) || !p.subset_of(uncovered)) continue;
        current.push_back(p);
        exact_cover(parts, uncovered - p, current, out, first_only);
        current.pop_back();
        if (first_only && !out.empty()) return;
    }
}

} // namespace detail

/// All partitions of the vertex set into pairwise-disjoint minimal
/// non-faces (an exact cover search over the MNF list).
inline std::vector<PartitionCandidate> mnf_vertex_partitions(const PureComplex& K) {
    std::vector<PartitionCandidate> out;
    PartitionCandidate cur;
    detail::exact_cover(minimal_nonfaces(K), VertexSet::full(K.m), cur, out, false);
    return out;
}

/// A partition of [m] into minimal non-faces whose image vectors each sum
/// to zero, or absence.
inline std::optional<PartitionCandidate> optimal_partition(const PureComplex& K,
                                                           const CharMatrixZ& lam) {
    std::vector<VertexSet> zero_parts;
    for (const auto& pc : zero_sum_collections(K, lam)) zero_parts.push_back(pc.mnf);
    std::vector<PartitionCandidate> out;
    PartitionCandidate cur;
    detail::exact_cover(zero_parts, VertexSet::full(K.m), cur, out, true);
    if (out.empty()) return std::nullopt;
    return out.front();
}

/// All MNF vertex-partitions whose parts sum to zero mod 2 under a mod 2
/// characteristic map.
inline std::vector<PartitionCandidate> weakly_optimal_partitions(const PureComplex& K,
                                                                 const CharMatrixZ2& lam) {
    std::vector<VertexSet> zero_parts;
    for (VertexSet s : minimal_nonfaces(K)) {
        std::uint32_t sum = 0;
        s.for_each([&](int v) { sum ^= lam.cols[static_cast<std::size_t>(v - 1)]; });
        if (sum == 0) zero_parts.push_back(s);
    }
    std::vector<PartitionCandidate> out;
    PartitionCandidate cur;
    detail::exact_cover(zero_parts, VertexSet::full(K.m), cur, out, false);
    return out;
}

} // namespace plseeds

#endif
