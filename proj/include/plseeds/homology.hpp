#ifndef PLSEEDS_HOMOLOGY_HPP
#define PLSEEDS_HOMOLOGY_HPP

#include <unordered_map>
#include <vector>

#include "plseeds/bitmatrix.hpp"
#include "plseeds/complex.hpp"

namespace plseeds {

/**
 * Unreduced mod 2 Betti numbers b_0 .. b_{n-1} via ranks of the boundary
 * matrices: b_k = f_k - rank d_k - rank d_{k+1} with d_0 = 0.
 */
inline std::vector<long long> betti_z2(const PureComplex& K) {
    const auto levels = faces_by_card(K);  // index = cardinality
    std::vector<std::unordered_map<VertexSet, int>> index(levels.size());
    for (std::size_t k = 0; k < levels.size(); ++k)
        for (std::size_t i = 0; i < levels[k].size(); ++i)
            index[k].emplace(levels[k][i], static_cast<int>(i));

    // rank of d_k: faces of k+1 vertices -> faces of k vertices
    std::vector<int> boundary_rank(static_cast<std::size_t>(K.n) + 2, 0);
    for (int card = 2; card <= K.n; ++card) {
        const auto& src = levels[static_cast<std::size_t>(card)];
        const auto& dst_index = index[static_cast<std::size_t>(card - 1)];
        if (src.empty()) continue;
        BitMatrix d(static_cast<int>(dst_index.size()), static_cast<int>(src.size()));
        for (std::size_t j = 0; j < src.size(); ++j)
            src[j].for_each([&](int v) {
                d.set(dst_index.at(src[j].without(v)), static_cast<int>(j), true);
            });
        boundary_rank[static_cast<std::size_t>(card - 1)] = gf2_rank(std::move(d));
    }

    std::vector<long long> betti;
    for (int k = 0; k < K.n; ++k) {
        const long long fk = static_cast<long long>(levels[static_cast<std::size_t>(k + 1)].size());
        betti.push_back(fk - boundary_rank[static_cast<std::size_t>(k)] -
                        boundary_rank[static_cast<std::size_t>(k + 1)]);
    }
    return betti;
}

/// (1, 0, ..., 0, 1); for dimension 0 the sphere S^0 has b_0 = 2.
inline bool is_z2_homology_sphere(const PureComplex& K) {
    const auto b = betti_z2(K);
    if (K.n == 1) return b.size() == 1 && b[0] == 2;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const long long want = (i == 0 || i + 1 == b.size()) ? 1 : 0;
        if (b[i] != want) return false;
    }
    return true;
}

} // namespace plseeds

#endif
