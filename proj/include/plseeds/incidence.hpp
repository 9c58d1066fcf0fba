#ifndef PLSEEDS_INCIDENCE_HPP
#define PLSEEDS_INCIDENCE_HPP

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "plseeds/bitmatrix.hpp"
#include "plseeds/complex.hpp"

namespace plseeds {

/**
 * Ridge-facet incidence of a facet universe, stored column-sparse: column j
 * lists the ridge indices of facet j.  Ridges are indexed in canonical
 * (ascending bitmask) order.
 */
struct IncidenceMatrix {
    int N = 0;  // ridges
    int M = 0;  // facets
    int n = 0;  // facet size
    std::vector<VertexSet> ridges;
    std::vector<std::vector<int>> cols;     // per facet: its n ridge indices, sorted
    std::vector<std::vector<int>> parents;  // per ridge: facet indices containing it

    BitMatrix to_bitmatrix() const {
        BitMatrix a(N, M);
        for (int j = 0; j < M; ++j)
            for (int r : cols[static_cast<std::size_t>(j)]) a.set(r, j, true);
        return a;
    }
};

inline IncidenceMatrix incidence_matrix(const std::vector<VertexSet>& facets) {
    if (facets.empty()) throw purity_error("incidence of an empty facet set");
    IncidenceMatrix A;
    A.M = static_cast<int>(facets.size());
    A.n = facets.front().count();
    A.ridges = ridges_of(facets);  // also validates purity
    A.N = static_cast<int>(A.ridges.size());
    std::unordered_map<VertexSet, int> index;
    index.reserve(A.ridges.size() * 2);
    for (int i = 0; i < A.N; ++i) index.emplace(A.ridges[static_cast<std::size_t>(i)], i);

    A.cols.resize(static_cast<std::size_t>(A.M));
    A.parents.resize(static_cast<std::size_t>(A.N));
    for (int j = 0; j < A.M; ++j) {
        const VertexSet f = facets[static_cast<std::size_t>(j)];
        auto& col = A.cols[static_cast<std::size_t>(j)];
        f.for_each([&](int v) { col.push_back(index.at(f.without(v))); });
        std::sort(col.begin(), col.end());
        for (int r : col) A.parents[static_cast<std::size_t>(r)].push_back(j);
    }
    return A;
}

/// Raw GF(2) kernel of the incidence matrix; columns are generators, each an
/// M-bit characteristic vector over the facet universe.
inline std::vector<BitVec> kernel_basis(const IncidenceMatrix& A) {
    return gf2_kernel(A.to_bitmatrix());
}

} // namespace plseeds

#endif
