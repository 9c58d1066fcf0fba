#ifndef PLSEEDS_CATALOG_HPP
#define PLSEEDS_CATALOG_HPP

#include <vector>

#include "plseeds/complex.hpp"

namespace plseeds {

/// Boundary of the (k)-simplex: all k-subsets of [k+1]; an (k-1)-sphere.
inline PureComplex simplex_boundary(int k) {
    std::vector<VertexSet> out;
    const VertexSet full = VertexSet::full(k + 1);
    full.for_each([&](int v) { out.push_back(full.without(v)); });
    return PureComplex(k + 1, k, std::move(out));
}

/// Boundary of an m-gon: the cycle 1-2-...-m-1.
inline PureComplex cycle_complex(int m) {
    std::vector<VertexSet> out;
    for (int i = 1; i < m; ++i) out.push_back(VertexSet{i, i + 1});
    out.push_back(VertexSet{m, 1});
    return PureComplex(m, 2, std::move(out));
}

inline PureComplex s0() { return PureComplex(2, 1, {VertexSet{1}, VertexSet{2}}); }
inline PureComplex square() { return cycle_complex(4); }
inline PureComplex pentagon() { return cycle_complex(5); }
inline PureComplex hexagon() { return cycle_complex(6); }

/**
 * Boundary of the d-dimensional cross polytope on 2d vertices: antipodal
 * pairs are (i, i+d), facets pick one vertex from each pair.  d=2 is the
 * square (up to relabeling), d=3 the octahedron.
 */
inline PureComplex cross_polytope_boundary(int d) {
    std::vector<VertexSet> out;
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << d); ++choice) {
        VertexSet f;
        for (int i = 0; i < d; ++i)
            f = f.with((choice >> i) & 1 ? i + 1 + d : i + 1);
        out.push_back(f);
    }
    return PureComplex(2 * d, d, std::move(out));
}

inline PureComplex octahedron() { return cross_polytope_boundary(3); }

/// Gale evenness: S is a facet of C^n(N) iff every maximal run of S between
/// two non-elements has even length.
inline bool gale_even(VertexSet s, int n, int N) {
    if (s.count() != n) return false;
    for (int i = 1; i <= N; ++i) {
        if (s.contains(i)) continue;
        for (int j = i + 1; j <= N; ++j) {
            if (s.contains(j)) continue;
            int between = 0;
            for (int k = i + 1; k < j; ++k)
                if (s.contains(k)) ++between;
            if (between & 1) return false;
        }
    }
    return true;
}

/// Boundary complex of the cyclic polytope C^n(N) via the Gale evenness
/// condition on the moment curve ordering.
inline PureComplex cyclic_polytope_boundary(int n, int N) {
    std::vector<VertexSet> out;
    // iterate n-subsets of [N]
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        VertexSet s;
        for (int v : idx) s = s.with(v);
        if (gale_even(s, n, N)) out.push_back(s);
        int pos = n - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == N - (n - 1 - pos)) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < n; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    return PureComplex(N, n, std::move(out));
}

/// Facet count of the cyclic polytope C^n(N), counted by Gale evenness.
inline long long cyclic_facet_count(int n, int N) {
    return cyclic_polytope_boundary(n, N).facet_count();
}

/// Minimal 6-vertex triangulation of the real projective plane.
inline PureComplex rp2_six() {
    std::vector<VertexSet> out = {
        {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
        {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}};
    return PureComplex(6, 3, std::move(out));
}

/// The 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline PureComplex torus_seven() {
    std::vector<VertexSet> out;
    auto wrap = [](int v) { return (v - 1) % 7 + 1; };
    for (int i = 1; i <= 7; ++i) {
        out.push_back(VertexSet{wrap(i), wrap(i + 1), wrap(i + 3)});
        out.push_back(VertexSet{wrap(i), wrap(i + 2), wrap(i + 3)});
    }
    return PureComplex(7, 3, std::move(out));
}

/// All n-subsets of [m] as one pure "complete" facet universe.
inline std::vector<VertexSet> all_subsets_universe(int m, int n) {
    std::vector<VertexSet> out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        VertexSet cand(s << 1);
        if (cand.count() == n) out.push_back(cand);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace plseeds

#endif
