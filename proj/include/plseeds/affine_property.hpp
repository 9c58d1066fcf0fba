#ifndef PLSEEDS_AFFINE_PROPERTY_HPP
#define PLSEEDS_AFFINE_PROPERTY_HPP

#include <cstdint>
#include <vector>

#include "plseeds/bitmatrix.hpp"

namespace plseeds {

/**
 * An affine filter g(K) = constant + sum_j weights[j] * k_j on the
 * characteristic vector of a complex over a facet universe; a complex
 * satisfies the property when g(K) > 0.
 */
struct AffineProperty {
    std::vector<std::int64_t> weights;
    std::int64_t constant = 0;

    std::int64_t evaluate(const BitVec& K) const {
        std::int64_t acc = constant;
        K.for_each_set([&](int j) { acc += weights[static_cast<std::size_t>(j)]; });
        return acc;
    }

    /// True when every weight is -1, so g(K) > 0 is just a facet-count cap.
    bool is_count_cap() const {
        for (std::int64_t w : weights)
            if (w != -1) return false;
        return true;
    }
};

/// Facet count of the cyclic polytope C^n(n+4) in closed form.
inline std::int64_t cyclic_facet_bound(int n) {
    auto binom = [](std::int64_t top, std::int64_t k) {
        if (top < k) return std::int64_t{0};
        std::int64_t r = 1;
        for (std::int64_t i = 1; i <= k; ++i) r = r * (top - k + i) / i;
        return r;
    };
    const std::int64_t ceil_half = (n + 1) / 2;
    const std::int64_t floor_half = n / 2;
    return binom(n + 4 - ceil_half, 4) + binom(n + 3 - floor_half, 4);
}

/// Upper bound theorem filter: a PL sphere of Picard number 4 has at most
/// as many facets as C^n(n+4).
inline AffineProperty ubt_property(int n, int universe_size) {
    AffineProperty g;
    g.weights.assign(static_cast<std::size_t>(universe_size), -1);
    g.constant = cyclic_facet_bound(n) + 1;
    return g;
}

} // namespace plseeds

#endif
