#ifndef PLSEEDS_VERTEX_SET_HPP
#define PLSEEDS_VERTEX_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace plseeds {

/**
 * A subset of the vertex labels 1..m, packed into one machine word.
 *
 * Bit i of `bits` encodes vertex i (labels are 1-based, so bit 0 is never
 * set).  This caps m at 63, far above the m <= 15 the Picard-4 pipeline
 * needs, and makes faces, facets and ridges cheap value types.
 */
struct VertexSet {
    std::uint64_t bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t raw) : bits(raw) {}

    VertexSet(std::initializer_list<int> labels) {
        for (int v : labels) bits |= mask(v);
    }

    static constexpr std::uint64_t mask(int v) { return std::uint64_t{1} << v; }

    // 1..m inclusive
    static constexpr VertexSet full(int m) {
        return VertexSet(((std::uint64_t{1} << m) - 1) << 1);
    }

    constexpr bool contains(int v) const { return bits & mask(v); }
    constexpr bool empty() const { return bits == 0; }
    constexpr int count() const { return std::popcount(bits); }
    constexpr int min_vertex() const { return std::countr_zero(bits); }
    constexpr int max_vertex() const { return 63 - std::countl_zero(bits); }

    constexpr VertexSet with(int v) const { return VertexSet(bits | mask(v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits & ~mask(v)); }

    constexpr bool subset_of(VertexSet other) const { return (bits & ~other.bits) == 0; }
    constexpr bool intersects(VertexSet other) const { return bits & other.bits; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits | o.bits); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits & o.bits); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits & ~o.bits); }
    constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits ^ o.bits); }

    // Canonical order: ascending bitmask value.
    constexpr auto operator<=>(const VertexSet&) const = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::uint64_t b = bits; b; b &= b - 1) f(std::countr_zero(b));
    }
};

} // namespace plseeds

template <>
struct std::hash<plseeds::VertexSet> {
    std::size_t operator()(plseeds::VertexSet s) const noexcept {
        return std::hash<std::uint64_t>{}(s.bits);
    }
};

#endif
