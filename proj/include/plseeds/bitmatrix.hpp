#ifndef PLSEEDS_BITMATRIX_HPP
#define PLSEEDS_BITMATRIX_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace plseeds {

/// A bit vector of fixed length, word-packed.  Used both for rows of GF(2)
/// matrices and for characteristic vectors over a facet universe.
struct BitVec {
    std::vector<std::uint64_t> words;
    int size = 0;

    BitVec() = default;
    explicit BitVec(int n) : words(static_cast<std::size_t>((n + 63) / 64), 0), size(n) {}

    bool test(int i) const { return (words[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1; }
    void set(int i) { words[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void flip(int i) { words[static_cast<std::size_t>(i) >> 6] ^= std::uint64_t{1} << (i & 63); }

    void operator^=(const BitVec& o) {
        for (std::size_t w = 0; w < words.size(); ++w) words[w] ^= o.words[w];
    }

    bool any() const {
        for (std::uint64_t w : words)
            if (w) return true;
        return false;
    }

    int popcount() const {
        int c = 0;
        for (std::uint64_t w : words) c += std::popcount(w);
        return c;
    }

    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t wi = 0; wi < words.size(); ++wi)
            for (std::uint64_t w = words[wi]; w; w &= w - 1)
                f(static_cast<int>(wi * 64) + std::countr_zero(w));
    }

    bool operator==(const BitVec& o) const { return size == o.size && words == o.words; }
};

/// Dense GF(2) matrix, row-major words.
struct BitMatrix {
    int rows = 0, cols = 0;
    int wpr = 0;
    std::vector<std::uint64_t> data;

    BitMatrix() = default;
    BitMatrix(int r, int c)
        : rows(r), cols(c), wpr((c + 63) / 64),
          data(static_cast<std::size_t>(r) * static_cast<std::size_t>(wpr), 0) {}

    std::uint64_t* row(int r) { return data.data() + static_cast<std::size_t>(r) * wpr; }
    const std::uint64_t* row(int r) const { return data.data() + static_cast<std::size_t>(r) * wpr; }

    bool get(int r, int c) const { return (row(r)[c >> 6] >> (c & 63)) & 1; }
    void set(int r, int c, bool v) {
        if (v)
            row(r)[c >> 6] |= std::uint64_t{1} << (c & 63);
        else
            row(r)[c >> 6] &= ~(std::uint64_t{1} << (c & 63));
    }

    void xor_rows(int dst, int src) {
        auto* d = row(dst);
        const auto* s = row(src);
        for (int w = 0; w < wpr; ++w) d[w] ^= s[w];
    }

    void swap_rows(int a, int b) {
        if (a == b) return;
        auto* ra = row(a);
        auto* rb = row(b);
        for (int w = 0; w < wpr; ++w) std::swap(ra[w], rb[w]);
    }

    BitVec row_vec(int r) const {
        BitVec v(cols);
        const auto* src = row(r);
        for (int w = 0; w < wpr; ++w) v.words[static_cast<std::size_t>(w)] = src[w];
        return v;
    }

    std::string dump() const {
        std::string s;
        s.reserve(static_cast<std::size_t>(rows) * (static_cast<std::size_t>(cols) + 1));
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) s += get(r, c) ? '1' : '0';
            s += '\n';
        }
        return s;
    }
};

/// Row-reduction rank; the input is taken by value and destroyed.
inline int gf2_rank(BitMatrix a) {
    int rank = 0;
    for (int c = 0; c < a.cols && rank < a.rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < a.rows; ++r)
            if (a.get(r, c)) { pivot = r; break; }
        if (pivot < 0) continue;
        a.swap_rows(rank, pivot);
        for (int r = 0; r < a.rows; ++r)
            if (r != rank && a.get(r, c)) a.xor_rows(r, rank);
        ++rank;
    }
    return rank;
}

/**
 * Basis of the right null space {x : Ax = 0} of an r x c matrix.
 * Returns s = c - rank(A) vectors of length c, one per free column,
 * in ascending free-column order.
 */
inline std::vector<BitVec> gf2_kernel(BitMatrix a) {
    const int c = a.cols;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < c && rank < a.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < a.rows; ++r)
            if (a.get(r, col)) { pivot = r; break; }
        if (pivot < 0) continue;
        a.swap_rows(rank, pivot);
        for (int r = 0; r < a.rows; ++r)
            if (r != rank && a.get(r, col)) a.xor_rows(r, rank);
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(c), false);
    for (int col : pivot_col) is_pivot[static_cast<std::size_t>(col)] = true;

    std::vector<BitVec> basis;
    for (int fc = 0; fc < c; ++fc) {
        if (is_pivot[static_cast<std::size_t>(fc)]) continue;
        BitVec v(c);
        v.set(fc);
        for (int r = 0; r < rank; ++r)
            if (a.get(r, fc)) v.set(pivot_col[static_cast<std::size_t>(r)]);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace plseeds

#endif
