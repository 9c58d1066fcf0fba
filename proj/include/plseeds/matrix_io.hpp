#ifndef PLSEEDS_MATRIX_IO_HPP
#define PLSEEDS_MATRIX_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>

#include "plseeds/charmap.hpp"
#include "plseeds/errors.hpp"

namespace plseeds {

// .mat format: header "rows cols ring" with ring in {Z2, Z}; one row per
// line, space-separated entries.

inline void write_matrix(std::ostream& os, const CharMatrixZ2& lam) {
    os << lam.n << ' ' << lam.m << " Z2\n";
    for (int r = 0; r < lam.n; ++r) {
        for (int c = 0; c < lam.m; ++c) os << (c ? " " : "") << (lam.get(r, c) ? 1 : 0);
        os << '\n';
    }
}

inline void write_matrix(std::ostream& os, const CharMatrixZ& lam) {
    os << lam.n << ' ' << lam.m << " Z\n";
    for (int r = 0; r < lam.n; ++r) {
        for (int c = 0; c < lam.m; ++c) os << (c ? " " : "") << lam.get(r, c);
        os << '\n';
    }
}

inline void write_matrix(std::ostream& os, const DualCharMatrix& d) {
    os << d.m << ' ' << d.p << " Z2\n";
    for (int r = 0; r < d.m; ++r) {
        for (int c = 0; c < d.p; ++c)
            os << (c ? " " : "") << ((d.rows[static_cast<std::size_t>(r)] >> c) & 1);
        os << '\n';
    }
}

using MatrixVariant = std::variant<CharMatrixZ2, CharMatrixZ>;

inline MatrixVariant read_matrix(std::istream& is) {
    std::string line;
    auto next_line = [&]() {
        while (std::getline(is, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::size_t start = line.find_first_not_of(" \t");
            if (start == std::string::npos || line[start] == '#') continue;
            return true;
        }
        return false;
    };
    if (!next_line()) throw format_error("empty matrix file");
    std::istringstream hs(line);
    int rows = 0, cols = 0;
    std::string ring;
    if (!(hs >> rows >> cols >> ring) || rows < 1 || cols < 1)
        throw format_error("bad matrix header: '" + line + "'");
    if (ring != "Z2" && ring != "Z") throw format_error("unknown ring '" + ring + "'");

    std::vector<std::vector<int>> entries;
    for (int r = 0; r < rows; ++r) {
        if (!next_line()) throw format_error("matrix ends after " + std::to_string(r) + " rows");
        std::istringstream ls(line);
        std::vector<int> row;
        int v;
        while (ls >> v) row.push_back(v);
        if (static_cast<int>(row.size()) != cols)
            throw format_error("row has " + std::to_string(row.size()) + " entries, expected " +
                               std::to_string(cols));
        entries.push_back(std::move(row));
    }
    if (ring == "Z2") {
        if (rows > 31) throw format_error("Z2 matrix has too many rows");
        CharMatrixZ2 lam;
        lam.n = rows;
        lam.m = cols;
        lam.cols.assign(static_cast<std::size_t>(cols), 0);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                const int v = entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                if (v != 0 && v != 1) throw format_error("Z2 entry not 0/1");
                if (v) lam.cols[static_cast<std::size_t>(c)] |= 1u << r;
            }
        return lam;
    }
    if (rows > 16) throw format_error("Z matrix has too many rows");
    CharMatrixZ lam = char_matrix_z(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            lam.set(r, c, entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    return lam;
}

inline MatrixVariant read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw format_error("cannot open '" + path + "'");
    return read_matrix(in);
}

} // namespace plseeds

#endif
