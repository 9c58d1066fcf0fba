#ifndef PLSEEDS_COMPLEX_IO_HPP
#define PLSEEDS_COMPLEX_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "plseeds/complex.hpp"
#include "plseeds/errors.hpp"

namespace plseeds {

// .cplx format: optional '#' comment lines; a header line "m n"; one facet
// per line as ascending space-separated labels; complexes separated by a
// blank line.  Writing always emits the canonical facet order, so writing
// what was read reproduces the file byte for byte (modulo comments).

inline void write_complex(std::ostream& os, const PureComplex& K) {
    os << K.m << ' ' << K.n << '\n';
    for (VertexSet f : K.facets) {
        bool first = true;
        f.for_each([&](int v) {
            if (!first) os << ' ';
            os << v;
            first = false;
        });
        os << '\n';
    }
}

inline void write_complexes(std::ostream& os, const std::vector<PureComplex>& list) {
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i > 0) os << '\n';
        write_complex(os, list[i]);
    }
}

inline std::vector<PureComplex> read_complexes(std::istream& is, bool embedded = false) {
    std::vector<PureComplex> out;
    std::string line;
    bool in_complex = false;
    int m = 0, n = 0;
    std::vector<VertexSet> facets;

    auto flush = [&]() {
        if (!in_complex) return;
        try {
            out.emplace_back(m, n, std::move(facets), embedded);
        } catch (const std::exception& e) {
            throw format_error(std::string("invalid complex: ") + e.what());
        }
        facets.clear();
        in_complex = false;
    };

    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start != std::string::npos && line[start] == '#') continue;
        if (start == std::string::npos) {
            flush();
            continue;
        }
        std::istringstream ls(line);
        if (!in_complex) {
            if (!(ls >> m >> n)) throw format_error("bad header line: '" + line + "'");
            std::string rest;
            if (ls >> rest) throw format_error("trailing tokens after header: '" + line + "'");
            in_complex = true;
        } else {
            VertexSet f;
            int v, prev = 0;
            while (ls >> v) {
                if (v <= prev) throw format_error("facet labels not ascending: '" + line + "'");
                if (v > m) throw format_error("label exceeds m: '" + line + "'");
                f = f.with(v);
                prev = v;
            }
            if (!ls.eof()) throw format_error("bad facet line: '" + line + "'");
            if (f.empty()) throw format_error("empty facet line");
            facets.push_back(f);
        }
    }
    flush();
    return out;
}

inline std::vector<PureComplex> read_complex_file(const std::string& path, bool embedded = false) {
    std::ifstream in(path);
    if (!in) throw format_error("cannot open '" + path + "'");
    return read_complexes(in, embedded);
}

inline void write_complex_file(const std::string& path, const std::vector<PureComplex>& list) {
    std::ofstream outf(path);
    if (!outf) throw format_error("cannot write '" + path + "'");
    write_complexes(outf, list);
}

} // namespace plseeds

#endif
