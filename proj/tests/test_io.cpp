#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <random>
#include <sstream>

#include "plseeds/catalog.hpp"
#include "plseeds/classify.hpp"
#include "plseeds/complex_io.hpp"
#include "plseeds/matrix_io.hpp"

using namespace plseeds;

TEST_CASE("cplx round trip", "[io]") {
    std::vector<PureComplex> list = {hexagon(), octahedron(), simplex_boundary(3)};
    std::ostringstream out;
    write_complexes(out, list);
    std::istringstream in(out.str());
    auto back = read_complexes(in);
    REQUIRE(back == list);

    // writing what was read reproduces the bytes
    std::ostringstream again;
    write_complexes(again, back);
    REQUIRE(again.str() == out.str());
}

TEST_CASE("cplx comments and blank lines", "[io]") {
    std::istringstream in("# a comment\n3 2\n1 2\n# inner comment\n2 3\n1 3\n\n\n2 1\n1\n2\n");
    auto list = read_complexes(in);
    REQUIRE(list.size() == 2);
    REQUIRE(list[0] == simplex_boundary(2));
    REQUIRE(list[1] == s0());
}

TEST_CASE("cplx format errors", "[io]") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_complexes(in);
    };
    REQUIRE_THROWS_AS(parse("x y\n"), format_error);
    REQUIRE_THROWS_AS(parse("3 2 7\n"), format_error);
    REQUIRE_THROWS_AS(parse("3 2\n2 1\n"), format_error);   // not ascending
    REQUIRE_THROWS_AS(parse("3 2\n1 5\n"), format_error);   // label beyond m
    REQUIRE_THROWS_AS(parse("3 2\n1 2\n1 2\n"), format_error);  // duplicate facet
    REQUIRE_THROWS_AS(parse("3 2\n1 2 3\n"), format_error);     // impure
}

TEST_CASE("mat round trip", "[io]") {
    SECTION("mod 2 matrix") {
        CharMatrixZ2 lam;
        lam.n = 2;
        lam.m = 4;
        lam.cols = {1, 2, 3, 1};
        std::ostringstream out;
        write_matrix(out, lam);
        std::istringstream in(out.str());
        auto back = read_matrix(in);
        auto* b = std::get_if<CharMatrixZ2>(&back);
        REQUIRE(b);
        REQUIRE(b->cols == lam.cols);
    }
    SECTION("integer matrix") {
        CharMatrixZ lam = char_matrix_z(2, 6);
        const int vals[2][6] = {{1, 0, -1, -1, 0, 1}, {0, 1, 1, 0, -1, -1}};
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 6; ++c) lam.set(r, c, vals[r][c]);
        std::ostringstream out;
        write_matrix(out, lam);
        std::istringstream in(out.str());
        auto back = read_matrix(in);
        auto* b = std::get_if<CharMatrixZ>(&back);
        REQUIRE(b);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 6; ++c) REQUIRE(b->get(r, c) == vals[r][c]);
    }
    SECTION("errors") {
        auto parse = [](const std::string& text) {
            std::istringstream in(text);
            return read_matrix(in);
        };
        REQUIRE_THROWS_AS(parse(""), format_error);
        REQUIRE_THROWS_AS(parse("2 2 GF4\n0 1\n1 0\n"), format_error);
        REQUIRE_THROWS_AS(parse("2 2 Z2\n0 1\n"), format_error);
        REQUIRE_THROWS_AS(parse("2 2 Z2\n0 2\n1 0\n"), format_error);
    }
}

TEST_CASE("seed database save and load", "[io]") {
    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path() / "plseeds_db_test";
    fs::remove_all(dir);

    SeedDatabase db;
    db.store(2, 4, {hexagon()});
    db.save(dir.string());
    auto back = SeedDatabase::load(dir.string());

    REQUIRE(back.stratum(2, 4).size() == 1);
    REQUIRE(back.stratum(2, 4).front() == hexagon());
    REQUIRE(back.stratum(4, 3).size() == 1);
    REQUIRE(back.stratum(4, 3).front() == cyclic_polytope_boundary(4, 7));
    REQUIRE(back.stratum(3, 1).empty());
    fs::remove_all(dir);
}
