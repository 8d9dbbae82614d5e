#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eppo/group_io.hpp"

#include "eppo/constructors.hpp"
#include "eppo/errors.hpp"
#include "eppo/table_groups.hpp"

using namespace eppo;

TEST_CASE("group file parsing") {
    const std::string text =
        "# the alternating group on five points\n"
        "5\n"
        "(1 2 3 4 5)\n"
        "(1 2 3)   # a 3-cycle\n";
    auto g = parse_group_text(text);
    CHECK(g.degree() == 5);
    CHECK(g.order() == 60);
}

TEST_CASE("trivial group file") {
    auto g = parse_group_text("1\n");
    CHECK(g.degree() == 1);
    CHECK(g.order() == 1);
}

TEST_CASE("group file round trip") {
    auto g = parse_group_text("6\n(1 2 3 4 5 6)\n(2 6)(3 5)\n");
    auto g2 = parse_group_text(write_group_text(g));
    CHECK(g2.degree() == g.degree());
    CHECK(g2.order() == g.order());
    CHECK(g2.generators() == g.generators());
}

TEST_CASE("group file errors") {
    CHECK_THROWS_AS(parse_group_text(""), ParseError);
    CHECK_THROWS_AS(parse_group_text("# only comments\n"), ParseError);
    CHECK_THROWS_AS(parse_group_text("abc\n"), ParseError);
    CHECK_THROWS_AS(parse_group_text("0\n"), ParseError);
    CHECK_THROWS_AS(parse_group_text("3\n(1 4)\n"), ParseError);
    CHECK_THROWS_AS(parse_group_text("3\n(1 2\n"), ParseError);
}

TEST_CASE("matrix group file parsing") {
    const std::string text =
        "# Q8 over GF(3)\n"
        "GF(3)\n"
        "dim 2\n"
        "gen 0 2 1 0\n"
        "gen 1 1 1 2\n";
    auto def = parse_matrix_group_text(text);
    CHECK(def.field == &Field::get(3, 1));
    CHECK(def.dimension == 2);
    REQUIRE(def.generators.size() == 2);
    MatrixClosureGroup g(def.generators, 100);
    CHECK(g.order() == 8);
}

TEST_CASE("matrix group file with extension field tuples") {
    const std::string text =
        "GF(2^2)\n"
        "dim 2\n"
        "gen (1,0) (0,1) (0,0) (1,0)\n";
    auto def = parse_matrix_group_text(text);
    CHECK(def.field->size() == 4);
    CHECK(def.generators[0].at(0, 1) == 2);  // x has encoding 2
}

TEST_CASE("matrix group file round trip") {
    const Field& f9 = Field::get(3, 2);
    Matrix m = Matrix::identity(f9, 2);
    m.set(0, 1, 5);
    MatrixGroupDef def{&f9, 2, {m}};
    auto back = parse_matrix_group_text(write_matrix_group_text(def));
    CHECK(back.field == def.field);
    CHECK(back.dimension == def.dimension);
    CHECK(back.generators[0] == def.generators[0]);
}

TEST_CASE("matrix group file errors") {
    CHECK_THROWS_AS(parse_matrix_group_text(""), ParseError);
    CHECK_THROWS_AS(parse_matrix_group_text("GF(6)\ndim 2\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix_group_text("GF(3)\ngen 1 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix_group_text("GF(3)\ndim 2\ngen 1 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix_group_text("GF(3)\ndim 2\ngen 1 0 0 1 5\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix_group_text("GF(3)\ndim 2\ngen 1 0 0 7\n"), ParseError);
}
