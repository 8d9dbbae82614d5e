#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eppo/permutation.hpp"

#include "eppo/errors.hpp"
#include "eppo/rng.hpp"

using namespace eppo;

namespace {

Permutation random_perm(uint32_t degree, SeededRng& rng) {
    std::vector<uint32_t> im(degree);
    for (uint32_t i = 0; i < degree; ++i) im[i] = i;
    for (uint32_t i = degree; i > 1; --i) {
        const uint32_t j = static_cast<uint32_t>(rng.below(i));
        std::swap(im[i - 1], im[j]);
    }
    return Permutation(std::move(im));
}

}  // namespace

TEST_CASE("identity and validation") {
    const auto id = Permutation::identity(5);
    CHECK(id.is_identity());
    CHECK(id.order() == 1);
    CHECK(id.to_cycle_string() == "()");
    CHECK_FALSE(id.lowest_moved_point().has_value());
    CHECK_THROWS_AS(Permutation({0, 0, 1}), PreconditionError);
    CHECK_THROWS_AS(Permutation({0, 3}), PreconditionError);
}

TEST_CASE("composition applies the right factor first") {
    // a = (1 2), b = (2 3) in 1-based text.
    const auto a = Permutation::from_cycles("(1 2)", 3);
    const auto b = Permutation::from_cycles("(2 3)", 3);
    const auto ab = a * b;
    // (a*b)(x) = a(b(x)): 1 -> 1 -> 2 in 0-based: ab(0) = a(b(0)) = a(0) = 1.
    CHECK(ab(0) == 1);
    CHECK(ab(1) == 2);
    CHECK(ab(2) == 0);
}

TEST_CASE("element order is the lcm of cycle lengths") {
    CHECK(Permutation::identity(4).order() == 1);
    CHECK(Permutation::from_cycles("(1 2)(3 4 5)", 5).order() == 6);
    CHECK(Permutation::from_cycles("(1 2 3 4 5)", 5).order() == 5);
}

TEST_CASE("cycle notation round trip") {
    const char* texts[] = {"(1 2)", "(1 2 3)(4 5)", "(2 4 6)(1 3)", "(1 5)(2 6)(3 7)"};
    for (const char* t : texts) {
        const auto p = Permutation::from_cycles(t, 8);
        const auto q = Permutation::from_cycles(p.to_cycle_string(), 8);
        CHECK(p == q);
    }
    // Whitespace and comma tolerance.
    CHECK(Permutation::from_cycles(" ( 1 , 2 ) ", 4) == Permutation::from_cycles("(1 2)", 4));
}

TEST_CASE("cycle parsing rejects bad input") {
    CHECK_THROWS_AS(Permutation::from_cycles("(1 2", 4), ParseError);
    CHECK_THROWS_AS(Permutation::from_cycles("(0 1)", 4), ParseError);
    CHECK_THROWS_AS(Permutation::from_cycles("(1 5)", 4), ParseError);
    CHECK_THROWS_AS(Permutation::from_cycles("(1 2)(2 3)", 4), ParseError);
    CHECK_THROWS_AS(Permutation::from_cycles("", 4), ParseError);
    CHECK_THROWS_AS(Permutation::from_cycles("1 2 3", 4), ParseError);
}

TEST_CASE("inverse and associativity properties") {
    SeededRng rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_perm(9, rng);
        const auto b = random_perm(9, rng);
        const auto c = random_perm(9, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * a.inverse() == Permutation::identity(9));
        CHECK(a.inverse() * a == Permutation::identity(9));
    }
}
