#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eppo/catalog.hpp"

#include <numeric>
#include <set>

#include "eppo/analysis.hpp"
#include "eppo/eppo_check.hpp"
#include "eppo/errors.hpp"
#include "eppo/group_io.hpp"
#include "eppo/perm_dense.hpp"
#include "eppo/rng.hpp"
#include "eppo/spectrum.hpp"

using namespace eppo;

namespace {
constexpr uint64_t kLimit = 1ull << 21;
}

TEST_CASE("A5: order, spectrum, simplicity") {
    auto g = alternating_5();
    CHECK(g.degree() == 5);
    CHECK(g.order() == 60);
    PermDenseGroup d(g, kLimit);
    CHECK(spectrum_of(d).orders == std::vector<uint64_t>{1, 2, 3, 5});
    CHECK(is_simple(d));
    CHECK(center(d).is_trivial());
}

TEST_CASE("PSL2 orders match the closed-form formula") {
    for (uint32_t q : {5u, 7u, 8u, 9u, 13u, 17u, 31u}) {
        auto g = psl2(q);
        const uint64_t expected =
            static_cast<uint64_t>(q) * (static_cast<uint64_t>(q) * q - 1) /
            std::gcd<uint64_t>(2, q - 1);
        CHECK(g.degree() == q + 1);
        CHECK(g.order() == expected);
    }
    CHECK(psl2(5).order() == 60);
    CHECK(psl2(7).order() == 168);
    CHECK_THROWS_AS(psl2(6), PreconditionError);
    CHECK_THROWS_AS(psl2(2), PreconditionError);
    CHECK_THROWS_AS(psl2(27), PreconditionError);  // no fixed modulus for GF(27)
}

TEST_CASE("PSL2(7): spectrum, EPPO status, Sylow 7") {
    PermDenseGroup d(psl2(7), kLimit);
    CHECK(spectrum_of(d).orders == std::vector<uint64_t>{1, 2, 3, 4, 7});
    CHECK(is_eppo_exhaustive(d).is_eppo);
    CHECK(is_simple(d));
    SeededRng rng(7);
    CHECK(sylow_subgroup(d, 7, rng).order() == 7);
}

TEST_CASE("PSL2 negative controls have explicit witnesses") {
    // q = 13: elements of order 6 exist.
    auto v13 = is_eppo_exhaustive(psl2(13), kLimit);
    CHECK_FALSE(v13.is_eppo);
    CHECK(v13.witness->elements[0].second == 6);
    // q = 31 (Mersenne): an element of order 15 exists.
    auto v31 = is_eppo_exhaustive(psl2(31), kLimit);
    CHECK_FALSE(v31.is_eppo);
    {
        const uint64_t d = v31.witness->elements[0].second;
        CHECK((d == 15 || d == 6 || d == 10));  // first composite found by the stream
        auto spec = spectrum_of(psl2(31), kLimit);
        CHECK(spec.contains(15));
    }
}

TEST_CASE("PSL2 is 2-transitive on the projective line (sampled pairs)") {
    for (uint32_t q : {5u, 7u, 9u}) {
        auto g = psl2(q);
        // Orbit of the ordered pair (0, 1) under the generators.
        std::set<std::pair<uint32_t, uint32_t>> orbit;
        std::vector<std::pair<uint32_t, uint32_t>> queue{{0, 1}};
        orbit.insert({0, 1});
        while (!queue.empty()) {
            auto [a, b] = queue.back();
            queue.pop_back();
            for (const auto& gen : g.generators()) {
                auto next = std::make_pair(gen(a), gen(b));
                if (orbit.insert(next).second) queue.push_back(next);
            }
        }
        CHECK(orbit.size() == static_cast<size_t>(g.degree()) * (g.degree() - 1));
    }
}

TEST_CASE("PSL3(4): order 20160, spectrum, EPPO") {
    auto g = psl3_4();
    CHECK(g.degree() == 21);
    CHECK(g.order() == 20160);
    // Closed form: q^3 (q^3 - 1)(q^2 - 1) / gcd(3, q - 1) for q = 4.
    CHECK(g.order() == 64ull * 63 * 15 / 3);
    PermDenseGroup d(g, kLimit);
    CHECK(spectrum_of(d).orders == std::vector<uint64_t>{1, 2, 3, 4, 5, 7});
    CHECK(is_eppo_exhaustive(d).is_eppo);
}

TEST_CASE("Sz(8): order 29120, spectrum, EPPO") {
    auto g = suzuki(8);
    CHECK(g.degree() == 65);
    CHECK(g.order() == 29120);
    CHECK(g.order() == 64ull * 65 * 7);
    auto spec = spectrum_of(g, kLimit);
    CHECK(spec.orders == std::vector<uint64_t>{1, 2, 4, 5, 7, 13});
    CHECK(is_eppo_exhaustive(g, kLimit).is_eppo);
}

TEST_CASE("Sz(32): order via the formula, enumeration refused, sampling consistent") {
    auto g = suzuki(32);
    CHECK(g.degree() == 1025);
    CHECK(g.order() == 32537600);
    CHECK(g.order() == 1024ull * 1025 * 31);
    CHECK_THROWS_AS(g.enumerate(1ull << 21), ThresholdError);

    const std::set<uint64_t> allowed{1, 2, 4, 5, 25, 31, 41};
    auto spec = spectrum_sampled(g, 20000, 4242);
    for (uint64_t d : spec.orders) CHECK(allowed.count(d) == 1);
    CHECK(spec.all_prime_power);

    auto v = is_eppo_sampled(g, 5000, 7);
    CHECK(v.is_eppo);
    CHECK_FALSE(v.definitive);
}

TEST_CASE("M9: sharply 2-transitive of order 72") {
    auto g = m9();
    CHECK(g.degree() == 9);
    CHECK(g.order() == 72);
    PermDenseGroup d(g, kLimit);
    CHECK(spectrum_of(d).orders == std::vector<uint64_t>{1, 2, 3, 4});
    CHECK(is_eppo_exhaustive(d).is_eppo);

    // Transitive with point stabilizer of order 8.
    std::set<uint32_t> orbit;
    std::vector<uint32_t> queue{0};
    orbit.insert(0);
    while (!queue.empty()) {
        uint32_t x = queue.back();
        queue.pop_back();
        for (const auto& gen : g.generators())
            if (orbit.insert(gen(x)).second) queue.push_back(gen(x));
    }
    CHECK(orbit.size() == 9);

    uint64_t stab0 = 0, fix_two = 0;
    for (auto it = g.elements(kLimit); !it.done(); it.advance()) {
        if (it.current()(0) == 0) ++stab0;
        if (it.current()(0) == 0 && it.current()(1) == 1 && !it.current().is_identity())
            ++fix_two;
    }
    CHECK(stab0 == 8);
    CHECK(fix_two == 0);  // only the identity fixes two points
}

TEST_CASE("catalog list: exactly eight entries with the right orders") {
    const auto& cat = simple_eppo_catalog();
    REQUIRE(cat.size() == 8);
    std::vector<uint64_t> orders;
    for (const auto& e : cat) orders.push_back(e.expected_order);
    CHECK(orders == std::vector<uint64_t>{60, 168, 504, 360, 2448, 20160, 29120, 32537600});
}

TEST_CASE("catalog entries within threshold match their fixtures") {
    for (const auto& e : simple_eppo_catalog()) {
        if (!e.exhaustive) continue;
        if (e.expected_order > 3000) continue;  // big ones covered above
        auto g = e.build();
        CHECK(g.order() == e.expected_order);
        CHECK(g.degree() == e.degree);
        auto spec = spectrum_of(g, kLimit);
        CHECK(spec.orders == e.expected_spectrum);
        CHECK(is_eppo_exhaustive(g, kLimit).is_eppo);
    }
}

TEST_CASE("catalog name resolution") {
    CHECK(build_catalog_group("A5").order() == 60);
    CHECK(build_catalog_group("PSL2(9)").order() == 360);
    CHECK(build_catalog_group("M9").order() == 72);
    CHECK(is_catalog_name("Sz(8)"));
    CHECK(is_catalog_name("PSL2(17)"));
    CHECK_FALSE(is_catalog_name("E8"));
    CHECK_THROWS_AS(build_catalog_group("E8"), ParseError);
    CHECK_THROWS_AS(build_catalog_group("PSL2(abc)"), ParseError);
}

TEST_CASE("catalog groups export to the group file format") {
    auto g = alternating_5();
    auto text = write_group_text(g);
    auto back = parse_group_text(text);
    CHECK(back.order() == 60);
    CHECK(back.degree() == 5);
}
