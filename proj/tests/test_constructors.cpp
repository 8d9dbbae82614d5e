#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eppo/constructors.hpp"

#include <numeric>

#include "eppo/errors.hpp"
#include "eppo/eppo_check.hpp"
#include "eppo/numbers.hpp"
#include "eppo/analysis.hpp"
#include "eppo/perm_dense.hpp"
#include "eppo/rng.hpp"
#include "eppo/spectrum.hpp"

using namespace eppo;

namespace {

void check_group_axioms(const FiniteGroup& g, uint64_t seed) {
    const uint32_t n = static_cast<uint32_t>(g.order());
    const uint32_t e = g.identity();
    SeededRng rng(seed);
    for (int t = 0; t < 1000; ++t) {
        const uint32_t a = static_cast<uint32_t>(rng.below(n));
        const uint32_t b = static_cast<uint32_t>(rng.below(n));
        const uint32_t c = static_cast<uint32_t>(rng.below(n));
        REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    }
    for (uint32_t a = 0; a < n; ++a) {
        REQUIRE(g.mul(a, g.inv(a)) == e);
        REQUIRE(g.mul(g.inv(a), a) == e);
        REQUIRE(g.mul(a, e) == a);
        REQUIRE(g.mul(e, a) == a);
    }
}

}  // namespace

TEST_CASE("find_metacyclic_r examples") {
    CHECK(find_metacyclic_r(3, 1, 2, 1) == 2);
    CHECK(find_metacyclic_r(7, 1, 3, 1) == 2);
    CHECK_FALSE(find_metacyclic_r(5, 1, 3, 1).has_value());
    CHECK(find_metacyclic_r(5, 1, 2, 2) == 2);
    CHECK_THROWS_AS(find_metacyclic_r(4, 1, 2, 1), PreconditionError);
    CHECK_THROWS_AS(find_metacyclic_r(3, 1, 3, 1), PreconditionError);
}

TEST_CASE("find_metacyclic_r solvability criterion matches brute force") {
    const uint64_t primes[] = {2, 3, 5, 7, 13, 17};
    for (uint64_t p : primes) {
        for (uint64_t q : primes) {
            if (p == q) continue;
            for (uint32_t alpha = 1; alpha <= 2; ++alpha) {
                for (uint32_t beta = 1; beta <= 2; ++beta) {
                    const uint64_t pa = ipow(p, alpha);
                    const uint64_t qb = ipow(q, beta);
                    // Brute force: smallest r with order exactly q^beta.
                    std::optional<uint64_t> expect;
                    for (uint64_t r = 2; r < pa && !expect; ++r) {
                        if (std::gcd(r, p) != 1) continue;
                        if (multiplicative_order(r, pa) == qb) expect = r;
                    }
                    CHECK(find_metacyclic_r(p, alpha, q, beta) == expect);
                    // Existence criterion: q^beta | p - 1 (p, q distinct primes).
                    CHECK(expect.has_value() == ((p - 1) % qb == 0));
                }
            }
        }
    }
}

TEST_CASE("metacyclic examples from the construction") {
    // (3,1,2,1,r=2): order 6 with spectrum {1,2,3} (S3-like).
    auto g1 = metacyclic_group({3, 2, 1, 1, 2});
    CHECK(g1->order() == 6);
    CHECK(spectrum_of(*g1).orders == std::vector<uint64_t>{1, 2, 3});
    CHECK(is_eppo_exhaustive(*g1).is_eppo);

    // (5,1,2,2,r=2): order 20, spectrum {1,2,4,5}.
    auto g2 = metacyclic_group({5, 2, 1, 2, 2});
    CHECK(g2->order() == 20);
    CHECK(spectrum_of(*g2).orders == std::vector<uint64_t>{1, 2, 4, 5});
    CHECK(is_eppo_exhaustive(*g2).is_eppo);

    // (5,1,2,2,r=4): order of 4 mod 5 is 2 < 4; an element of order 10 exists.
    auto g3 = metacyclic_group({5, 2, 1, 2, 4});
    CHECK(g3->order() == 20);
    auto v = is_eppo_exhaustive(*g3);
    CHECK_FALSE(v.is_eppo);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->elements[0].second == 10);
}

TEST_CASE("metacyclic validation") {
    CHECK_THROWS_AS(metacyclic_group({5, 2, 1, 1, 2}), PreconditionError);  // 2^2 != 1 mod 5
    CHECK_THROWS_AS(metacyclic_group({5, 5, 1, 1, 2}), PreconditionError);
    CHECK_THROWS_AS(metacyclic_group({5, 2, 1, 1, 1}), PreconditionError);  // r < 2
    CHECK_THROWS_AS(metacyclic_group({5, 2, 1, 1, 10}), PreconditionError);
}

TEST_CASE("metacyclic group axioms") {
    check_group_axioms(*metacyclic_group({7, 3, 1, 1, 2}), 11);
    check_group_axioms(*metacyclic_group({17, 2, 2, 2, 38}), 12);
}

TEST_CASE("generalized quaternion groups") {
    auto q8 = generalized_quaternion(3);
    CHECK(q8->order() == 8);
    CHECK(spectrum_of(*q8).orders == std::vector<uint64_t>{1, 2, 4});
    CHECK(count_elements_of_order(*q8, 2) == 1);  // unique involution
    CHECK(is_eppo_exhaustive(*q8).is_eppo);
    check_group_axioms(*q8, 3);

    CHECK(center(*q8).order() == 2);

    auto q16 = generalized_quaternion(4);
    CHECK(q16->order() == 16);
    CHECK(count_elements_of_order(*q16, 2) == 1);
    // Cyclic subgroup of index 2: an element of order 8 exists.
    CHECK(count_elements_of_order(*q16, 8) > 0);
    CHECK(is_eppo_exhaustive(*q16).is_eppo);
    check_group_axioms(*q16, 4);

    CHECK_THROWS_AS(generalized_quaternion(2), PreconditionError);
}

TEST_CASE("cyclic and dihedral helpers") {
    auto c6 = cyclic_group(6);
    CHECK(c6->order() == 6);
    CHECK(spectrum_of(*c6).orders == std::vector<uint64_t>{1, 2, 3, 6});
    CHECK_FALSE(is_eppo_exhaustive(*c6).is_eppo);

    auto d6 = dihedral_group(6);  // order 12
    CHECK(d6->order() == 12);
    CHECK_FALSE(is_eppo_exhaustive(*d6).is_eppo);
    auto d9 = dihedral_group(9);  // order 18, spectrum {1,2,3,9}
    CHECK(spectrum_of(*d9).orders == std::vector<uint64_t>{1, 2, 3, 9});
    CHECK(is_eppo_exhaustive(*d9).is_eppo);
    check_group_axioms(*d6, 6);
}

TEST_CASE("fixed point free evaluation") {
    const Field& f3 = Field::get(3, 1);

    SUBCASE("trivial H is vacuously fixed point free") {
        SemidirectSpec spec{&f3, 2, {}, {}, 1 << 16};
        auto r = fixed_point_free(spec);
        CHECK(r.fixed_point_free);
        CHECK(r.faithful);
        CHECK(r.h_order == 1);
    }

    SUBCASE("order-4 rotation on GF(3)^2 is fixed point free") {
        SemidirectSpec spec{&f3, 2, {rotation_order4(f3)}, {}, 1 << 16};
        auto r = fixed_point_free(spec);
        CHECK(r.fixed_point_free);
        CHECK(r.faithful);
        CHECK(r.h_order == 4);
    }

    SUBCASE("a transposition matrix fixes (1,1)") {
        Matrix swap(f3, 2, 2);
        swap.set(0, 1, 1);
        swap.set(1, 0, 1);
        SemidirectSpec spec{&f3, 2, {swap}, {}, 1 << 16};
        auto r = fixed_point_free(spec);
        CHECK_FALSE(r.fixed_point_free);
        CHECK(r.faithful);
    }

    SUBCASE("trivial action of C2 is not faithful") {
        Matrix ref(f3, 1, 1);
        ref.set(0, 0, f3.neg(1));  // faithful copy of C2
        SemidirectSpec spec{&f3, 1, {Matrix::identity(f3, 1)}, {ref}, 1 << 16};
        auto r = fixed_point_free(spec);
        CHECK(r.fixed_point_free);  // image is trivial, vacuous
        CHECK_FALSE(r.faithful);
        CHECK(r.h_order == 2);
        CHECK(r.image_order == 1);
    }
}

TEST_CASE("semidirect products") {
    const Field& f3 = Field::get(3, 1);

    SUBCASE("GF(3)^2 by C4 rotation: order 36, every element order a prime power") {
        SemidirectSpec spec{&f3, 2, {rotation_order4(f3)}, {}, 1 << 16};
        auto g = semidirect_product(spec);
        CHECK(g->order() == 36);
        CHECK(is_eppo_exhaustive(*g).is_eppo);
        CHECK(spectrum_of(*g).orders == std::vector<uint64_t>{1, 2, 3, 4});
        check_group_axioms(*g, 17);
    }

    SUBCASE("GF(3)^2 by Q8: order 72, the sharply 2-transitive affine group") {
        SemidirectSpec spec{&f3, 2, quaternion_matrices(f3), {}, 1 << 16};
        auto g = semidirect_product(spec);
        CHECK(g->order() == 72);
        CHECK(is_eppo_exhaustive(*g).is_eppo);
        CHECK(spectrum_of(*g).orders == std::vector<uint64_t>{1, 2, 3, 4});
        check_group_axioms(*g, 18);
    }

    SUBCASE("trivial action of C2 on GF(3) gives the cyclic group of order 6") {
        Matrix ref(f3, 1, 1);
        ref.set(0, 0, f3.neg(1));
        SemidirectSpec spec{&f3, 1, {Matrix::identity(f3, 1)}, {ref}, 1 << 16};
        auto g = semidirect_product(spec);
        CHECK(g->order() == 6);
        auto v = is_eppo_exhaustive(*g);
        CHECK_FALSE(v.is_eppo);
        CHECK(v.witness->elements[0].second == 6);
    }

    SUBCASE("|H| coprime to q is required") {
        // C3 acting on GF(3) is rejected.
        Matrix one(f3, 1, 1);
        one.set(0, 0, 1);
        SemidirectSpec spec{&f3, 1, {one}, {}, 1 << 16};
        // image trivial: |H| = 1, fine. Use a 3-element H over GF(2) base? Simpler:
        // rotation of order 4 over GF(2) does not exist; check the explicit guard
        // with H = C2 over GF(2).
        const Field& f2 = Field::get(2, 1);
        Matrix m(f2, 2, 2);
        m.set(0, 1, 1);
        m.set(1, 0, 1);
        SemidirectSpec bad{&f2, 2, {m}, {}, 1 << 16};
        CHECK_THROWS_AS(semidirect_product(bad), PreconditionError);
    }
}

TEST_CASE("quaternion matrices anticommute and square to -I") {
    for (uint32_t q : {3u, 5u, 7u, 11u}) {
        const Field& f = Field::get(q, 1);
        auto mats = quaternion_matrices(f);
        auto neg_identity = Matrix::identity(f, 2);
        neg_identity.set(0, 0, f.neg(1));
        neg_identity.set(1, 1, f.neg(1));
        CHECK(mats[0].pow(2) == neg_identity);
        CHECK(mats[1].pow(2) == neg_identity);
        CHECK(mats[0] * mats[1] == neg_identity * (mats[1] * mats[0]));
        CHECK(matrix_group_closure(mats, 100).size() == 8);
    }
}

TEST_CASE("SL(2,3) from matrix closure is not EPPO") {
    const Field& f3 = Field::get(3, 1);
    MatrixClosureGroup sl23(sl2_generators(f3), 1000);
    CHECK(sl23.order() == 24);
    auto v = is_eppo_exhaustive(sl23);
    CHECK_FALSE(v.is_eppo);
    CHECK(v.witness->elements[0].second == 6);
    check_group_axioms(sl23, 23);
}

TEST_CASE("regular representation preserves the order") {
    auto q8 = generalized_quaternion(3);
    auto reg = regular_representation(*q8);
    CHECK(reg.degree() == 8);
    CHECK(reg.order() == 8);

    auto mc = metacyclic_group({5, 2, 1, 2, 2});
    auto reg2 = regular_representation(*mc);
    CHECK(reg2.degree() == 20);
    CHECK(reg2.order() == 20);

    // The regular representation feeds the same analysis pipeline.
    PermDenseGroup dense(reg2, 1 << 21);
    CHECK(spectrum_of(dense).orders == std::vector<uint64_t>{1, 2, 4, 5});
}

TEST_CASE("spec string construction") {
    auto g = build_from_spec_string("metacyclic p=5 a=1 q=2 b=2 r=4");
    CHECK(g->order() == 20);
    auto g2 = build_from_spec_string("metacyclic p=7 a=1 q=3 b=1");
    CHECK(g2->order() == 21);
    auto g3 = build_from_spec_string("genquat n=3");
    CHECK(g3->order() == 8);
    auto g4 = build_from_spec_string("semidirect q=3 m=2 H=Q8");
    CHECK(g4->order() == 72);
    auto g5 = build_from_spec_string("cyclic n=30");
    CHECK(g5->order() == 30);
    auto g6 = build_from_spec_string("dihedral n=7");
    CHECK(g6->order() == 14);

    CHECK_THROWS_AS(build_from_spec_string("metacyclic p=5 a=1 q=3 b=1"), ParseError);
    CHECK_THROWS_AS(build_from_spec_string("wreath n=2"), ParseError);
    CHECK_THROWS_AS(build_from_spec_string("metacyclic p=5"), ParseError);
    CHECK_THROWS_AS(build_from_spec_string(""), ParseError);
    CHECK_THROWS_AS(build_from_spec_string("semidirect q=3 m=3 H=Q8"), ParseError);
}
