#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eppo/gf.hpp"

#include "eppo/errors.hpp"
#include "eppo/rng.hpp"

using namespace eppo;

namespace {

const uint32_t kSupported[][2] = {{2, 1}, {3, 1}, {5, 1}, {7, 1},  {17, 1}, {257, 1},
                                  {2, 2}, {2, 3}, {2, 4}, {2, 5},  {3, 2},  {5, 2}};

}  // namespace

TEST_CASE("field construction") {
    const Field& f7 = Field::get(7, 1);
    CHECK(f7.size() == 7);
    CHECK(f7.add(5, 4) == 2);
    CHECK(f7.mul(3, 5) == 1);
    CHECK(f7.inv(3) == 5);

    const Field& f32 = Field::get(2, 5);
    CHECK(f32.size() == 32);

    CHECK_THROWS_AS(Field::get(6, 1), PreconditionError);
    CHECK_THROWS_AS(Field::get(7, 3), PreconditionError);
    CHECK_THROWS_AS(Field::get(2, 0), PreconditionError);
    CHECK_THROWS_AS(Field::get(65537, 1), PreconditionError);
}

TEST_CASE("registry returns one instance per field") {
    CHECK(&Field::get(3, 2) == &Field::get(3, 2));
}

TEST_CASE("sampled field axioms on every supported field") {
    for (const auto& pk : kSupported) {
        const Field& f = Field::get(pk[0], pk[1]);
        SeededRng rng(31 + pk[0] * 100 + pk[1]);
        for (int t = 0; t < 300; ++t) {
            const uint32_t a = static_cast<uint32_t>(rng.below(f.size()));
            const uint32_t b = static_cast<uint32_t>(rng.below(f.size()));
            const uint32_t c = static_cast<uint32_t>(rng.below(f.size()));
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == f.one());
        }
    }
}

TEST_CASE("Frobenius map is additive on every supported field") {
    for (const auto& pk : kSupported) {
        const Field& f = Field::get(pk[0], pk[1]);
        SeededRng rng(7 + pk[0]);
        for (int t = 0; t < 200; ++t) {
            const uint32_t a = static_cast<uint32_t>(rng.below(f.size()));
            const uint32_t b = static_cast<uint32_t>(rng.below(f.size()));
            CHECK(f.pow(f.add(a, b), f.characteristic()) ==
                  f.add(f.pow(a, f.characteristic()), f.pow(b, f.characteristic())));
        }
    }
}

TEST_CASE("multiplicative orders divide q-1 and match brute force") {
    for (const auto& pk : kSupported) {
        const Field& f = Field::get(pk[0], pk[1]);
        if (f.size() > 64) continue;
        for (uint32_t a = 1; a < f.size(); ++a) {
            uint64_t e = 1;
            uint32_t acc = a;
            while (acc != f.one()) {
                acc = f.mul(acc, a);
                ++e;
            }
            CHECK(f.multiplicative_order(a) == e);
            CHECK((f.size() - 1) % e == 0);
        }
    }
}

TEST_CASE("GF(9) has a primitive element of order 8") {
    const Field& f9 = Field::get(3, 2);
    const uint32_t g = f9.primitive_element();
    CHECK(f9.multiplicative_order(g) == 8);
    // x itself (encoding 3) generates under the fixed modulus.
    CHECK(f9.multiplicative_order(3) == 8);
}

TEST_CASE("coefficient encoding round trip") {
    const Field& f8 = Field::get(2, 3);
    for (uint32_t a = 0; a < 8; ++a) CHECK(f8.from_coefficients(f8.coefficients(a)) == a);
    CHECK(f8.element_to_string(5) == "(1,0,1)");
    CHECK(Field::get(7, 1).element_to_string(5) == "5");
    CHECK(f8.name() == "GF(2^3)");
    CHECK(Field::get(7, 1).name() == "GF(7)");
}

TEST_CASE("from_int embeds through the prime subfield") {
    const Field& f9 = Field::get(3, 2);
    CHECK(f9.from_int(4) == 1);
    CHECK(f9.from_int(-1) == 2);
    CHECK(f9.from_int(3) == 0);
}
