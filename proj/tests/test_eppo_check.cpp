#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eppo/eppo_check.hpp"

#include <queue>
#include <set>

#include "eppo/constructors.hpp"
#include "eppo/errors.hpp"
#include "eppo/numbers.hpp"
#include "eppo/perm_dense.hpp"
#include "eppo/rng.hpp"

using namespace eppo;

namespace {

constexpr uint64_t kLimit = 1ull << 21;
constexpr uint64_t kPairLimit = 1ull << 12;

PermDenseGroup dense(uint32_t degree, std::vector<const char*> gens) {
    std::vector<Permutation> ps;
    for (const char* t : gens) ps.push_back(Permutation::from_cycles(t, degree));
    return PermDenseGroup(PermGroup(degree, ps), kLimit);
}

PermDenseGroup a5() { return dense(5, {"(1 2 3 4 5)", "(1 2 3)"}); }
PermDenseGroup s3() { return dense(3, {"(1 2 3)", "(1 2)"}); }
PermDenseGroup s4() { return dense(4, {"(1 2 3 4)", "(1 2)"}); }

// Test-side spectrum oracle: closure under multiplication only, then cycle
// orders; independent of the stabilizer chain and analysis code.
std::set<uint64_t> spectrum_oracle(uint32_t degree, const std::vector<Permutation>& gens) {
    std::set<Permutation> seen{Permutation::identity(degree)};
    std::queue<Permutation> todo;
    todo.push(Permutation::identity(degree));
    while (!todo.empty()) {
        auto cur = todo.front();
        todo.pop();
        for (const auto& g : gens) {
            auto next = cur * g;
            if (seen.insert(next).second) todo.push(next);
        }
    }
    std::set<uint64_t> orders;
    for (const auto& p : seen) orders.insert(p.order());
    return orders;
}

void check_agreement(const FiniteGroup& g, bool expected) {
    const auto verdicts = all_applicable_eppo_checks(g, kLimit, kPairLimit);
    for (const auto& v : verdicts) {
        CHECK(v.is_eppo == expected);
        CHECK(v.definitive);
        CHECK(v.witness.has_value() == !expected);
    }
}

}  // namespace

TEST_CASE("spectra match the closure oracle") {
    struct Case {
        uint32_t degree;
        std::vector<const char*> gens;
    };
    const Case cases[] = {
        {5, {"(1 2 3 4 5)", "(1 2 3)"}},
        {3, {"(1 2 3)", "(1 2)"}},
        {6, {"(1 2 3 4 5 6)"}},
        {4, {"(1 2 3 4)", "(1 2)"}},
    };
    for (const auto& c : cases) {
        std::vector<Permutation> gens;
        for (const char* t : c.gens) gens.push_back(Permutation::from_cycles(t, c.degree));
        const auto oracle = spectrum_oracle(c.degree, gens);
        const PermGroup g(c.degree, gens);
        auto via_stream = spectrum_of(g, kLimit);
        CHECK(std::set<uint64_t>(via_stream.orders.begin(), via_stream.orders.end()) == oracle);
        auto via_dense = spectrum_of(PermDenseGroup(g, kLimit));
        CHECK(via_dense.orders == via_stream.orders);
    }
}

TEST_CASE("spectrum values") {
    CHECK(spectrum_of(a5()).orders == std::vector<uint64_t>{1, 2, 3, 5});
    CHECK(spectrum_of(a5()).all_prime_power);
    auto c6 = spectrum_of(*cyclic_group(6));
    CHECK(c6.orders == std::vector<uint64_t>{1, 2, 3, 6});
    CHECK_FALSE(c6.all_prime_power);
    REQUIRE(c6.composite_witness.has_value());
    CHECK(c6.composite_witness->second == 6);
    CHECK(c6.to_string() == "{1, 2, 3, 6}");
}

TEST_CASE("spectra are divisor closed") {
    auto groups = {spectrum_of(a5()), spectrum_of(s4()), spectrum_of(*cyclic_group(30)),
                   spectrum_of(*generalized_quaternion(4))};
    for (const auto& s : groups) {
        for (uint64_t d : s.orders)
            for (uint64_t q : divisors(d)) CHECK(s.contains(q));
    }
}

TEST_CASE("sampled spectra") {
    const PermGroup g(5, {Permutation::from_cycles("(1 2 3 4 5)", 5),
                          Permutation::from_cycles("(1 2 3)", 5)});
    auto s0 = spectrum_sampled(g, 0, 7);
    CHECK(s0.orders == std::vector<uint64_t>{1});
    CHECK(s0.sampled);

    auto s = spectrum_sampled(g, 10000, 7);
    CHECK(s.orders == std::vector<uint64_t>{1, 2, 3, 5});  // coupon collector
    CHECK(s.sample_count == 10000);
    CHECK(s.seed == 7);

    // Subset of the true spectrum, with few samples.
    auto few = spectrum_sampled(g, 3, 99);
    for (uint64_t d : few.orders) CHECK(spectrum_of(a5()).contains(d));
}

TEST_CASE("four predicates on S3: all true") { check_agreement(s3(), true); }

TEST_CASE("four predicates on C6: all false with witnesses") {
    const auto reg = regular_representation(*cyclic_group(6));
    PermDenseGroup c6(reg, kLimit);
    check_agreement(c6, false);
    auto v = is_eppo_commuting_pairs(c6, kPairLimit);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->elements.size() == 2);
    const uint64_t o1 = v.witness->elements[0].second;
    const uint64_t o2 = v.witness->elements[1].second;
    CHECK(std::gcd(o1, o2) == 1);
    CHECK(o1 > 1);
    CHECK(o2 > 1);
}

TEST_CASE("Q8 predicates: vacuously true for pair-based forms") {
    const auto q8 = generalized_quaternion(3);
    check_agreement(*q8, true);
}

TEST_CASE("S4 is EPPO") { check_agreement(s4(), true); }

TEST_CASE("SL(2,3) is not EPPO with an order-6 witness") {
    MatrixClosureGroup sl23(sl2_generators(Field::get(3, 1)), 1000);
    check_agreement(sl23, false);
    auto v = is_eppo_exhaustive(sl23);
    CHECK(v.witness->elements[0].second == 6);
}

TEST_CASE("A5 passes all four predicates") { check_agreement(a5(), true); }

TEST_CASE("commuting pairs refuses above the pairwise threshold") {
    CHECK_THROWS_AS(is_eppo_commuting_pairs(a5(), 10), ThresholdError);
}

TEST_CASE("streaming exhaustive check matches the dense one") {
    const PermGroup c6(6, {Permutation::from_cycles("(1 2 3 4 5 6)", 6)});
    auto v = is_eppo_exhaustive(c6, kLimit);
    CHECK_FALSE(v.is_eppo);
    CHECK(v.witness->elements[0].second == 6);
    const PermGroup s3p(3, {Permutation::from_cycles("(1 2 3)", 3),
                            Permutation::from_cycles("(1 2)", 3)});
    CHECK(is_eppo_exhaustive(s3p, kLimit).is_eppo);
}

TEST_CASE("sampled verdicts never claim a definitive positive") {
    const PermGroup g(5, {Permutation::from_cycles("(1 2 3 4 5)", 5),
                          Permutation::from_cycles("(1 2 3)", 5)});
    auto v = is_eppo_sampled(g, 500, 13);
    CHECK(v.is_eppo);
    CHECK_FALSE(v.definitive);
    CHECK(v.sample_count == 500);

    const PermGroup c6(6, {Permutation::from_cycles("(1 2 3 4 5 6)", 6)});
    auto neg = is_eppo_sampled(c6, 500, 13);
    CHECK_FALSE(neg.is_eppo);
    CHECK(neg.definitive);  // a composite-order sample is a certificate
    REQUIRE(neg.witness.has_value());
}

TEST_CASE("count_elements_of_order") {
    CHECK(count_elements_of_order(s3(), 1) == 1);
    CHECK(count_elements_of_order(s3(), 2) == 3);
    CHECK(count_elements_of_order(s3(), 3) == 2);
    CHECK(count_elements_of_order(a5(), 5) == 24);
    CHECK(count_elements_of_order(a5(), 4) == 0);
}

TEST_CASE("order-count divisibility") {
    // S3 with |H| = 3 and d = 2: 3 divides 3.
    CHECK(order_count_divisibility(s3(), 3, 2));
    // Trivial H divides everything.
    CHECK(order_count_divisibility(s3(), 1, 2));
    // A5 with a Sylow-2 subgroup (|H| = 4) and d = 5: 4 divides 24.
    CHECK(order_count_divisibility(a5(), 4, 5));
    CHECK_THROWS_AS(order_count_divisibility(s3(), 2, 2), PreconditionError);
    CHECK_THROWS_AS(order_count_divisibility(s3(), 5, 2), PreconditionError);
}

TEST_CASE("coprime-part divisibility over normal subgroups") {
    const auto g = s3();
    auto ns = normal_subgroups(g);
    REQUIRE(ns.size() == 3);
    const auto& a3 = ns[1];
    CHECK(a3.order() == 3);
    CHECK(coprime_part_divisibility(g, a3));  // 2 | (3 - 1)

    // Frobenius group of order 20: N = C5, coprime part 4 divides 4.
    auto f20 = metacyclic_group({5, 2, 1, 2, 2});
    auto f20_ns = normal_subgroups(*f20);
    bool checked = false;
    for (const auto& n : f20_ns) {
        if (n.order() == 5) {
            CHECK(coprime_part_divisibility(*f20, n));
            checked = true;
        }
    }
    CHECK(checked);

    // Non-normal subgroups are rejected.
    const auto swap01 = g.index_of(Permutation::from_cycles("(1 2)", 3));
    auto h = generated_subgroup(g, {*swap01});
    CHECK_THROWS_AS(coprime_part_divisibility(g, h), PreconditionError);
    CHECK_THROWS_AS(coprime_part_divisibility(g, trivial_subgroup(g)), PreconditionError);
}

TEST_CASE("quotients and cyclic subgroups of EPPO groups are EPPO (closure)") {
    std::vector<std::shared_ptr<const FiniteGroup>> groups;
    groups.push_back(std::make_shared<PermDenseGroup>(
        PermGroup(4, {Permutation::from_cycles("(1 2 3 4)", 4),
                      Permutation::from_cycles("(1 2)", 4)}),
        kLimit));
    groups.push_back(metacyclic_group({5, 2, 1, 2, 2}));
    groups.push_back(generalized_quaternion(4));
    groups.push_back(build_from_spec_string("semidirect q=3 m=2 H=Q8"));
    for (const auto& gp : groups) {
        const FiniteGroup& g = *gp;
        REQUIRE(is_eppo_exhaustive(g).is_eppo);
        for (const auto& n : normal_subgroups(g)) {
            if (n.is_trivial() || n.is_whole_group()) continue;
            auto q = quotient_action(g, n);
            PermDenseGroup qd(q.group, kLimit);
            CHECK(is_eppo_exhaustive(qd).is_eppo);
        }
        // Cyclic subgroups, sampled: generated subgroups of prime-power
        // order, so every element order inside is a prime power too.
        SeededRng rng(5);
        for (int t = 0; t < 20; ++t) {
            const uint32_t x = static_cast<uint32_t>(rng.below(g.order()));
            const auto h = generated_subgroup(g, {x});
            for (uint32_t y : h.elements) {
                const uint64_t d = g.element_order(y);
                CHECK((d == 1 || is_prime_power(d)));
            }
        }
    }
}

TEST_CASE("coprime-part divisibility: N = G is the empty product") {
    const auto g = s3();
    CHECK(coprime_part_divisibility(g, whole_group(g)));
}
