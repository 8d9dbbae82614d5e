#include "eppo/corpus.hpp"

#include "eppo/catalog.hpp"
#include "eppo/constructors.hpp"
#include "eppo/numbers.hpp"
#include "eppo/perm_dense.hpp"

namespace eppo {

namespace {

CorpusEntry perm_entry(std::string name, std::string family, PermGroup g, bool expected_eppo,
                       const RunConfig& config) {
    CorpusEntry e;
    e.name = std::move(name);
    e.family = std::move(family);
    e.perm = std::make_shared<PermGroup>(std::move(g));
    e.dense = std::make_shared<PermDenseGroup>(*e.perm, config.enumeration_threshold);
    e.expected_eppo = expected_eppo;
    return e;
}

CorpusEntry table_entry(std::string name, std::string family,
                        std::shared_ptr<const FiniteGroup> g, bool expected_eppo) {
    CorpusEntry e;
    e.name = std::move(name);
    e.family = std::move(family);
    e.dense = std::move(g);
    e.expected_eppo = expected_eppo;
    return e;
}

}  // namespace

std::vector<CorpusEntry> metacyclic_grid(const RunConfig&) {
    std::vector<CorpusEntry> out;
    const uint64_t primes[] = {2, 3, 5, 7, 13, 17};
    for (uint64_t p : primes) {
        for (uint64_t q : primes) {
            if (p == q) continue;
            for (uint32_t alpha = 1; alpha <= 2; ++alpha) {
                for (uint32_t beta = 1; beta <= 2; ++beta) {
                    const uint64_t pa = ipow(p, alpha);
                    const uint64_t qb = ipow(q, beta);
                    for (uint64_t r = 2; r < pa; ++r) {
                        if (r % p == 0) continue;
                        if (pow_mod(r, qb, pa) != 1) continue;
                        MetacyclicSpec spec{p, q, alpha, beta, r};
                        // Independent route: the group has prime-power
                        // element orders iff r has order exactly q^beta.
                        const bool expected = spec.r_order() == qb;
                        CorpusEntry e =
                            table_entry(spec.to_string(), "metacyclic",
                                        metacyclic_group(spec), expected);
                        e.metacyclic = spec;
                        out.push_back(std::move(e));
                    }
                }
            }
        }
    }
    return out;
}

std::vector<SemidirectVariant> semidirect_variants() {
    std::vector<SemidirectVariant> variants;

    for (uint32_t q : {3u, 5u}) {
        const Field& f = Field::get(q, 1);
        const std::string fq = "GF(" + std::to_string(q) + ")";
        // m = 1: -1 scalar (C2), an order-4 scalar when it exists, the
        // trivial-action C2, and the trivial group.
        {
            Matrix minus(f, 1, 1);
            minus.set(0, 0, f.neg(1));
            variants.push_back({fq + "^1 by C2", {&f, 1, {minus}, {}, 1 << 16}});
            variants.push_back({fq + "^1 by C2 (trivial action)",
                                {&f, 1, {Matrix::identity(f, 1)}, {minus}, 1 << 16}});
            if ((q - 1) % 4 == 0) {
                for (uint32_t a = 2; a < q; ++a) {
                    if (f.multiplicative_order(a) == 4) {
                        Matrix g4(f, 1, 1);
                        g4.set(0, 0, a);
                        variants.push_back({fq + "^1 by C4", {&f, 1, {g4}, {}, 1 << 16}});
                        break;
                    }
                }
            }
            variants.push_back({fq + "^1 by 1", {&f, 1, {}, {}, 1 << 16}});
        }
        // m = 2: rotation (C4), quaternion (Q8), -I (C2), a reflection with
        // a fixed vector, the trivial-action C2 and a C4 acting through C2.
        {
            variants.push_back({fq + "^2 by C4", {&f, 2, {rotation_order4(f)}, {}, 1 << 16}});
            variants.push_back({fq + "^2 by Q8", {&f, 2, quaternion_matrices(f), {}, 1 << 16}});
            Matrix minus = Matrix::identity(f, 2);
            minus.set(0, 0, f.neg(1));
            minus.set(1, 1, f.neg(1));
            variants.push_back({fq + "^2 by -I", {&f, 2, {minus}, {}, 1 << 16}});
            Matrix swap(f, 2, 2);
            swap.set(0, 1, 1);
            swap.set(1, 0, 1);
            variants.push_back({fq + "^2 by swap (fixed vector)", {&f, 2, {swap}, {}, 1 << 16}});
            Matrix refl = Matrix::identity(f, 2);
            refl.set(1, 1, f.neg(1));
            variants.push_back(
                {fq + "^2 by diag(1,-1) (fixed vector)", {&f, 2, {refl}, {}, 1 << 16}});
            variants.push_back({fq + "^2 by C2 (trivial action)",
                                {&f, 2, {Matrix::identity(f, 2)}, {minus}, 1 << 16}});
            // Abstract C4 acting through its C2 quotient: kernel elements
            // act trivially, so composite orders appear.
            variants.push_back({fq + "^2 by C4 through C2",
                                {&f, 2, {minus}, {rotation_order4(f)}, 1 << 16}});
        }
    }
    return variants;
}

std::vector<CorpusEntry> semidirect_grid(const RunConfig&) {
    std::vector<CorpusEntry> out;
    for (const auto& v : semidirect_variants()) {
        const auto fpf = fixed_point_free(v.spec);
        // H here is always cyclic or quaternion, hence has prime-power
        // element orders; the criterion reduces to faithful + fixed point
        // free.
        const bool expected = fpf.faithful && fpf.fixed_point_free;
        out.push_back(table_entry(v.name, "semidirect", semidirect_product(v.spec), expected));
    }
    return out;
}

std::vector<CorpusEntry> build_corpus(const RunConfig& config) {
    std::vector<CorpusEntry> out;

    // Catalog members within the enumeration threshold.
    for (const auto& e : simple_eppo_catalog()) {
        if (!e.exhaustive || e.expected_order > config.enumeration_threshold) continue;
        out.push_back(perm_entry(e.name, "catalog", e.build(), true, config));
    }
    out.push_back(perm_entry("M9", "catalog", m9(), true, config));

    // Classic small groups.
    auto cyc = [](uint32_t n, const char* name, bool eppo) {
        return table_entry(name, "classic", cyclic_group(n), eppo);
    };
    out.push_back(cyc(6, "C6", false));
    out.push_back(cyc(30, "C30", false));
    out.push_back(perm_entry("S3", "classic",
                             PermGroup(3, {Permutation::from_cycles("(1 2 3)", 3),
                                           Permutation::from_cycles("(1 2)", 3)}),
                             true, config));
    out.push_back(perm_entry("S4", "classic",
                             PermGroup(4, {Permutation::from_cycles("(1 2 3 4)", 4),
                                           Permutation::from_cycles("(1 2)", 4)}),
                             true, config));
    out.push_back(table_entry("SL2(3)", "classic",
                              std::make_shared<MatrixClosureGroup>(
                                  sl2_generators(Field::get(3, 1)), 1000),
                              false));
    out.push_back(table_entry("Q8", "classic", generalized_quaternion(3), true));
    out.push_back(table_entry("Q16", "classic", generalized_quaternion(4), true));
    for (uint32_t n = 4; n <= 12; ++n) {
        // Dihedral of order 2n: prime-power element orders iff n is a
        // prime power (the rotation has order n).
        const bool eppo = is_prime_power(n);
        out.push_back(table_entry("D" + std::to_string(2 * n), "classic",
                                  dihedral_group(n), eppo));
    }

    auto grid1 = metacyclic_grid(config);
    out.insert(out.end(), std::make_move_iterator(grid1.begin()),
               std::make_move_iterator(grid1.end()));
    auto grid2 = semidirect_grid(config);
    out.insert(out.end(), std::make_move_iterator(grid2.begin()),
               std::make_move_iterator(grid2.end()));
    return out;
}

}  // namespace eppo
