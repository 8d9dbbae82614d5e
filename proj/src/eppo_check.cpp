#include "eppo/eppo_check.hpp"

#include <numeric>
#include <sstream>

#include "eppo/errors.hpp"
#include "eppo/numbers.hpp"

namespace eppo {

std::string to_string(EppoMethod m) {
    switch (m) {
        case EppoMethod::exhaustive: return "exhaustive";
        case EppoMethod::commuting_pairs: return "commuting-pairs";
        case EppoMethod::centralizer: return "centralizer";
        case EppoMethod::sylow_centralizer: return "sylow-centralizer";
        case EppoMethod::sampled: return "sampled";
    }
    return "?";
}

std::string EppoVerdict::summary() const {
    std::ostringstream out;
    if (is_eppo && definitive)
        out << "EPPO";
    else if (is_eppo)
        out << "sampled-consistent";
    else
        out << "not EPPO";
    out << " [" << to_string(method) << "]";
    if (witness) {
        out << " witness:";
        for (const auto& [name, ord] : witness->elements)
            out << ' ' << name << " (order " << ord << ")";
        if (!witness->note.empty()) out << " -- " << witness->note;
    }
    return out.str();
}

namespace {

bool prime_power_or_one(uint64_t d) { return d == 1 || is_prime_power(d); }

EppoVerdict positive(EppoMethod m) {
    EppoVerdict v;
    v.is_eppo = true;
    v.method = m;
    return v;
}

EppoVerdict negative(EppoMethod m, EppoWitness w) {
    EppoVerdict v;
    v.is_eppo = false;
    v.method = m;
    v.witness = std::move(w);
    return v;
}

}  // namespace

EppoVerdict is_eppo_exhaustive(const FiniteGroup& g) {
    const auto& ords = g.element_orders();
    for (uint32_t x = 0; x < ords.size(); ++x) {
        if (!prime_power_or_one(ords[x])) {
            return negative(EppoMethod::exhaustive,
                            {{{g.element_name(x), ords[x]}}, "element of composite order"});
        }
    }
    return positive(EppoMethod::exhaustive);
}

EppoVerdict is_eppo_exhaustive(const PermGroup& g, uint64_t enumeration_limit) {
    for (auto it = g.elements(enumeration_limit); !it.done(); it.advance()) {
        const uint64_t d = it.current().order();
        if (!prime_power_or_one(d)) {
            return negative(EppoMethod::exhaustive, {{{it.current().to_cycle_string(), d}},
                                                     "element of composite order"});
        }
    }
    return positive(EppoMethod::exhaustive);
}

EppoVerdict is_eppo_commuting_pairs(const FiniteGroup& g, uint64_t pairwise_limit) {
    if (g.order() > pairwise_limit)
        throw ThresholdError(g.order(), pairwise_limit, "commuting-pairs scan");
    const uint32_t n = static_cast<uint32_t>(g.order());
    const auto& ords = g.element_orders();
    for (uint32_t x = 0; x < n; ++x) {
        if (ords[x] == 1) continue;
        for (uint32_t y = x + 1; y < n; ++y) {
            if (ords[y] == 1) continue;
            if (std::gcd(ords[x], ords[y]) != 1) continue;
            if (g.mul(x, y) == g.mul(y, x)) {
                return negative(EppoMethod::commuting_pairs,
                                {{{g.element_name(x), ords[x]}, {g.element_name(y), ords[y]}},
                                 "commuting pair with coprime orders"});
            }
        }
    }
    return positive(EppoMethod::commuting_pairs);
}

EppoVerdict is_eppo_centralizer(const FiniteGroup& g) {
    const auto classes = conjugacy_classes(g);
    const uint32_t e = g.identity();
    // Centralizers of class representatives, computed on demand.
    std::vector<std::optional<Subgroup>> cent(classes.size());
    auto centralizer_of = [&](size_t i) -> const Subgroup& {
        if (!cent[i]) cent[i] = centralizer(g, classes[i].representative);
        return *cent[i];
    };
    // The pair condition is symmetric, so unordered class pairs suffice.
    for (size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].element_order == 1) continue;
        for (size_t j = i + 1; j < classes.size(); ++j) {
            if (classes[j].element_order == 1) continue;
            if (std::gcd(classes[i].element_order, classes[j].element_order) != 1) continue;
            // Fix the representative with the smaller centralizer, scan the
            // other class in full.
            size_t fixed = i, scanned = j;
            if (centralizer_of(i).order() > centralizer_of(j).order()) std::swap(fixed, scanned);
            const Subgroup& cf = centralizer_of(fixed);
            const uint32_t rep = classes[fixed].representative;
            for (uint32_t y : classes[scanned].members) {
                for (uint32_t z : cf.elements) {
                    if (z == e) continue;
                    if (g.mul(z, y) == g.mul(y, z)) {
                        return negative(
                            EppoMethod::centralizer,
                            {{{g.element_name(rep), g.element_order(rep)},
                              {g.element_name(y), g.element_order(y)},
                              {g.element_name(z), g.element_order(z)}},
                             "third element centralizes both coprime-order elements"});
                    }
                }
            }
        }
    }
    return positive(EppoMethod::centralizer);
}

EppoVerdict is_eppo_sylow_centralizer(const FiniteGroup& g) {
    const auto classes = conjugacy_classes(g);
    for (const auto& cls : classes) {
        if (!is_prime(cls.element_order)) continue;
        const uint64_t p = cls.element_order;
        const Subgroup c = centralizer(g, cls.representative);
        for (uint32_t z : c.elements) {
            const uint64_t oz = g.element_order(z);
            if (oz != 1 && p_part(oz, p) != oz) {
                return negative(EppoMethod::sylow_centralizer,
                                {{{g.element_name(cls.representative), p},
                                  {g.element_name(z), oz}},
                                 "centralizer of a prime-order element is not a p-group"});
            }
        }
    }
    return positive(EppoMethod::sylow_centralizer);
}

EppoVerdict is_eppo_sampled(const PermGroup& g, uint64_t n, uint64_t seed) {
    SeededRng rng(seed);
    EppoVerdict v;
    v.method = EppoMethod::sampled;
    v.sample_count = n;
    v.seed = seed;
    for (uint64_t i = 0; i < n; ++i) {
        const Permutation x = g.random_element(rng);
        const uint64_t d = x.order();
        if (!prime_power_or_one(d)) {
            v.is_eppo = false;
            v.definitive = true;  // a composite order is a certificate
            v.witness = EppoWitness{{{x.to_cycle_string(), d}},
                                    "sampled element of composite order"};
            return v;
        }
    }
    v.is_eppo = true;
    v.definitive = false;  // sampling never proves the positive direction
    return v;
}

std::vector<EppoVerdict> all_applicable_eppo_checks(const FiniteGroup& g,
                                                    uint64_t enumeration_limit,
                                                    uint64_t pairwise_limit) {
    std::vector<EppoVerdict> out;
    if (g.order() > enumeration_limit)
        throw ThresholdError(g.order(), enumeration_limit, "EPPO predicate suite");
    out.push_back(is_eppo_exhaustive(g));
    if (g.order() <= pairwise_limit) out.push_back(is_eppo_commuting_pairs(g, pairwise_limit));
    out.push_back(is_eppo_centralizer(g));
    out.push_back(is_eppo_sylow_centralizer(g));
    return out;
}

uint64_t count_elements_of_order(const FiniteGroup& g, uint64_t d) {
    uint64_t count = 0;
    for (uint64_t o : g.element_orders())
        if (o == d) ++count;
    return count;
}

bool order_count_divisibility(const FiniteGroup& g, uint64_t h_order, uint64_t d) {
    if (d < 1) throw PreconditionError("order_count_divisibility: d must be >= 1");
    if (std::gcd(h_order, d) != 1)
        throw PreconditionError("order_count_divisibility: gcd(|H|, d) must be 1");
    if (h_order == 0 || g.order() % h_order != 0)
        throw PreconditionError("order_count_divisibility: |H| must divide |G|");
    return count_elements_of_order(g, d) % h_order == 0;
}

bool coprime_part_divisibility(const FiniteGroup& g, const Subgroup& n) {
    if (!is_normal(g, n))
        throw PreconditionError("coprime_part_divisibility: N must be normal");
    if (n.is_trivial())
        throw PreconditionError("coprime_part_divisibility: N must be nontrivial");
    uint64_t product = 1;
    for (uint64_t p : prime_divisors(g.order()))
        if (n.order() % p != 0) product *= p_part(g.order(), p);
    return (n.order() - 1) % product == 0;
}

}  // namespace eppo
