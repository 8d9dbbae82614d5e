#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eppo/analysis.hpp"
#include "eppo/finite_group.hpp"
#include "eppo/perm_group.hpp"
#include "eppo/spectrum.hpp"

namespace eppo {

enum class EppoMethod {
    exhaustive,
    commuting_pairs,
    centralizer,
    sylow_centralizer,
    sampled,
};

std::string to_string(EppoMethod m);

struct EppoWitness {
    /// The elements certifying the failure, as (printable name, order).
    std::vector<std::pair<std::string, uint64_t>> elements;
    std::string note;
};

/**
 * Outcome of one EPPO test. The four deterministic methods are definitive;
 * sampling can refute (a composite-order element is a certificate) but a
 * clean sample is only reported as consistent, never as a definitive yes.
 */
struct EppoVerdict {
    bool is_eppo = false;
    bool definitive = true;
    EppoMethod method = EppoMethod::exhaustive;
    std::optional<EppoWitness> witness;
    std::optional<uint64_t> sample_count;
    uint64_t seed = 0;

    std::string summary() const;
};

/// Every element order is 1 or a prime power; witness otherwise.
EppoVerdict is_eppo_exhaustive(const FiniteGroup& g);
EppoVerdict is_eppo_exhaustive(const PermGroup& g, uint64_t enumeration_limit);

/// No commuting pair of nontrivial elements with coprime orders.
/// Quadratic scan; refuses groups larger than pairwise_limit.
EppoVerdict is_eppo_commuting_pairs(const FiniteGroup& g, uint64_t pairwise_limit);

/**
 * Centralizer form: for nontrivial x, y of coprime orders, C(x) and C(y)
 * intersect trivially. Checked over ordered pairs of conjugacy classes with
 * one representative fixed and the other class scanned in full; conjugating
 * a witness pair moves one member onto the fixed representative, so this
 * covers all element pairs.
 */
EppoVerdict is_eppo_centralizer(const FiniteGroup& g);

/**
 * Sylow-centralizer form: the centralizer of every nontrivial p-subgroup
 * lies in a Sylow p-subgroup. For a nontrivial p-subgroup A and nontrivial
 * x in A, C(A) is contained in C(x), so it is enough that every prime-order
 * element has a p-group centralizer; class representatives cover all
 * prime-order elements by conjugacy invariance.
 */
EppoVerdict is_eppo_sylow_centralizer(const FiniteGroup& g);

/// Sampled check on a permutation group (for groups above the enumeration
/// threshold). Orders of n random elements must all be prime powers.
EppoVerdict is_eppo_sampled(const PermGroup& g, uint64_t n, uint64_t seed);

/// Every deterministic method applicable within the given limits, in a
/// fixed order. All verdicts agree on any group (they are equivalent
/// characterizations); the test suite asserts this across the corpus.
std::vector<EppoVerdict> all_applicable_eppo_checks(const FiniteGroup& g,
                                                    uint64_t enumeration_limit,
                                                    uint64_t pairwise_limit);

uint64_t count_elements_of_order(const FiniteGroup& g, uint64_t d);

/**
 * For an EPPO group G and a subgroup H with gcd(|H|, d) = 1: |H| divides
 * the number of elements of order d. Throws when gcd(|H|, d) != 1.
 */
bool order_count_divisibility(const FiniteGroup& g, uint64_t h_order, uint64_t d);

/**
 * For an EPPO group G with nontrivial normal N: the product of the full
 * p-parts of |G| over primes p not dividing |N| divides |N| - 1.
 * Throws when N is not normal.
 */
bool coprime_part_divisibility(const FiniteGroup& g, const Subgroup& n);

}  // namespace eppo
