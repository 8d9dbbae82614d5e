#pragma once

#include <cstdint>
#include <vector>

#include "eppo/finite_group.hpp"
#include "eppo/perm_group.hpp"
#include "eppo/rng.hpp"

namespace eppo {

struct ConjugacyClass {
    uint32_t representative;         // least element index in the class
    std::vector<uint32_t> members;   // sorted
    uint64_t element_order;

    uint64_t size() const { return members.size(); }
};

/// Classes sorted by representative index; they partition the group.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);

/// Subgroup generated by the given element indices (BFS closure).
Subgroup generated_subgroup(const FiniteGroup& g, std::vector<uint32_t> gens);

/// Least normal subgroup containing the seeds: generators are closed under
/// conjugation by the group's generators, then the subgroup is regenerated.
Subgroup normal_closure(const FiniteGroup& g, std::vector<uint32_t> seeds);

/// The whole group as a Subgroup value.
Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);

/// All h with hx = xh. O(|G|) scan.
Subgroup centralizer(const FiniteGroup& g, uint32_t x);

/// All h commuting with every listed element.
Subgroup centralizer_of_set(const FiniteGroup& g, const std::vector<uint32_t>& xs);

Subgroup center(const FiniteGroup& g);

bool is_abelian(const FiniteGroup& g);
bool subgroup_is_abelian(const FiniteGroup& g, const Subgroup& h);
bool subgroup_is_cyclic(const FiniteGroup& g, const Subgroup& h);
bool is_normal(const FiniteGroup& g, const Subgroup& h);

/**
 * The full lattice of normal subgroups, found as joins of normal closures
 * of conjugacy classes. Sorted by (order, element list).
 */
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g);

/// Smallest-order normal closure of a single class: a minimal normal
/// subgroup (deterministic tie-break by class representative).
Subgroup minimal_normal_subgroup(const FiniteGroup& g);

/// Derived subgroup of a subgroup, computed inside `h`.
Subgroup derived_subgroup(const FiniteGroup& g, const Subgroup& h);

/// G >= G' >= G'' >= ..., ending when the series stabilizes. The first entry
/// is the whole group; solvable iff the last entry is trivial.
std::vector<Subgroup> derived_series(const FiniteGroup& g);

bool is_solvable(const FiniteGroup& g);

/// Exactly two normal subgroups (so the trivial group is not simple).
bool is_simple(const FiniteGroup& g);

/**
 * A Sylow p-subgroup: seeded with the p-part of a random element, then grown
 * by adjoining p-elements that normalize the current subgroup. The order
 * postcondition (full p-part of |G|) is checked before returning.
 */
Subgroup sylow_subgroup(const FiniteGroup& g, uint64_t p, SeededRng& rng);

/// [a, b] subgroup for element sets; used for lower central series.
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

/// Length of the lower central series of a subgroup (1 for abelian).
/// Throws if the series does not reach the trivial group.
uint32_t nilpotency_class(const FiniteGroup& g, const Subgroup& q);

/**
 * The quotient G/N realized as a permutation group: right cosets of N,
 * numbered by their least element index, acted on by right multiplication
 * with the generators of G. N must be normal.
 */
struct QuotientResult {
    PermGroup group;
    std::vector<uint32_t> coset_of;  // element index -> coset point
};
QuotientResult quotient_action(const FiniteGroup& g, const Subgroup& n);

}  // namespace eppo
