#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eppo/analysis.hpp"
#include "eppo/eppo_check.hpp"
#include "eppo/finite_group.hpp"
#include "eppo/spectrum.hpp"

namespace eppo {

/**
 * @file structure.hpp
 * @brief Structure theory of groups with prime-power element orders:
 *        chief series and their factor patterns, coprime-subgroup shapes,
 *        quaternion Sylow consequences, supersolvability, and the
 *        classifier for the simple catalog.
 */

enum class CheckStatus { passed, failed, not_applicable, flagged };

std::string to_string(CheckStatus s);

struct CheckItem {
    std::string name;
    CheckStatus status;
    std::string detail;
};

struct ChiefFactor {
    uint64_t order = 0;
    uint64_t prime = 0;      // 0 when the factor order is not a prime power
    uint32_t exponent = 0;
    bool prime_power = false;

    std::string to_string() const;  // "2" or "3^2" or "60"
};

/**
 * A chief series computed bottom-up by repeatedly factoring out a minimal
 * normal subgroup (quotients realized as coset actions). Factors are listed
 * top-down: the first entry is the factor at the top of the series.
 */
struct ChiefSeriesReport {
    std::vector<ChiefFactor> factors;
    bool all_prime_power = true;

    std::string to_string() const;  // "[2, 2, 2; 3^2]"-style flat list
};

ChiefSeriesReport chief_series(const FiniteGroup& g);

/**
 * Factor-pattern check for a solvable two-prime group with prime-power
 * element orders. Writing |G| = p^a q^b with Q the maximal normal
 * q-subgroup (the prime q is forced: exactly one prime has a nontrivial
 * normal core in such a group):
 *
 *  - quaternion-sylow case (Sylow 2-subgroup generalized quaternion):
 *    factors are a copies of 2 on top of q-power factors q^(b_i) with
 *    every b_i > 1 and b | b_i, where b is the multiplicative order of
 *    q mod 2^(a-1).
 *  - normal-sylow case (Q is the full Sylow q-subgroup): a copies of p on
 *    top of k equal factors q^b, with b the multiplicative order of
 *    q mod p^a and beta = k*b; the nilpotency class of Q is at most k.
 *  - general case (Q a proper part of the Sylow q-subgroup): gamma copies
 *    of q, then a copies of p, then factors q^(b_i) with b | b_i, where
 *    q^gamma divides p - 1. The inequality gamma < b is evaluated but
 *    reported as flagged rather than pass/fail.
 */
struct ChiefPatternReport {
    bool applicable = false;
    std::string reason;  // when not applicable
    std::string case_name;
    uint64_t p = 0, q = 0;
    uint32_t alpha = 0, beta = 0, gamma = 0;
    uint64_t b = 0;
    std::vector<uint32_t> b_list;
    uint32_t k = 0;
    ChiefSeriesReport series;
    std::vector<CheckItem> checks;
    bool passed = false;

    std::string summary() const;
};

ChiefPatternReport chief_pattern_check(const FiniteGroup& g, uint64_t seed = 1);

/// Order 2^n (n >= 3) with a unique involution.
bool is_generalized_quaternion(const FiniteGroup& g, const Subgroup& p);

/**
 * Shape of subgroups with order coprime to q in a group with prime-power
 * element orders and a nontrivial normal q-subgroup: every such cyclic
 * subgroup <x> has prime-power order, and every Sylow p-subgroup (p != q)
 * is cyclic or, for p = 2, possibly generalized quaternion.
 */
struct HallShapeReport {
    bool applicable = false;
    std::string reason;
    std::vector<CheckItem> checks;
    bool passed = false;
};

HallShapeReport hall_shape_check(const FiniteGroup& g, uint64_t q, uint64_t seed = 1);

/**
 * Consequences of a quaternion Sylow 2-subgroup and the solvability
 * criteria attached to a nontrivial normal q-subgroup:
 *  - quaternion Sylow 2: at most two prime divisors, and the odd Sylow
 *    subgroup is normal;
 *  - a nontrivial normal q-subgroup with q odd, or equal to the full Sylow
 *    q-subgroup, or alongside an abelian Sylow 2-subgroup: G is solvable.
 */
struct SylowStructureReport {
    std::vector<CheckItem> checks;
    bool any_applied = false;
    bool passed = true;
};

SylowStructureReport quaternion_sylow_check(const FiniteGroup& g, uint64_t seed = 1);

/// A normal abelian subgroup not contained in the center; exists in every
/// nonabelian solvable group with prime-power element orders.
std::optional<Subgroup> noncentral_normal_abelian(const FiniteGroup& g);

/**
 * Exponent arithmetic for |G| = p^a q^b with a cyclic Sylow p-subgroup and
 * a minimal normal Sylow q-subgroup Q: when C_G(Q) = Q, the exponent b
 * equals the multiplicative order of q mod p^a. For groups with
 * prime-power element orders, C_G(Q) = Q holds automatically; that is
 * checked too when eppo_known is set.
 */
struct ExponentArithmeticReport {
    bool applicable = false;
    std::string reason;
    uint64_t p = 0, q = 0;
    uint32_t alpha = 0, beta = 0;
    bool centralizer_is_q = false;
    uint64_t expected_beta = 0;  // multiplicative order of q mod p^alpha
    std::vector<CheckItem> checks;
    bool passed = false;
};

ExponentArithmeticReport minimal_normal_exponent_check(const FiniteGroup& g,
                                                       bool eppo_known, uint64_t seed = 1);

/// Every chief factor has prime order. (Chief factor orders are
/// series-independent, so the computed series decides.)
bool is_supersolvable(const FiniteGroup& g);

/// For a group with prime-power element orders: supersolvable iff a normal
/// subgroup of prime order exists. Both sides are computed and compared.
struct SupersolvableReport {
    bool supersolvable = false;
    bool has_prime_order_normal = false;
    bool equivalent = false;
};

SupersolvableReport supersolvable_criterion_check(const FiniteGroup& g);

/// The five simple groups that can sit under a normal 2-subgroup extension.
enum class SimpleExtensionBase { psl2_5, psl2_8, psl2_17, sz8, sz32 };

std::string to_string(SimpleExtensionBase id);

/// The odd part that must divide |T| - 1: the product of the maximal odd
/// element orders of the base group (3*5, 3^2*7, 3^2*17, 5*7*13, 5^2*31*41).
uint64_t extension_constraint_product(SimpleExtensionBase id);

/// |T| - 1 divisible by the constraint product; t_order must be a power
/// of two (the normal subgroup T is a 2-group).
bool extension_order_constraint(SimpleExtensionBase id, uint64_t t_order);

/// Same check for T of order 2^k, usable up to k = 64.
bool extension_order_constraint_exp(SimpleExtensionBase id, uint32_t k);

enum class GroupClass {
    not_eppo,
    solvable_eppo,
    simple_eppo,
    a5_recognized,
    eppo_unclassified,
};

std::string to_string(GroupClass c);

/**
 * Classification verdict. The a5-recognized verdict fires exactly when the
 * order has at least three prime divisors and every element order is 1 or
 * prime; that evidence already forces the group to be A5, which the record
 * corroborates with order 60, spectrum {1,2,3,5} and simplicity.
 */
struct ClassificationRecord {
    GroupClass verdict = GroupClass::eppo_unclassified;
    std::string simple_name;
    uint64_t order = 0;
    std::vector<uint64_t> primes;
    Spectrum spectrum;
    EppoVerdict eppo;
    bool solvable = false;
    bool simple = false;
    std::optional<ChiefSeriesReport> chief;
    std::string detail;

    std::string summary() const;
};

/// Full pipeline on a dense group (within the enumeration threshold).
ClassificationRecord classify(const FiniteGroup& g);

/// Sampled evidence only, for permutation groups above the threshold:
/// refutes with a witness or matches the catalog by order.
ClassificationRecord classify_sampled(const PermGroup& g, uint64_t sample_n, uint64_t seed);

}  // namespace eppo
