#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "eppo/gf_matrix.hpp"
#include "eppo/perm_group.hpp"

namespace eppo {

/**
 * @file catalog.hpp
 * @brief Constructions of the eight simple groups in which every element
 *        has prime power order, plus the PSL2 family for boundary tests
 *        and the sharply 2-transitive group M9.
 *
 * Matrix groups are converted to permutation groups on projective points
 * immediately. Projective points are canonicalized by scaling the first
 * nonzero coordinate to 1 and the point lists are sorted, so point
 * numbering is identical on every run and platform.
 */

/// A5 on 5 points, generated by (1 2 3 4 5) and (1 2 3).
PermGroup alternating_5();

/**
 * PSL(2, q) acting on the q+1 points of the projective line, generated by
 * x -> x + 1, x -> z^2 x (z a fixed primitive element) and x -> -1/x.
 * q must be a supported field size (any prime < 2^16, or 4, 8, 9, 16, 25,
 * 32). Order q(q^2-1)/gcd(2, q-1).
 */
PermGroup psl2(uint32_t q);

/// PSL(3, 4) on the 21 points of the projective plane over GF(4),
/// via elementary transvections of SL(3, 4). Order 20160.
PermGroup psl3_4();

/**
 * Suzuki group Sz(q), q = 8 or 32, acting on the q^2 + 1 points of the
 * Suzuki ovoid in PG(3, q): the lower unitriangular family S(a, b), a
 * diagonal torus generator and the antidiagonal flip. Order
 * q^2 (q^2 + 1)(q - 1).
 */
PermGroup suzuki(uint32_t q);

/// The sharply 2-transitive affine group GF(3)^2 x| Q8 on 9 points,
/// order 72 (translations plus the fixed-point-free quaternion action).
PermGroup m9();

struct CatalogEntry {
    std::string name;
    uint64_t expected_order;  // closed-form order formula
    std::vector<uint64_t> expected_spectrum;
    uint32_t degree;
    bool exhaustive;  // false for the one entry past the default threshold
    std::function<PermGroup()> build;
};

/// The eight simple groups with prime-power element orders, in ascending
/// order of group order.
const std::vector<CatalogEntry>& simple_eppo_catalog();

/// Case-sensitive catalog names: A5, PSL2(q), PSL3(4), Sz(8), Sz(32), M9.
/// Throws ParseError for unknown names.
PermGroup build_catalog_group(const std::string& name);

bool is_catalog_name(const std::string& name);

}  // namespace eppo
