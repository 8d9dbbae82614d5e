#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "eppo/table_groups.hpp"

namespace eppo {

/**
 * Smallest r in [2, p^alpha) whose multiplicative order mod p^alpha is
 * exactly q^beta, or nullopt when no such r exists (equivalently, when
 * q^beta does not divide p - 1 for distinct primes p, q).
 */
std::optional<uint64_t> find_metacyclic_r(uint64_t p, uint32_t alpha, uint64_t q, uint32_t beta);

std::shared_ptr<MetacyclicGroup> metacyclic_group(const MetacyclicSpec& spec);

std::shared_ptr<GeneralizedQuaternionGroup> generalized_quaternion(uint32_t n);

std::shared_ptr<SemidirectGroup> semidirect_product(const SemidirectSpec& spec);

std::shared_ptr<CyclicGroup> cyclic_group(uint64_t n);
std::shared_ptr<DihedralGroup> dihedral_group(uint32_t n);

/// i, j with i^2 = j^2 = -I and ij = -ji; generate a quaternion group of
/// order 8 inside GL(2, q), q an odd prime.
std::vector<Matrix> quaternion_matrices(const Field& f);

/// Companion matrix of x^2 + 1: an order-4 rotation with no eigenvalue 1.
Matrix rotation_order4(const Field& f);

/// Standard generators of SL(2, q).
std::vector<Matrix> sl2_generators(const Field& f);

/**
 * Builds a table group from a constructor spec string:
 *   metacyclic p=5 a=1 q=2 b=2 [r=2]   (r defaults to find_metacyclic_r)
 *   semidirect q=3 m=2 H=Q8|C2|C4|-I|file:<path>
 *   genquat n=3
 *   cyclic n=30
 *   dihedral n=6                       (order 2n)
 */
std::shared_ptr<FiniteGroup> build_from_spec_string(const std::string& text);

}  // namespace eppo
