#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace eppo {

bool is_prime(uint64_t n);

/// Prime factorization as sorted (prime, exponent) pairs; n must be >= 1.
std::vector<std::pair<uint64_t, uint32_t>> factorize(uint64_t n);

/// All divisors of n, sorted ascending.
std::vector<uint64_t> divisors(uint64_t n);

/// Distinct primes dividing n, sorted ascending.
std::vector<uint64_t> prime_divisors(uint64_t n);

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m);
uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m);

/// Least e >= 1 with a^e = 1 (mod m); requires gcd(a, m) = 1 and m >= 2.
uint64_t multiplicative_order(uint64_t a, uint64_t m);

/// The full p-part of n: the largest power of p dividing n.
uint64_t p_part(uint64_t n, uint64_t p);

/// True iff n = p^k for a prime p and k >= 1. Outputs are optional.
bool is_prime_power(uint64_t n, uint64_t* prime = nullptr, uint32_t* exponent = nullptr);

uint64_t ipow(uint64_t base, uint32_t exp);

}  // namespace eppo
