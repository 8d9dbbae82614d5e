#include "eppo/numbers.hpp"

#include <algorithm>
#include <numeric>

#include "eppo/errors.hpp"

namespace eppo {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::vector<std::pair<uint64_t, uint32_t>> factorize(uint64_t n) {
    if (n == 0) throw PreconditionError("factorize: n must be positive");
    std::vector<std::pair<uint64_t, uint32_t>> out;
    for (uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            uint32_t e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<uint64_t> divisors(uint64_t n) {
    std::vector<uint64_t> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const size_t base = out.size();
        uint64_t pk = 1;
        for (uint32_t k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<uint64_t> prime_divisors(uint64_t n) {
    std::vector<uint64_t> out;
    for (const auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
    if (m == 0) throw PreconditionError("pow_mod: modulus must be positive");
    if (m == 1) return 0;
    uint64_t acc = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) acc = mul_mod(acc, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

uint64_t multiplicative_order(uint64_t a, uint64_t m) {
    if (m < 2) throw PreconditionError("multiplicative_order: modulus must be >= 2");
    a %= m;
    if (std::gcd(a, m) != 1)
        throw PreconditionError("multiplicative_order: base not coprime to modulus");
    // Euler's totient of m from its factorization.
    uint64_t phi = 1;
    for (const auto& [p, e] : factorize(m)) {
        phi *= p - 1;
        for (uint32_t k = 1; k < e; ++k) phi *= p;
    }
    uint64_t order = phi;
    for (const auto& [p, e] : factorize(phi)) {
        for (uint32_t k = 0; k < e && order % p == 0; ++k) {
            if (pow_mod(a, order / p, m) == 1)
                order /= p;
            else
                break;
        }
    }
    return order;
}

uint64_t p_part(uint64_t n, uint64_t p) {
    if (p < 2) throw PreconditionError("p_part: p must be >= 2");
    uint64_t out = 1;
    while (n % p == 0) {
        n /= p;
        out *= p;
    }
    return out;
}

bool is_prime_power(uint64_t n, uint64_t* prime, uint32_t* exponent) {
    if (n < 2) return false;
    auto f = factorize(n);
    if (f.size() != 1) return false;
    if (prime) *prime = f[0].first;
    if (exponent) *exponent = f[0].second;
    return true;
}

uint64_t ipow(uint64_t base, uint32_t exp) {
    uint64_t out = 1;
    for (uint32_t i = 0; i < exp; ++i) out *= base;
    return out;
}

}  // namespace eppo
