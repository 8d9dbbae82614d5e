#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eppo {

/**
 * @brief Arithmetic in GF(p^k).
 *
 * Elements are encoded as integers in [0, p^k): the base-p digits of the
 * encoding are the polynomial coefficients c0 + c1*x + ... (little-endian),
 * reduced modulo a fixed irreducible polynomial. Each supported extension
 * field uses one published modulus (Conway-style), so element encodings are
 * identical across runs and platforms. Prime fields (k = 1) are plain
 * modular arithmetic and support any prime p < 2^16.
 *
 * Instances live in a process-wide registry; use Field::get.
 */
class Field {
public:
    static const Field& get(uint32_t p, uint32_t k);

    uint32_t characteristic() const { return p_; }
    uint32_t extension_degree() const { return k_; }
    uint32_t size() const { return q_; }
    /// Monic modulus coefficients c0..ck (empty for prime fields).
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    uint32_t zero() const { return 0; }
    uint32_t one() const { return 1; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;  // a != 0
    uint32_t pow(uint32_t a, uint64_t e) const;

    /// Embeds an integer via the prime subfield (n mod p).
    uint32_t from_int(int64_t n) const;

    /// Little-endian coefficient vector of length k.
    std::vector<uint32_t> coefficients(uint32_t a) const;
    uint32_t from_coefficients(const std::vector<uint32_t>& c) const;

    /// Least e >= 1 with a^e = 1; a must be nonzero.
    uint64_t multiplicative_order(uint32_t a) const;

    /// Smallest generator of the multiplicative group.
    uint32_t primitive_element() const;

    /// "7" for prime-field elements, "(c0,c1,...)" otherwise.
    std::string element_to_string(uint32_t a) const;

    /// "GF(7)" or "GF(2^5)".
    std::string name() const;

private:
    Field(uint32_t p, uint32_t k, std::vector<uint32_t> modulus);
    void find_primitive();

    uint32_t p_, k_, q_;
    std::vector<uint32_t> modulus_;
    // Dense tables for extension fields (all supported ones have q <= 32).
    std::vector<uint32_t> mul_table_, add_table_;
    std::vector<uint32_t> inv_table_, neg_table_;
    uint32_t primitive_ = 0;
};

}  // namespace eppo
