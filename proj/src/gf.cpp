#include "eppo/gf.hpp"

#include <map>
#include <memory>
#include <sstream>

#include "eppo/errors.hpp"
#include "eppo/numbers.hpp"

namespace eppo {

namespace {

// Fixed irreducible moduli for the extension fields the catalog needs
// (coefficients little-endian, monic).
const std::map<std::pair<uint32_t, uint32_t>, std::vector<uint32_t>>& modulus_table() {
    static const std::map<std::pair<uint32_t, uint32_t>, std::vector<uint32_t>> table = {
        {{2, 2}, {1, 1, 1}},           // x^2 + x + 1
        {{2, 3}, {1, 1, 0, 1}},        // x^3 + x + 1
        {{2, 4}, {1, 1, 0, 0, 1}},     // x^4 + x + 1
        {{2, 5}, {1, 0, 1, 0, 0, 1}},  // x^5 + x^2 + 1
        {{3, 2}, {2, 2, 1}},           // x^2 + 2x + 2
        {{5, 2}, {2, 4, 1}},           // x^2 + 4x + 2
    };
    return table;
}

// Polynomial arithmetic over GF(p) on little-endian digit vectors.
std::vector<uint32_t> poly_mul_mod(const std::vector<uint32_t>& a,
                                   const std::vector<uint32_t>& b,
                                   const std::vector<uint32_t>& modulus, uint32_t p) {
    std::vector<uint32_t> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // Reduce; modulus is monic of degree k.
    const size_t k = modulus.size() - 1;
    for (size_t d = prod.size(); d-- > k;) {
        const uint32_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (size_t j = 0; j < k; ++j)
            prod[d - k + j] = (prod[d - k + j] + c * (p - modulus[j])) % p;
    }
    prod.resize(k);
    return prod;
}

}  // namespace

Field::Field(uint32_t p, uint32_t k, std::vector<uint32_t> modulus)
    : p_(p), k_(k), q_(static_cast<uint32_t>(ipow(p, k))), modulus_(std::move(modulus)) {
    if (k_ == 1) {
        find_primitive();
        return;
    }
    // Build dense tables; all supported extension fields have q <= 32.
    auto decode = [&](uint32_t a) {
        std::vector<uint32_t> c(k_);
        for (uint32_t i = 0; i < k_; ++i) {
            c[i] = a % p_;
            a /= p_;
        }
        return c;
    };
    auto encode = [&](const std::vector<uint32_t>& c) {
        uint32_t a = 0;
        for (uint32_t i = k_; i-- > 0;) a = a * p_ + c[i];
        return a;
    };
    mul_table_.assign(static_cast<size_t>(q_) * q_, 0);
    add_table_.assign(static_cast<size_t>(q_) * q_, 0);
    neg_table_.assign(q_, 0);
    inv_table_.assign(q_, 0);
    for (uint32_t a = 0; a < q_; ++a) {
        const auto ca = decode(a);
        for (uint32_t b = 0; b <= a; ++b) {
            const auto cb = decode(b);
            std::vector<uint32_t> sum(k_);
            for (uint32_t i = 0; i < k_; ++i) sum[i] = (ca[i] + cb[i]) % p_;
            const uint32_t s = encode(sum);
            add_table_[static_cast<size_t>(a) * q_ + b] = s;
            add_table_[static_cast<size_t>(b) * q_ + a] = s;
            const uint32_t m = encode(poly_mul_mod(ca, cb, modulus_, p_));
            mul_table_[static_cast<size_t>(a) * q_ + b] = m;
            mul_table_[static_cast<size_t>(b) * q_ + a] = m;
        }
        std::vector<uint32_t> negc(k_);
        for (uint32_t i = 0; i < k_; ++i) negc[i] = (p_ - ca[i]) % p_;
        neg_table_[a] = encode(negc);
    }
    for (uint32_t a = 1; a < q_; ++a) {
        for (uint32_t b = 1; b < q_; ++b) {
            if (mul_table_[static_cast<size_t>(a) * q_ + b] == 1) {
                inv_table_[a] = b;
                break;
            }
        }
        if (inv_table_[a] == 0)
            throw InternalError("Field: modulus for " + name() + " is not irreducible");
    }
    find_primitive();
}

void Field::find_primitive() {
    for (uint32_t a = 1; a < q_; ++a) {
        if (multiplicative_order(a) == q_ - 1) {
            primitive_ = a;
            return;
        }
    }
    throw InternalError("Field: no primitive element found");
}

const Field& Field::get(uint32_t p, uint32_t k) {
    if (!is_prime(p)) throw PreconditionError("Field: characteristic must be prime");
    if (k == 0) throw PreconditionError("Field: extension degree must be >= 1");
    if (k == 1 && p >= (1u << 16))
        throw PreconditionError("Field: prime fields supported up to 2^16");
    static std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<Field>> registry;
    const auto key = std::make_pair(p, k);
    auto it = registry.find(key);
    if (it != registry.end()) return *it->second;
    std::vector<uint32_t> modulus;
    if (k > 1) {
        auto mit = modulus_table().find(key);
        if (mit == modulus_table().end())
            throw PreconditionError("Field: no fixed modulus for GF(" + std::to_string(p) + "^" +
                                    std::to_string(k) + ")");
        modulus = mit->second;
    }
    auto field = std::unique_ptr<Field>(new Field(p, k, std::move(modulus)));
    const Field& ref = *field;
    registry.emplace(key, std::move(field));
    return ref;
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    if (k_ == 1) return (a + b) % p_;
    return add_table_[static_cast<size_t>(a) * q_ + b];
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::neg(uint32_t a) const {
    if (k_ == 1) return (p_ - a) % p_;
    return neg_table_[a];
}

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    if (k_ == 1) return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
    return mul_table_[static_cast<size_t>(a) * q_ + b];
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) throw PreconditionError("Field: zero has no inverse");
    if (k_ == 1) return static_cast<uint32_t>(pow_mod(a, p_ - 2, p_));
    return inv_table_[a];
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
    uint32_t acc = 1;
    while (e > 0) {
        if (e & 1) acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1;
    }
    return acc;
}

uint32_t Field::from_int(int64_t n) const {
    int64_t r = n % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
}

std::vector<uint32_t> Field::coefficients(uint32_t a) const {
    std::vector<uint32_t> c(k_);
    for (uint32_t i = 0; i < k_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

uint32_t Field::from_coefficients(const std::vector<uint32_t>& c) const {
    if (c.size() > k_) throw PreconditionError("Field: too many coefficients");
    uint32_t a = 0;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_) throw PreconditionError("Field: coefficient out of range");
        a = a * p_ + c[i];
    }
    return a;
}

uint64_t Field::multiplicative_order(uint32_t a) const {
    if (a == 0) throw PreconditionError("Field: zero has no multiplicative order");
    uint64_t order = q_ - 1;
    for (const auto& [prime, e] : factorize(q_ - 1)) {
        for (uint32_t i = 0; i < e; ++i) {
            if (pow(a, order / prime) == 1)
                order /= prime;
            else
                break;
        }
    }
    return order;
}

uint32_t Field::primitive_element() const { return primitive_; }

std::string Field::element_to_string(uint32_t a) const {
    if (k_ == 1) return std::to_string(a);
    std::ostringstream out;
    out << '(';
    const auto c = coefficients(a);
    for (uint32_t i = 0; i < k_; ++i) {
        if (i) out << ',';
        out << c[i];
    }
    out << ')';
    return out.str();
}

std::string Field::name() const {
    if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
    return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

}  // namespace eppo
