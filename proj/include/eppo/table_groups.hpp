#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "eppo/finite_group.hpp"
#include "eppo/gf_matrix.hpp"
#include "eppo/perm_group.hpp"

namespace eppo {

/// Common base for explicitly table-represented groups. Construction runs a
/// spot-check of the group axioms: identity laws, inverses, and sampled
/// associativity triples.
class TableGroup : public FiniteGroup {
public:
    const std::vector<uint64_t>& element_orders() const override { return orders_; }
    uint32_t inv(uint32_t a) const override { return inverse_[a]; }

protected:
    /// Call at the end of every derived constructor.
    void finalize();

    std::vector<uint32_t> inverse_;
    std::vector<uint64_t> orders_;
};

class CyclicGroup final : public TableGroup {
public:
    explicit CyclicGroup(uint64_t n);
    uint64_t order() const override { return n_; }
    uint32_t identity() const override { return 0; }
    uint32_t mul(uint32_t a, uint32_t b) const override {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) + b) % n_);
    }
    std::vector<uint32_t> generators() const override { return n_ > 1 ? std::vector<uint32_t>{1} : std::vector<uint32_t>{}; }
    std::string element_name(uint32_t a) const override { return "g^" + std::to_string(a); }
    std::string describe() const override { return "cyclic group of order " + std::to_string(n_); }

private:
    uint64_t n_;
};

/// Dihedral group of order 2n on pairs (i mod n, j mod 2).
class DihedralGroup final : public TableGroup {
public:
    explicit DihedralGroup(uint32_t n);
    uint64_t order() const override { return 2ull * n_; }
    uint32_t identity() const override { return 0; }
    uint32_t mul(uint32_t a, uint32_t b) const override;
    std::vector<uint32_t> generators() const override;
    std::string element_name(uint32_t a) const override;
    std::string describe() const override {
        return "dihedral group of order " + std::to_string(2 * n_);
    }

private:
    uint32_t n_;
};

/**
 * Generalized quaternion group of order 2^n (n >= 3) on pairs
 * (i mod 2^(n-1), j mod 2) with b^2 = a^(2^(n-2)) and b^-1 a b = a^-1.
 * Has a unique involution and a cyclic subgroup of index 2.
 */
class GeneralizedQuaternionGroup final : public TableGroup {
public:
    explicit GeneralizedQuaternionGroup(uint32_t n);
    uint64_t order() const override { return 2ull * half_; }
    uint32_t identity() const override { return 0; }
    uint32_t mul(uint32_t a, uint32_t b) const override;
    std::vector<uint32_t> generators() const override;
    std::string element_name(uint32_t a) const override;
    std::string describe() const override {
        return "generalized quaternion group of order " + std::to_string(2 * half_);
    }
    uint32_t parameter_n() const { return n_; }

private:
    uint32_t n_;
    uint32_t half_;  // 2^(n-1)
};

/// Parameters for the two-generator metacyclic presentation
/// a^(p^alpha) = 1, b^(q^beta) = 1, b^-1 a b = a^r.
struct MetacyclicSpec {
    uint64_t p = 0, q = 0;
    uint32_t alpha = 1, beta = 1;
    uint64_t r = 0;

    uint64_t pa() const;           // p^alpha
    uint64_t qb() const;           // q^beta
    uint64_t r_order() const;      // multiplicative order of r mod p^alpha
    void validate() const;         // primes distinct, r in [2, p^alpha), r^(q^beta) = 1
    std::string to_string() const;
};

/**
 * Metacyclic group on pairs (i mod p^alpha, j mod q^beta) with
 * (i, j) * (k, l) = (i + k * r^j, j + l). Order p^alpha * q^beta.
 */
class MetacyclicGroup final : public TableGroup {
public:
    explicit MetacyclicGroup(const MetacyclicSpec& spec);
    uint64_t order() const override { return pa_ * qb_; }
    uint32_t identity() const override { return 0; }
    uint32_t mul(uint32_t a, uint32_t b) const override;
    std::vector<uint32_t> generators() const override;
    std::string element_name(uint32_t a) const override;
    std::string describe() const override;
    const MetacyclicSpec& spec() const { return spec_; }

private:
    MetacyclicSpec spec_;
    uint32_t pa_, qb_;
    std::vector<uint32_t> rpow_;  // r^j mod p^alpha for j < q^beta
};

/**
 * Semidirect product of an elementary abelian group GF(q)^m by a group H of
 * invertible matrices. H is tracked as pairs (reference, action): the
 * reference generators are a faithful copy fixing the abstract group, the
 * action generators define how it acts on the vectors (possibly with a
 * kernel). Elements are (v, h); (v, h) * (w, k) = (v + act(h) w, hk).
 */
struct SemidirectSpec {
    const Field* field = nullptr;  // prime field GF(q)
    uint32_t dimension = 0;        // m
    std::vector<Matrix> action_gens;
    std::vector<Matrix> reference_gens;  // empty => same as action_gens
    uint64_t closure_cap = 1 << 16;
};

struct FixedPointFreeResult {
    bool fixed_point_free;  // no nontrivial element of the image has eigenvalue 1
    bool faithful;          // image size equals abstract group order
    uint64_t h_order;
    uint64_t image_order;
};

/// Evaluates the action: closure of the (reference, action) pairs.
FixedPointFreeResult fixed_point_free(const SemidirectSpec& spec);

class SemidirectGroup final : public TableGroup {
public:
    explicit SemidirectGroup(const SemidirectSpec& spec);
    uint64_t order() const override { return static_cast<uint64_t>(qm_) * h_count_; }
    uint32_t identity() const override { return id_; }
    uint32_t mul(uint32_t a, uint32_t b) const override;
    std::vector<uint32_t> generators() const override;
    std::string element_name(uint32_t a) const override;
    std::string describe() const override;

    uint64_t h_order() const { return h_count_; }
    uint64_t vector_count() const { return qm_; }

private:
    const Field* f_;
    uint32_t m_;
    uint32_t qm_;
    uint32_t h_count_;
    uint32_t id_;
    std::vector<uint32_t> hmul_;          // h_count x h_count
    std::vector<std::vector<uint32_t>> vact_;  // per h: vector index -> vector index
    std::vector<std::string> hname_;
    std::vector<uint32_t> gen_indices_;
};

/// Group formed by the multiplicative closure of invertible matrices.
class MatrixClosureGroup final : public TableGroup {
public:
    MatrixClosureGroup(const std::vector<Matrix>& gens, uint64_t cap);
    uint64_t order() const override { return elems_.size(); }
    uint32_t identity() const override { return 0; }
    uint32_t mul(uint32_t a, uint32_t b) const override;
    std::vector<uint32_t> generators() const override { return gen_indices_; }
    std::string element_name(uint32_t a) const override { return elems_[a].to_string(); }
    std::string describe() const override;
    const Matrix& matrix(uint32_t a) const { return elems_[a]; }

private:
    std::vector<Matrix> elems_;
    std::unordered_map<Matrix, uint32_t, MatrixHash> index_;
    std::vector<uint32_t> gen_indices_;
};

/// Left-multiplication action of a group on itself; degree = order.
PermGroup regular_representation(const FiniteGroup& g);

}  // namespace eppo
