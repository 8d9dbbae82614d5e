#include "eppo/table_groups.hpp"

#include <sstream>

#include "eppo/errors.hpp"
#include "eppo/numbers.hpp"
#include "eppo/perm_dense.hpp"
#include "eppo/rng.hpp"

namespace eppo {

void TableGroup::finalize() {
    const uint64_t n = order();
    if (n == 0 || n > (1ull << 26))
        throw PreconditionError("TableGroup: unreasonable order " + std::to_string(n));
    const uint32_t e = identity();
    const uint32_t count = static_cast<uint32_t>(n);

    inverse_.assign(count, UINT32_MAX);
    for (uint32_t a = 0; a < count; ++a) {
        if (mul(e, a) != a || mul(a, e) != a)
            throw InternalError(describe() + ": identity law fails");
    }
    for (uint32_t a = 0; a < count; ++a) {
        if (inverse_[a] != UINT32_MAX) continue;
        bool found = false;
        for (uint32_t b = 0; b < count; ++b) {
            if (mul(a, b) == e) {
                if (mul(b, a) != e) throw InternalError(describe() + ": one-sided inverse");
                inverse_[a] = b;
                inverse_[b] = a;
                found = true;
                break;
            }
        }
        if (!found) throw InternalError(describe() + ": element without inverse");
    }
    // Sampled associativity; full verification is quadratic in order and
    // lives in the test suite.
    SeededRng rng(0x5eed + count);
    for (int t = 0; t < 64; ++t) {
        const uint32_t a = static_cast<uint32_t>(rng.below(count));
        const uint32_t b = static_cast<uint32_t>(rng.below(count));
        const uint32_t c = static_cast<uint32_t>(rng.below(count));
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw InternalError(describe() + ": associativity spot-check fails");
    }
    orders_ = orders_by_iteration(*this);
}

CyclicGroup::CyclicGroup(uint64_t n) : n_(n) {
    if (n == 0) throw PreconditionError("CyclicGroup: order must be positive");
    finalize();
}

DihedralGroup::DihedralGroup(uint32_t n) : n_(n) {
    if (n < 1) throw PreconditionError("DihedralGroup: n must be >= 1");
    finalize();
}

uint32_t DihedralGroup::mul(uint32_t a, uint32_t b) const {
    const uint32_t i = a >> 1, j = a & 1;
    const uint32_t k = b >> 1, l = b & 1;
    const uint32_t rot = j == 0 ? (i + k) % n_ : (i + n_ - k % n_) % n_;
    return rot * 2 + (j ^ l);
}

std::vector<uint32_t> DihedralGroup::generators() const {
    std::vector<uint32_t> out;
    if (n_ > 1) out.push_back(2);  // rotation (1, 0)
    out.push_back(1);              // reflection (0, 1)
    return out;
}

std::string DihedralGroup::element_name(uint32_t a) const {
    return "r^" + std::to_string(a >> 1) + (a & 1 ? " s" : "");
}

GeneralizedQuaternionGroup::GeneralizedQuaternionGroup(uint32_t n) : n_(n) {
    if (n < 3)
        throw PreconditionError("generalized quaternion group needs order >= 8 (n >= 3)");
    if (n > 20) throw PreconditionError("generalized quaternion: n too large");
    half_ = 1u << (n - 1);
    finalize();
}

uint32_t GeneralizedQuaternionGroup::mul(uint32_t a, uint32_t b) const {
    const uint32_t i = a >> 1, j = a & 1;
    const uint32_t k = b >> 1, l = b & 1;
    uint32_t rot = j == 0 ? (i + k) % half_ : (i + half_ - k % half_) % half_;
    if (j == 1 && l == 1) rot = (rot + half_ / 2) % half_;  // b^2 = a^(2^(n-2))
    return rot * 2 + (j ^ l);
}

std::vector<uint32_t> GeneralizedQuaternionGroup::generators() const {
    return {2, 1};  // a = (1, 0), b = (0, 1)
}

std::string GeneralizedQuaternionGroup::element_name(uint32_t a) const {
    return "a^" + std::to_string(a >> 1) + (a & 1 ? " b" : "");
}

uint64_t MetacyclicSpec::pa() const { return ipow(p, alpha); }
uint64_t MetacyclicSpec::qb() const { return ipow(q, beta); }

uint64_t MetacyclicSpec::r_order() const { return eppo::multiplicative_order(r, pa()); }

void MetacyclicSpec::validate() const {
    if (!is_prime(p) || !is_prime(q) || p == q)
        throw PreconditionError("metacyclic: p and q must be distinct primes");
    if (alpha < 1 || beta < 1) throw PreconditionError("metacyclic: alpha, beta must be >= 1");
    if (r < 2 || r >= pa())
        throw PreconditionError("metacyclic: r must lie in [2, p^alpha)");
    if (r % p == 0) throw PreconditionError("metacyclic: r must be invertible mod p^alpha");
    if (pow_mod(r, qb(), pa()) != 1)
        throw PreconditionError("metacyclic: r^(q^beta) != 1 (mod p^alpha); relation b^-1 a b = a^r "
                                "does not define a group of order p^alpha * q^beta");
}

std::string MetacyclicSpec::to_string() const {
    std::ostringstream out;
    out << "metacyclic p=" << p << " a=" << alpha << " q=" << q << " b=" << beta << " r=" << r;
    return out.str();
}

MetacyclicGroup::MetacyclicGroup(const MetacyclicSpec& spec) : spec_(spec) {
    spec_.validate();
    pa_ = static_cast<uint32_t>(spec_.pa());
    qb_ = static_cast<uint32_t>(spec_.qb());
    rpow_.resize(qb_);
    rpow_[0] = 1;
    for (uint32_t j = 1; j < qb_; ++j)
        rpow_[j] = static_cast<uint32_t>(mul_mod(rpow_[j - 1], spec_.r, pa_));
    finalize();
}

uint32_t MetacyclicGroup::mul(uint32_t a, uint32_t b) const {
    const uint32_t i = a / qb_, j = a % qb_;
    const uint32_t k = b / qb_, l = b % qb_;
    const uint32_t first = static_cast<uint32_t>((i + mul_mod(k, rpow_[j], pa_)) % pa_);
    return first * qb_ + (j + l) % qb_;
}

std::vector<uint32_t> MetacyclicGroup::generators() const {
    return {qb_, 1};  // a = (1, 0), b = (0, 1)
}

std::string MetacyclicGroup::element_name(uint32_t e) const {
    return "a^" + std::to_string(e / qb_) + " b^" + std::to_string(e % qb_);
}

std::string MetacyclicGroup::describe() const {
    return "metacyclic group " + spec_.to_string() + " of order " + std::to_string(order());
}

namespace {

struct HPairClosure {
    std::vector<Matrix> ref, act;
};

HPairClosure close_pairs(const SemidirectSpec& spec) {
    if (!spec.field) throw PreconditionError("semidirect: missing field");
    if (spec.field->extension_degree() != 1)
        throw PreconditionError("semidirect: the normal subgroup must be elementary abelian, "
                                "use a prime field");
    const Field& f = *spec.field;
    const uint32_t m = spec.dimension;
    if (m == 0) throw PreconditionError("semidirect: dimension must be >= 1");
    const auto& refs = spec.reference_gens.empty() ? spec.action_gens : spec.reference_gens;
    if (refs.size() != spec.action_gens.size())
        throw PreconditionError("semidirect: reference/action generator counts differ");
    for (const auto& g : spec.action_gens)
        if (&g.field() != &f || g.rows() != m || g.cols() != m || !g.is_invertible())
            throw PreconditionError("semidirect: action generators must be invertible m x m "
                                    "matrices over the base field");

    HPairClosure out;
    const uint32_t rdim = refs.empty() ? 1 : refs[0].rows();
    out.ref.push_back(Matrix::identity(refs.empty() ? f : refs[0].field(), rdim));
    out.act.push_back(Matrix::identity(f, m));
    std::unordered_map<Matrix, std::vector<uint32_t>, MatrixHash> seen_ref;
    auto key_known = [&](const Matrix& r, const Matrix& a) {
        auto it = seen_ref.find(r);
        if (it == seen_ref.end()) return false;
        for (uint32_t i : it->second)
            if (out.act[i] == a) return true;
        return false;
    };
    seen_ref[out.ref[0]].push_back(0);
    for (size_t qi = 0; qi < out.ref.size(); ++qi) {
        for (size_t gi = 0; gi < refs.size(); ++gi) {
            Matrix r = out.ref[qi] * refs[gi];
            Matrix a = out.act[qi] * spec.action_gens[gi];
            if (key_known(r, a)) continue;
            seen_ref[r].push_back(static_cast<uint32_t>(out.ref.size()));
            out.ref.push_back(std::move(r));
            out.act.push_back(std::move(a));
            if (out.ref.size() > spec.closure_cap)
                throw CapExceededError("semidirect: H closure exceeds cap");
        }
    }
    // The action must factor through the abstract group: equal reference
    // parts must carry equal action parts.
    for (const auto& [r, idxs] : seen_ref)
        for (size_t i = 1; i < idxs.size(); ++i)
            if (!(out.act[idxs[i]] == out.act[idxs[0]]))
                throw PreconditionError("semidirect: action is not a homomorphic image of the "
                                        "reference group");
    return out;
}

}  // namespace

FixedPointFreeResult fixed_point_free(const SemidirectSpec& spec) {
    const auto pairs = close_pairs(spec);
    FixedPointFreeResult out{};
    out.h_order = pairs.ref.size();
    std::unordered_map<Matrix, uint32_t, MatrixHash> images;
    for (const auto& a : pairs.act) ++images[a];
    out.image_order = images.size();
    out.faithful = out.image_order == out.h_order;
    out.fixed_point_free = true;
    for (const auto& [img, cnt] : images) {
        if (img.is_identity()) continue;
        if (has_eigenvalue_one(img)) {
            out.fixed_point_free = false;
            break;
        }
    }
    return out;
}

SemidirectGroup::SemidirectGroup(const SemidirectSpec& spec) {
    const auto pairs = close_pairs(spec);
    f_ = spec.field;
    m_ = spec.dimension;
    const uint64_t vcount = ipow(f_->size(), m_);
    if (vcount * pairs.ref.size() > (1ull << 24))
        throw PreconditionError("semidirect: group too large");
    qm_ = static_cast<uint32_t>(vcount);
    h_count_ = static_cast<uint32_t>(pairs.ref.size());
    if (std::gcd(static_cast<uint64_t>(h_count_), static_cast<uint64_t>(f_->size())) != 1)
        throw PreconditionError("semidirect: |H| must be coprime to the field size");

    // H multiplication table via pair multiplication.
    std::unordered_map<Matrix, std::vector<uint32_t>, MatrixHash> by_ref;
    for (uint32_t i = 0; i < h_count_; ++i) by_ref[pairs.ref[i]].push_back(i);
    auto h_index = [&](const Matrix& r) -> uint32_t {
        auto it = by_ref.find(r);
        if (it == by_ref.end() || it->second.size() != 1)
            throw InternalError("semidirect: reference closure is not a faithful copy");
        return it->second[0];
    };
    hmul_.assign(static_cast<size_t>(h_count_) * h_count_, 0);
    for (uint32_t i = 0; i < h_count_; ++i)
        for (uint32_t j = 0; j < h_count_; ++j)
            hmul_[static_cast<size_t>(i) * h_count_ + j] = h_index(pairs.ref[i] * pairs.ref[j]);

    // Vector action per h.
    auto decode = [&](uint32_t v) {
        std::vector<uint32_t> c(m_);
        for (uint32_t i = 0; i < m_; ++i) {
            c[i] = v % f_->size();
            v /= f_->size();
        }
        return c;
    };
    auto encode = [&](const std::vector<uint32_t>& c) {
        uint32_t v = 0;
        for (uint32_t i = m_; i-- > 0;) v = v * f_->size() + c[i];
        return v;
    };
    vact_.resize(h_count_);
    for (uint32_t h = 0; h < h_count_; ++h) {
        vact_[h].resize(qm_);
        for (uint32_t v = 0; v < qm_; ++v) vact_[h][v] = encode(pairs.act[h].apply(decode(v)));
    }
    hname_.resize(h_count_);
    for (uint32_t h = 0; h < h_count_; ++h) hname_[h] = pairs.ref[h].to_string();

    id_ = 0;  // (zero vector, identity pair): both closures start at identity
    // Generators: translations by basis vectors plus the H generators.
    for (uint32_t i = 0; i < m_; ++i) {
        std::vector<uint32_t> c(m_, 0);
        c[i] = 1;
        gen_indices_.push_back(encode(c) * h_count_);
    }
    const auto& refs = spec.reference_gens.empty() ? spec.action_gens : spec.reference_gens;
    for (const auto& r : refs) gen_indices_.push_back(h_index(r));
    finalize();
}

uint32_t SemidirectGroup::mul(uint32_t a, uint32_t b) const {
    const uint32_t v = a / h_count_, h = a % h_count_;
    const uint32_t w = b / h_count_, k = b % h_count_;
    // (v, h)(w, k) = (v + h.w, hk); addition is coordinatewise mod q.
    const uint32_t hw = vact_[h][w];
    uint32_t sum = 0;
    uint32_t mult = 1;
    uint32_t x = v, y = hw;
    for (uint32_t i = 0; i < m_; ++i) {
        const uint32_t digit = (x % f_->size() + y % f_->size()) % f_->size();
        sum += digit * mult;
        mult *= f_->size();
        x /= f_->size();
        y /= f_->size();
    }
    return sum * h_count_ + hmul_[static_cast<size_t>(h) * h_count_ + k];
}

std::vector<uint32_t> SemidirectGroup::generators() const { return gen_indices_; }

std::string SemidirectGroup::element_name(uint32_t a) const {
    const uint32_t v = a / h_count_, h = a % h_count_;
    std::vector<uint32_t> c(m_);
    uint32_t x = v;
    for (uint32_t i = 0; i < m_; ++i) {
        c[i] = x % f_->size();
        x /= f_->size();
    }
    std::ostringstream out;
    out << "(";
    for (uint32_t i = 0; i < m_; ++i) {
        if (i) out << ',';
        out << c[i];
    }
    out << "; " << hname_[h] << ")";
    return out.str();
}

std::string SemidirectGroup::describe() const {
    return "semidirect product " + f_->name() + "^" + std::to_string(m_) +
           " by H of order " + std::to_string(h_count_);
}

MatrixClosureGroup::MatrixClosureGroup(const std::vector<Matrix>& gens, uint64_t cap) {
    elems_ = matrix_group_closure(gens, cap);
    index_.reserve(elems_.size() * 2);
    for (uint32_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
    for (const auto& g : gens) gen_indices_.push_back(index_.at(g));
    finalize();
}

uint32_t MatrixClosureGroup::mul(uint32_t a, uint32_t b) const {
    return index_.at(elems_[a] * elems_[b]);
}

std::string MatrixClosureGroup::describe() const {
    return "matrix group over " + elems_[0].field().name() + ", dimension " +
           std::to_string(elems_[0].rows()) + ", order " + std::to_string(elems_.size());
}

PermGroup regular_representation(const FiniteGroup& g) {
    const uint32_t n = static_cast<uint32_t>(g.order());
    std::vector<Permutation> gens;
    for (uint32_t a : g.generators()) {
        std::vector<uint32_t> im(n);
        for (uint32_t x = 0; x < n; ++x) im[x] = g.mul(a, x);
        gens.emplace_back(std::move(im));
    }
    PermGroup out(n == 0 ? 1 : n, std::move(gens));
    if (out.order() != g.order())
        throw InternalError("regular_representation: order mismatch");
    return out;
}

}  // namespace eppo
