#include "eppo/perm_dense.hpp"

#include <algorithm>

#include "eppo/errors.hpp"

namespace eppo {

std::vector<uint64_t> orders_by_iteration(const FiniteGroup& g) {
    const uint32_t n = static_cast<uint32_t>(g.order());
    const uint32_t e = g.identity();
    std::vector<uint64_t> orders(n, 1);
    for (uint32_t x = 0; x < n; ++x) {
        uint64_t ord = 1;
        uint32_t acc = x;
        while (acc != e) {
            acc = g.mul(acc, x);
            ++ord;
        }
        orders[x] = ord;
    }
    return orders;
}

PermDenseGroup::PermDenseGroup(const PermGroup& g, uint64_t enumeration_limit)
    : degree_(g.degree()) {
    elements_ = g.enumerate(enumeration_limit);
    std::sort(elements_.begin(), elements_.end());
    index_.reserve(elements_.size() * 2);
    for (uint32_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);

    const Permutation id = Permutation::identity(degree_);
    identity_ = index_.at(id);

    gen_indices_.reserve(g.generators().size());
    for (const auto& gen : g.generators()) gen_indices_.push_back(index_.at(gen));

    inverse_.resize(elements_.size());
    orders_.resize(elements_.size());
    for (uint32_t i = 0; i < elements_.size(); ++i) {
        inverse_[i] = index_.at(elements_[i].inverse());
        orders_[i] = elements_[i].order();
    }
}

std::optional<uint32_t> PermDenseGroup::index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::string PermDenseGroup::describe() const {
    return "permutation group of degree " + std::to_string(degree_) + ", order " +
           std::to_string(elements_.size());
}

}  // namespace eppo
