#include "eppo/perm_group.hpp"

#include <algorithm>

#include "eppo/errors.hpp"

namespace eppo {

PermGroup::PermGroup(uint32_t degree, std::vector<Permutation> generators)
    : degree_(degree) {
    if (degree == 0) throw PreconditionError("PermGroup: degree must be positive");
    for (const auto& g : generators) {
        if (g.degree() != degree)
            throw PreconditionError("PermGroup: generator degree " + std::to_string(g.degree()) +
                                    " does not match group degree " + std::to_string(degree));
        if (!g.is_identity()) generators_.push_back(g);
    }
    build_chain();
}

void PermGroup::add_level(uint32_t base_point) {
    Level lvl;
    lvl.base_point = base_point;
    lvl.orbit_pos.assign(degree_, -1);
    lvl.orbit.push_back(base_point);
    lvl.orbit_pos[base_point] = 0;
    lvl.transversal.push_back(Permutation::identity(degree_));
    lvl.transversal_inv.push_back(Permutation::identity(degree_));
    levels_.push_back(std::move(lvl));
}

void PermGroup::add_generator(size_t level, const Permutation& g) {
    auto& gens = levels_[level].gens;
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
}

void PermGroup::extend_orbit(size_t level) {
    Level& lvl = levels_[level];
    // Re-scan from the beginning whenever generators changed; existing
    // entries are never overwritten, so transversals stay stable and
    // previously verified Schreier generators keep their sift paths.
    for (size_t qi = 0; qi < lvl.orbit.size(); ++qi) {
        for (const auto& s : lvl.gens) {
            const uint32_t image = s(lvl.orbit[qi]);
            if (lvl.orbit_pos[image] < 0) {
                lvl.orbit_pos[image] = static_cast<int32_t>(lvl.orbit.size());
                lvl.orbit.push_back(image);
                Permutation u = s * lvl.transversal[qi];
                lvl.transversal_inv.push_back(u.inverse());
                lvl.transversal.push_back(std::move(u));
            }
        }
    }
}

std::pair<Permutation, size_t> PermGroup::sift(Permutation g, size_t from_level) const {
    for (size_t t = from_level; t < levels_.size(); ++t) {
        const Level& lvl = levels_[t];
        const uint32_t image = g(lvl.base_point);
        const int32_t pos = lvl.orbit_pos[image];
        if (pos < 0) return {std::move(g), t};
        g = lvl.transversal_inv[pos] * g;
    }
    return {std::move(g), levels_.size()};
}

long PermGroup::process_level(size_t level) {
    extend_orbit(level);
    Level& lvl = levels_[level];
    for (size_t pi = 0; pi < lvl.orbit.size(); ++pi) {
        for (size_t gi = 0; gi < lvl.gens.size(); ++gi) {
            if (pi < lvl.checked_points && gi < lvl.checked_gens) continue;
            const Permutation& s = lvl.gens[gi];
            const uint32_t image = s(lvl.orbit[pi]);
            const int32_t ipos = lvl.orbit_pos[image];
            // Schreier generator for (orbit point, generator); fixes the base point.
            Permutation sg = lvl.transversal_inv[ipos] * (s * lvl.transversal[pi]);
            if (sg.is_identity()) continue;
            auto [h, stuck] = sift(std::move(sg), level + 1);
            if (h.is_identity()) continue;
            if (stuck == levels_.size()) {
                const auto moved = h.lowest_moved_point();
                add_level(*moved);
            }
            for (size_t l = level + 1; l <= stuck; ++l) add_generator(l, h);
            return static_cast<long>(stuck);
        }
    }
    lvl.checked_points = lvl.orbit.size();
    lvl.checked_gens = lvl.gens.size();
    return -1;
}

void PermGroup::build_chain() {
    if (generators_.empty()) {
        order_ = 1;
        return;
    }
    // Initial base: every generator must move some base point.
    std::vector<uint32_t> base;
    for (const auto& g : generators_) {
        bool moves_base = false;
        for (uint32_t b : base)
            if (g(b) != b) {
                moves_base = true;
                break;
            }
        if (!moves_base) base.push_back(*g.lowest_moved_point());
    }
    for (uint32_t b : base) add_level(b);
    // Distribute each generator to every level whose preceding base points it fixes.
    for (const auto& g : generators_) {
        for (size_t l = 0; l < levels_.size(); ++l) {
            add_generator(l, g);
            if (g(levels_[l].base_point) != levels_[l].base_point) break;
        }
    }

    long i = static_cast<long>(levels_.size()) - 1;
    while (i >= 0) {
        const long jump = process_level(static_cast<size_t>(i));
        i = (jump < 0) ? i - 1 : jump;
    }

    order_ = 1;
    for (const auto& lvl : levels_) order_ *= lvl.orbit.size();
}

std::vector<uint32_t> PermGroup::base() const {
    std::vector<uint32_t> out;
    for (const auto& lvl : levels_) out.push_back(lvl.base_point);
    return out;
}

std::vector<Permutation> PermGroup::strong_generators() const {
    std::vector<Permutation> out;
    for (const auto& lvl : levels_) {
        for (const auto& g : lvl.gens)
            if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
    return out;
}

bool PermGroup::contains(const Permutation& g) const {
    if (g.degree() != degree_)
        throw PreconditionError("membership test: degree mismatch");
    auto [residue, level] = sift(g, 0);
    (void)level;
    return residue.is_identity();
}

Permutation PermGroup::random_element(SeededRng& rng) const {
    Permutation out = Permutation::identity(degree_);
    for (const auto& lvl : levels_) {
        const size_t pick = static_cast<size_t>(rng.below(lvl.orbit.size()));
        out = out * lvl.transversal[pick];
    }
    return out;
}

PermGroup::ElementStream::ElementStream(const PermGroup& g)
    : group_(&g),
      index_(g.levels_.size(), 0),
      current_(Permutation::identity(g.degree_)),
      done_(false) {
    prefix_.reserve(g.levels_.size());
    recompute_from(0);
}

void PermGroup::ElementStream::recompute_from(size_t level) {
    prefix_.erase(prefix_.begin() + static_cast<long>(level), prefix_.end());
    for (size_t t = level; t < group_->levels_.size(); ++t) {
        const Permutation& u = group_->levels_[t].transversal[index_[t]];
        if (t == 0)
            prefix_.push_back(u);
        else
            prefix_.push_back(prefix_[t - 1] * u);
    }
    current_ = prefix_.empty() ? Permutation::identity(group_->degree_) : prefix_.back();
}

void PermGroup::ElementStream::advance() {
    if (done_) return;
    if (index_.empty()) {
        done_ = true;
        return;
    }
    size_t t = index_.size();
    while (t > 0) {
        --t;
        if (++index_[t] < group_->levels_[t].orbit.size()) {
            recompute_from(t);
            return;
        }
        index_[t] = 0;
    }
    done_ = true;
}

PermGroup::ElementStream PermGroup::elements(uint64_t limit) const {
    if (order_ > limit) throw ThresholdError(order_, limit, "element enumeration");
    return ElementStream(*this);
}

std::vector<Permutation> PermGroup::enumerate(uint64_t limit) const {
    std::vector<Permutation> out;
    out.reserve(static_cast<size_t>(order_));
    for (auto it = elements(limit); !it.done(); it.advance()) out.push_back(it.current());
    return out;
}

}  // namespace eppo
