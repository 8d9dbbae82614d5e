#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eppo/permutation.hpp"
#include "eppo/rng.hpp"

namespace eppo {

/**
 * @brief A permutation group with a base and strong generating set.
 *
 * The stabilizer chain is built with a deterministic Schreier-Sims run:
 * base points are always the lowest moved point of the generator that
 * forces them, orbits are extended in BFS discovery order, and existing
 * transversal entries are never rewritten. Construction is therefore
 * reproducible across runs and platforms.
 *
 * Every element factors uniquely as u0 * u1 * ... * u(k-1) with ut drawn
 * from the level-t transversal, which is what order(), element streaming
 * and uniform random sampling rely on.
 */
class PermGroup {
public:
    PermGroup(uint32_t degree, std::vector<Permutation> generators);

    uint32_t degree() const { return degree_; }
    uint64_t order() const { return order_; }
    const std::vector<Permutation>& generators() const { return generators_; }

    std::vector<uint32_t> base() const;
    std::vector<Permutation> strong_generators() const;

    /// Membership by sifting through the stabilizer chain.
    /// Throws PreconditionError on degree mismatch.
    bool contains(const Permutation& g) const;

    /// Uniform random element: one transversal representative per level.
    Permutation random_element(SeededRng& rng) const;

    /// Streams each group element exactly once (transversal products,
    /// deepest level varying fastest).
    class ElementStream {
    public:
        bool done() const { return done_; }
        const Permutation& current() const { return current_; }
        void advance();

    private:
        friend class PermGroup;
        explicit ElementStream(const PermGroup& g);
        const PermGroup* group_;
        std::vector<size_t> index_;
        std::vector<Permutation> prefix_;  // prefix_[t] = u0 * ... * ut
        Permutation current_;
        bool done_;
        void recompute_from(size_t level);
    };

    /// Throws ThresholdError if order() > limit; the refusal names the limit.
    ElementStream elements(uint64_t limit) const;

    /// Collects the full element list (same threshold rule as elements()).
    std::vector<Permutation> enumerate(uint64_t limit) const;

private:
    struct Level {
        uint32_t base_point = 0;
        std::vector<Permutation> gens;
        std::vector<uint32_t> orbit;               // discovery order; orbit[0] = base_point
        std::vector<int32_t> orbit_pos;            // point -> index into orbit, or -1
        std::vector<Permutation> transversal;      // u with u(base_point) = orbit[i]
        std::vector<Permutation> transversal_inv;
        size_t checked_points = 0;                 // Schreier generators already verified
        size_t checked_gens = 0;
    };

    uint32_t degree_;
    std::vector<Permutation> generators_;
    std::vector<Level> levels_;
    uint64_t order_ = 1;

    void add_level(uint32_t base_point);
    void add_generator(size_t level, const Permutation& g);
    void extend_orbit(size_t level);
    /// Residue of g after sifting from `from_level`; second = level index at
    /// which sifting stopped (== levels_.size() when it ran off the chain).
    std::pair<Permutation, size_t> sift(Permutation g, size_t from_level) const;
    /// Returns the level to reprocess, or -1 when the level is clean.
    long process_level(size_t level);
    void build_chain();
};

}  // namespace eppo
