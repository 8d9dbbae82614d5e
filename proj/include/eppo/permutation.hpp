#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eppo {

/**
 * @brief A permutation of {0, ..., degree-1}, stored as an image table.
 *
 * Composition convention: (a * b)(x) = a(b(x)), i.e. the right factor acts
 * first. Points are 0-based internally; all text I/O (cycle notation) is
 * 1-based.
 */
class Permutation {
public:
    /// Validates that `images` is a bijection.
    explicit Permutation(std::vector<uint32_t> images);

    static Permutation identity(uint32_t degree);

    /// Parses 1-based disjoint-cycle notation, e.g. "(1 2 3)(4 5)".
    /// "()" denotes the identity. Commas and extra whitespace are accepted.
    static Permutation from_cycles(const std::string& text, uint32_t degree);

    uint32_t degree() const { return static_cast<uint32_t>(images_.size()); }
    uint32_t operator()(uint32_t point) const { return images_[point]; }
    const std::vector<uint32_t>& images() const { return images_; }

    bool is_identity() const;

    Permutation operator*(const Permutation& rhs) const;
    Permutation inverse() const;

    /// Least n >= 1 with p^n = identity: the lcm of the cycle lengths.
    uint64_t order() const;

    /// Nontrivial cycles, each rotated to start at its least point and the
    /// list sorted by that point.
    std::vector<std::vector<uint32_t>> cycles() const;

    std::optional<uint32_t> lowest_moved_point() const;

    /// 1-based disjoint-cycle string; "()" for the identity.
    std::string to_cycle_string() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<uint32_t> images_;
};

struct PermutationHash {
    size_t operator()(const Permutation& p) const {
        // FNV-1a over the image words.
        uint64_t h = 1469598103934665603ull;
        for (uint32_t v : p.images()) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

}  // namespace eppo
