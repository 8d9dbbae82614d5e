#include "eppo/permutation.hpp"

#include <numeric>
#include <sstream>

#include "eppo/errors.hpp"

namespace eppo {

Permutation::Permutation(std::vector<uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (uint32_t v : images_) {
        if (v >= images_.size() || seen[v])
            throw PreconditionError("Permutation: image table is not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(uint32_t degree) {
    std::vector<uint32_t> im(degree);
    std::iota(im.begin(), im.end(), 0u);
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (uint32_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (degree() != rhs.degree())
        throw PreconditionError("Permutation: composing permutations of different degrees");
    std::vector<uint32_t> im(images_.size());
    for (uint32_t i = 0; i < images_.size(); ++i) im[i] = images_[rhs.images_[i]];
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<uint32_t> im(images_.size());
    for (uint32_t i = 0; i < images_.size(); ++i) im[images_[i]] = i;
    return Permutation(std::move(im));
}

uint64_t Permutation::order() const {
    uint64_t ord = 1;
    std::vector<bool> seen(images_.size(), false);
    for (uint32_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        uint64_t len = 0;
        uint32_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = images_[j];
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

std::vector<std::vector<uint32_t>> Permutation::cycles() const {
    std::vector<std::vector<uint32_t>> out;
    std::vector<bool> seen(images_.size(), false);
    for (uint32_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == i) {
            seen[i] = true;
            continue;
        }
        std::vector<uint32_t> cyc;
        uint32_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            cyc.push_back(j);
            j = images_[j];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::optional<uint32_t> Permutation::lowest_moved_point() const {
    for (uint32_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return i;
    return std::nullopt;
}

std::string Permutation::to_cycle_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::ostringstream out;
    for (const auto& c : cs) {
        out << '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) out << ' ';
            out << c[i] + 1;  // 1-based in text
        }
        out << ')';
    }
    return out.str();
}

Permutation Permutation::from_cycles(const std::string& text, uint32_t degree) {
    std::vector<uint32_t> im(degree);
    std::iota(im.begin(), im.end(), 0u);
    std::vector<bool> used(degree, false);

    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
            ++pos;
    };

    skip_ws();
    bool saw_cycle = false;
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw ParseError("cycle notation: expected '(' in \"" + text + "\"");
        ++pos;
        std::vector<uint32_t> cyc;
        skip_ws();
        while (pos < text.size() && text[pos] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError("cycle notation: expected a point number in \"" + text + "\"");
            uint64_t v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + (text[pos] - '0');
                ++pos;
            }
            if (v < 1 || v > degree)
                throw ParseError("cycle notation: point " + std::to_string(v) +
                                 " out of range 1.." + std::to_string(degree));
            const uint32_t point = static_cast<uint32_t>(v - 1);
            if (used[point])
                throw ParseError("cycle notation: point " + std::to_string(v) +
                                 " appears twice; cycles must be disjoint");
            used[point] = true;
            cyc.push_back(point);
            skip_ws();
        }
        if (pos >= text.size()) throw ParseError("cycle notation: missing ')'");
        ++pos;  // ')'
        saw_cycle = true;
        for (size_t i = 0; i < cyc.size(); ++i) im[cyc[i]] = cyc[(i + 1) % cyc.size()];
        skip_ws();
    }
    if (!saw_cycle) throw ParseError("cycle notation: empty generator line");
    return Permutation(std::move(im));
}

}  // namespace eppo
