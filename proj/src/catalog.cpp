#include "eppo/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "eppo/constructors.hpp"
#include "eppo/errors.hpp"
#include "eppo/numbers.hpp"

namespace eppo {

namespace {

using Point = std::vector<uint32_t>;

/// Scales so the first nonzero coordinate is 1.
Point canonical_projective(const Field& f, Point v) {
    for (uint32_t c : v) {
        if (c != 0) {
            const uint32_t s = f.inv(c);
            for (auto& x : v) x = f.mul(s, x);
            return v;
        }
    }
    throw InternalError("canonical_projective: zero vector");
}

/// All projective points of dimension dim over f, canonicalized and sorted.
std::vector<Point> projective_points(const Field& f, uint32_t dim) {
    std::vector<Point> out;
    const uint64_t total = ipow(f.size(), dim);
    for (uint64_t code = 1; code < total; ++code) {
        Point v(dim);
        uint64_t c = code;
        for (uint32_t i = 0; i < dim; ++i) {
            v[i] = static_cast<uint32_t>(c % f.size());
            c /= f.size();
        }
        // Keep only vectors already in canonical form; each projective point
        // then appears exactly once.
        if (canonical_projective(f, v) == v) out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// The permutation a matrix induces on a canonical point list.
Permutation matrix_point_action(const Matrix& m, const std::vector<Point>& points,
                                const std::map<Point, uint32_t>& index) {
    std::vector<uint32_t> im(points.size());
    for (uint32_t i = 0; i < points.size(); ++i) {
        const Point target = canonical_projective(m.field(), m.apply(points[i]));
        auto it = index.find(target);
        if (it == index.end())
            throw InternalError("matrix action does not preserve the point set");
        im[i] = it->second;
    }
    return Permutation(std::move(im));
}

PermGroup matrix_action_group(const std::vector<Matrix>& gens,
                              const std::vector<Point>& points) {
    std::map<Point, uint32_t> index;
    for (uint32_t i = 0; i < points.size(); ++i) index.emplace(points[i], i);
    std::vector<Permutation> perms;
    perms.reserve(gens.size());
    for (const auto& m : gens) perms.push_back(matrix_point_action(m, points, index));
    return PermGroup(static_cast<uint32_t>(points.size()), std::move(perms));
}

}  // namespace

PermGroup alternating_5() {
    return PermGroup(5, {Permutation::from_cycles("(1 2 3 4 5)", 5),
                         Permutation::from_cycles("(1 2 3)", 5)});
}

PermGroup psl2(uint32_t q) {
    const auto factors = factorize(q);
    if (q < 4 || factors.size() != 1)
        throw PreconditionError("psl2: q must be a prime power >= 4");
    const uint32_t p = static_cast<uint32_t>(factors[0].first);
    const uint32_t k = factors[0].second;
    const Field& f = Field::get(p, k);

    // Translation, torus and Weyl generators of SL(2, q). The translation
    // alone only reaches the prime subfield, so the torus element is
    // required to generate the full Borel subgroup when q is not prime.
    Matrix t(f, 2, 2);
    t.set(0, 0, f.one());
    t.set(0, 1, f.one());
    t.set(1, 1, f.one());

    const uint32_t z = f.primitive_element();
    Matrix h(f, 2, 2);
    h.set(0, 0, z);
    h.set(1, 1, f.inv(z));

    Matrix s(f, 2, 2);
    s.set(0, 1, f.neg(f.one()));
    s.set(1, 0, f.one());

    return matrix_action_group({t, h, s}, projective_points(f, 2));
}

PermGroup psl3_4() {
    const Field& f = Field::get(2, 2);
    // Elementary transvections I + c*E(i,j) for c in a basis of GF(4)
    // generate SL(3, 4).
    std::vector<Matrix> gens;
    for (uint32_t i = 0; i < 3; ++i)
        for (uint32_t j = 0; j < 3; ++j) {
            if (i == j) continue;
            for (uint32_t c : {1u, 2u}) {  // 1 and x
                Matrix m = Matrix::identity(f, 3);
                m.set(i, j, c);
                gens.push_back(std::move(m));
            }
        }
    return matrix_action_group(gens, projective_points(f, 3));
}

PermGroup suzuki(uint32_t q) {
    uint32_t e = 0;
    if (q == 8)
        e = 1;
    else if (q == 32)
        e = 2;
    else
        throw PreconditionError("suzuki: q must be 8 or 32");
    const Field& f = Field::get(2, 2 * e + 1);
    const uint64_t theta = 1ull << (e + 1);  // x -> x^theta squares to the Frobenius of q

    auto fpow = [&](uint32_t a, uint64_t n) { return f.pow(a, n); };
    auto ovoid_f = [&](uint32_t a, uint32_t b) {
        // f(a, b) = a^(theta+2) + ab + b^theta
        return f.add(f.add(fpow(a, theta + 2), f.mul(a, b)), fpow(b, theta));
    };

    // Lower unitriangular S(a, b): column 1 is the ovoid point (1, a, b, f(a,b)).
    auto s_ab = [&](uint32_t a, uint32_t b) {
        Matrix m = Matrix::identity(f, 4);
        m.set(1, 0, a);
        m.set(2, 0, b);
        m.set(2, 1, fpow(a, theta));
        m.set(3, 0, ovoid_f(a, b));
        m.set(3, 1, f.add(fpow(a, theta + 1), b));
        m.set(3, 2, a);
        return m;
    };

    // Torus: fixes both distinguished points, scales (a, b) to (za, z^(theta+1) b).
    const uint32_t z = f.primitive_element();
    const uint32_t half = 1u << e;  // 2^e
    Matrix torus(f, 4, 4);
    torus.set(0, 0, f.inv(fpow(z, half + 1)));
    torus.set(1, 1, f.inv(fpow(z, half)));
    torus.set(2, 2, fpow(z, half));
    torus.set(3, 3, fpow(z, half + 1));

    // Flip: swaps the two distinguished ovoid points.
    Matrix flip(f, 4, 4);
    for (uint32_t i = 0; i < 4; ++i) flip.set(i, 3 - i, f.one());

    // The ovoid: (0,0,0,1) plus (1, a, b, f(a,b)) for all a, b.
    std::vector<Point> points;
    points.push_back({0, 0, 0, 1});
    for (uint32_t a = 0; a < f.size(); ++a)
        for (uint32_t b = 0; b < f.size(); ++b) points.push_back({1, a, b, ovoid_f(a, b)});
    std::sort(points.begin(), points.end());

    return matrix_action_group({s_ab(1, 0), s_ab(0, 1), torus, flip}, points);
}

PermGroup m9() {
    const Field& f3 = Field::get(3, 1);
    // Points: the 9 vectors of GF(3)^2, ordered lexicographically.
    std::vector<std::pair<uint32_t, uint32_t>> pts;
    for (uint32_t x = 0; x < 3; ++x)
        for (uint32_t y = 0; y < 3; ++y) pts.emplace_back(x, y);
    auto index_of = [&](uint32_t x, uint32_t y) { return x * 3 + y; };

    auto translation = [&](uint32_t dx, uint32_t dy) {
        std::vector<uint32_t> im(9);
        for (const auto& [x, y] : pts) im[index_of(x, y)] = index_of((x + dx) % 3, (y + dy) % 3);
        return Permutation(std::move(im));
    };
    auto linear = [&](const Matrix& m) {
        std::vector<uint32_t> im(9);
        for (const auto& [x, y] : pts) {
            const auto v = m.apply({x, y});
            im[index_of(x, y)] = index_of(v[0], v[1]);
        }
        return Permutation(std::move(im));
    };
    const auto q8 = quaternion_matrices(f3);
    return PermGroup(9, {translation(1, 0), translation(0, 1), linear(q8[0]), linear(q8[1])});
}

namespace {

uint64_t psl2_order(uint64_t q) { return q * (q * q - 1) / std::gcd<uint64_t>(2, q - 1); }
uint64_t suzuki_order(uint64_t q) { return q * q * (q * q + 1) * (q - 1); }

}  // namespace

const std::vector<CatalogEntry>& simple_eppo_catalog() {
    // Expected spectra regenerated from this library's own exhaustive
    // enumerations (catalog tests recompute them); Sz(32) lists the orders
    // allowed by its element structure: divisors of 4, q-1 and q +- 2^(e+1) + 1.
    static const std::vector<CatalogEntry> entries = {
        {"A5", 60, {1, 2, 3, 5}, 5, true, [] { return alternating_5(); }},
        {"PSL2(7)", psl2_order(7), {1, 2, 3, 4, 7}, 8, true, [] { return psl2(7); }},
        {"PSL2(8)", psl2_order(8), {1, 2, 3, 7, 9}, 9, true, [] { return psl2(8); }},
        {"PSL2(9)", psl2_order(9), {1, 2, 3, 4, 5}, 10, true, [] { return psl2(9); }},
        {"PSL2(17)", psl2_order(17), {1, 2, 3, 4, 8, 9, 17}, 18, true, [] { return psl2(17); }},
        {"PSL3(4)", 20160, {1, 2, 3, 4, 5, 7}, 21, true, [] { return psl3_4(); }},
        {"Sz(8)", suzuki_order(8), {1, 2, 4, 5, 7, 13}, 65, true, [] { return suzuki(8); }},
        {"Sz(32)", suzuki_order(32), {1, 2, 4, 5, 25, 31, 41}, 1025, false,
         [] { return suzuki(32); }},
    };
    return entries;
}

PermGroup build_catalog_group(const std::string& name) {
    for (const auto& entry : simple_eppo_catalog())
        if (entry.name == name) return entry.build();
    if (name == "M9") return m9();
    if (name.rfind("PSL2(", 0) == 0 && name.back() == ')') {
        const std::string body = name.substr(5, name.size() - 6);
        try {
            return psl2(static_cast<uint32_t>(std::stoul(body)));
        } catch (const std::invalid_argument&) {
            throw ParseError("catalog: bad PSL2 parameter in '" + name + "'");
        } catch (const std::out_of_range&) {
            throw ParseError("catalog: bad PSL2 parameter in '" + name + "'");
        }
    }
    if (name == "Sz8") return suzuki(8);
    if (name == "Sz32") return suzuki(32);
    throw ParseError("catalog: unknown group '" + name +
                     "' (try A5, PSL2(q), PSL3(4), Sz(8), Sz(32), M9)");
}

bool is_catalog_name(const std::string& name) {
    for (const auto& entry : simple_eppo_catalog())
        if (entry.name == name) return true;
    if (name == "M9" || name == "Sz8" || name == "Sz32") return true;
    return name.rfind("PSL2(", 0) == 0 && name.back() == ')';
}

}  // namespace eppo
