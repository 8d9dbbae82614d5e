#include "eppo/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "eppo/errors.hpp"
#include "eppo/numbers.hpp"

namespace eppo {

namespace {

std::vector<uint32_t> sorted_unique(std::vector<uint32_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
    const uint32_t n = static_cast<uint32_t>(g.order());
    const auto gens = g.generators();
    std::vector<bool> seen(n, false);
    std::vector<ConjugacyClass> out;
    for (uint32_t x = 0; x < n; ++x) {
        if (seen[x]) continue;
        ConjugacyClass cls;
        cls.representative = x;
        cls.element_order = g.element_order(x);
        std::vector<uint32_t> queue{x};
        seen[x] = true;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            for (uint32_t a : gens) {
                const uint32_t y = g.conjugate(a, queue[qi]);
                if (!seen[y]) {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        cls.members = sorted_unique(std::move(queue));
        out.push_back(std::move(cls));
    }
    return out;
}

Subgroup generated_subgroup(const FiniteGroup& g, std::vector<uint32_t> gens) {
    Subgroup h;
    h.parent = &g;
    std::vector<bool> in(static_cast<size_t>(g.order()), false);
    std::vector<uint32_t> queue{g.identity()};
    in[g.identity()] = true;
    gens = sorted_unique(std::move(gens));
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        for (uint32_t s : gens) {
            const uint32_t y = g.mul(queue[qi], s);
            if (!in[y]) {
                in[y] = true;
                queue.push_back(y);
            }
        }
    }
    h.elements = sorted_unique(std::move(queue));
    h.gens = std::move(gens);
    return h;
}

Subgroup normal_closure(const FiniteGroup& g, std::vector<uint32_t> seeds) {
    const auto group_gens = g.generators();
    std::vector<uint32_t> hgens = sorted_unique(std::move(seeds));
    hgens.erase(std::remove(hgens.begin(), hgens.end(), g.identity()), hgens.end());
    Subgroup h = generated_subgroup(g, hgens);
    bool grew = true;
    while (grew) {
        grew = false;
        for (uint32_t a : group_gens) {
            for (size_t i = 0; i < hgens.size(); ++i) {
                const uint32_t c = g.conjugate(a, hgens[i]);
                if (!h.contains(c)) {
                    hgens.push_back(c);
                    h = generated_subgroup(g, hgens);
                    grew = true;
                }
            }
        }
    }
    return h;
}

Subgroup whole_group(const FiniteGroup& g) {
    Subgroup h;
    h.parent = &g;
    h.elements.resize(static_cast<size_t>(g.order()));
    std::iota(h.elements.begin(), h.elements.end(), 0u);
    h.gens = g.generators();
    if (h.gens.empty()) h.gens.push_back(g.identity());
    return h;
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
    Subgroup h;
    h.parent = &g;
    h.elements = {g.identity()};
    return h;
}

Subgroup centralizer(const FiniteGroup& g, uint32_t x) {
    Subgroup h;
    h.parent = &g;
    const uint32_t n = static_cast<uint32_t>(g.order());
    for (uint32_t y = 0; y < n; ++y)
        if (g.mul(x, y) == g.mul(y, x)) h.elements.push_back(y);
    h.gens = h.elements;
    return h;
}

Subgroup centralizer_of_set(const FiniteGroup& g, const std::vector<uint32_t>& xs) {
    Subgroup h;
    h.parent = &g;
    const uint32_t n = static_cast<uint32_t>(g.order());
    for (uint32_t y = 0; y < n; ++y) {
        bool ok = true;
        for (uint32_t x : xs)
            if (g.mul(x, y) != g.mul(y, x)) {
                ok = false;
                break;
            }
        if (ok) h.elements.push_back(y);
    }
    h.gens = h.elements;
    return h;
}

Subgroup center(const FiniteGroup& g) {
    auto gens = g.generators();
    if (gens.empty()) return whole_group(g);
    return centralizer_of_set(g, gens);
}

bool is_abelian(const FiniteGroup& g) {
    const auto gens = g.generators();
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
    return true;
}

bool subgroup_is_abelian(const FiniteGroup& g, const Subgroup& h) {
    for (size_t i = 0; i < h.elements.size(); ++i)
        for (size_t j = i + 1; j < h.elements.size(); ++j)
            if (g.mul(h.elements[i], h.elements[j]) != g.mul(h.elements[j], h.elements[i]))
                return false;
    return true;
}

bool subgroup_is_cyclic(const FiniteGroup& g, const Subgroup& h) {
    for (uint32_t x : h.elements)
        if (g.element_order(x) == h.order()) return true;
    return false;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
    for (uint32_t a : g.generators())
        for (uint32_t x : h.gens.empty() ? h.elements : h.gens)
            if (!h.contains(g.conjugate(a, x))) return false;
    return true;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
    const auto classes = conjugacy_classes(g);
    std::map<std::vector<uint32_t>, Subgroup> found;
    auto insert = [&](Subgroup s) {
        found.emplace(s.elements, std::move(s));
    };
    insert(trivial_subgroup(g));
    // Atoms: normal closures of single conjugacy classes.
    for (const auto& cls : classes) {
        if (cls.representative == g.identity() && cls.size() == 1) continue;
        insert(normal_closure(g, {cls.representative}));
    }
    // Close under joins. The join of two normal subgroups is the subgroup
    // generated by both, again normal.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<const Subgroup*> current;
        for (const auto& [k, v] : found) current.push_back(&v);
        for (size_t i = 0; i < current.size() && !grew; ++i) {
            for (size_t j = i + 1; j < current.size() && !grew; ++j) {
                if (current[i]->is_whole_group() || current[j]->is_whole_group()) continue;
                std::vector<uint32_t> joint = current[i]->gens;
                joint.insert(joint.end(), current[j]->gens.begin(), current[j]->gens.end());
                Subgroup join = generated_subgroup(g, std::move(joint));
                if (!found.count(join.elements)) {
                    insert(std::move(join));
                    grew = true;
                }
            }
        }
        if (found.size() > 10000)
            throw InternalError("normal_subgroups: lattice unexpectedly large");
    }
    if (!found.count(whole_group(g).elements)) insert(whole_group(g));

    std::vector<Subgroup> out;
    for (auto& [k, v] : found) out.push_back(std::move(v));
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements < b.elements;
    });
    return out;
}

Subgroup minimal_normal_subgroup(const FiniteGroup& g) {
    if (g.order() == 1)
        throw PreconditionError("minimal_normal_subgroup: trivial group has none");
    const auto classes = conjugacy_classes(g);
    Subgroup best;
    for (const auto& cls : classes) {
        if (g.element_order(cls.representative) == 1) continue;
        Subgroup cand = normal_closure(g, {cls.representative});
        if (best.parent == nullptr || cand.order() < best.order() ||
            (cand.order() == best.order() && cand.elements < best.elements))
            best = std::move(cand);
    }
    return best;
}

Subgroup derived_subgroup(const FiniteGroup& g, const Subgroup& h) {
    const std::vector<uint32_t>& hg = h.gens.empty() ? h.elements : h.gens;
    std::vector<uint32_t> comms;
    for (uint32_t a : hg)
        for (uint32_t b : hg) comms.push_back(g.commutator(a, b));
    comms = [&] {
        std::sort(comms.begin(), comms.end());
        comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
        return comms;
    }();
    // Normal closure inside h.
    Subgroup d = generated_subgroup(g, comms);
    bool grew = true;
    while (grew) {
        grew = false;
        for (uint32_t a : hg) {
            for (size_t i = 0; i < comms.size(); ++i) {
                const uint32_t c = g.conjugate(a, comms[i]);
                if (!d.contains(c)) {
                    comms.push_back(c);
                    d = generated_subgroup(g, comms);
                    grew = true;
                }
            }
        }
    }
    return d;
}

std::vector<Subgroup> derived_series(const FiniteGroup& g) {
    std::vector<Subgroup> series{whole_group(g)};
    while (true) {
        Subgroup next = derived_subgroup(g, series.back());
        if (next.order() == series.back().order()) break;
        series.push_back(std::move(next));
        if (series.back().is_trivial()) break;
    }
    return series;
}

bool is_solvable(const FiniteGroup& g) {
    return derived_series(g).back().is_trivial();
}

bool is_simple(const FiniteGroup& g) {
    if (g.order() == 1) return false;
    return normal_subgroups(g).size() == 2;
}

Subgroup sylow_subgroup(const FiniteGroup& g, uint64_t p, SeededRng& rng) {
    if (!is_prime(p)) throw PreconditionError("sylow_subgroup: p must be prime");
    const uint64_t target = p_part(g.order(), p);
    if (target == 1)
        throw PreconditionError("sylow_subgroup: " + std::to_string(p) +
                                " does not divide the group order");
    const uint32_t n = static_cast<uint32_t>(g.order());
    const auto& orders = g.element_orders();

    auto p_power_part = [&](uint32_t x) -> uint32_t {
        // x^(m') where |x| = p^a * m': a p-element (possibly identity).
        uint64_t m = orders[x];
        uint64_t rest = m;
        while (rest % p == 0) rest /= p;
        uint32_t acc = g.identity();
        for (uint64_t i = 0; i < rest; ++i) acc = g.mul(acc, x);
        return acc;
    };

    // Random seeding, bounded; Cauchy guarantees a p-element exists.
    Subgroup sub = trivial_subgroup(g);
    for (int attempt = 0; attempt < 1000 && sub.is_trivial(); ++attempt) {
        const uint32_t x = p_power_part(static_cast<uint32_t>(rng.below(n)));
        if (x != g.identity()) sub = generated_subgroup(g, {x});
    }
    if (sub.is_trivial()) {
        for (uint32_t x = 0; x < n && sub.is_trivial(); ++x) {
            const uint32_t y = p_power_part(x);
            if (y != g.identity()) sub = generated_subgroup(g, {y});
        }
    }

    // Grow by adjoining p-elements that normalize the current subgroup.
    // While |P| < p-part, the normalizer of P always contains one.
    while (sub.order() < target) {
        bool grown = false;
        for (uint32_t x = 0; x < n; ++x) {
            if (sub.contains(x)) continue;
            const uint64_t ox = orders[x];
            if (ox == 1 || p_part(ox, p) != ox) continue;
            bool normalizes = true;
            for (uint32_t s : sub.gens)
                if (!sub.contains(g.conjugate(x, s))) {
                    normalizes = false;
                    break;
                }
            if (!normalizes) continue;
            std::vector<uint32_t> next_gens = sub.gens;
            next_gens.push_back(x);
            Subgroup next = generated_subgroup(g, std::move(next_gens));
            if (next.order() > sub.order() && p_part(next.order(), p) == next.order()) {
                sub = std::move(next);
                grown = true;
                break;
            }
        }
        if (!grown) break;
    }
    if (sub.order() != target)
        throw InternalError("sylow_subgroup: growth stalled at order " +
                            std::to_string(sub.order()) + ", expected " + std::to_string(target));
    return sub;
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
    std::vector<uint32_t> comms;
    for (uint32_t x : a.elements)
        for (uint32_t y : b.elements) comms.push_back(g.commutator(x, y));
    return generated_subgroup(g, std::move(comms));
}

uint32_t nilpotency_class(const FiniteGroup& g, const Subgroup& q) {
    if (q.is_trivial()) return 0;
    uint32_t cls = 0;
    Subgroup current = q;
    while (!current.is_trivial()) {
        Subgroup next = commutator_subgroup(g, current, q);
        if (next.order() == current.order())
            throw PreconditionError("nilpotency_class: lower central series does not terminate");
        current = std::move(next);
        ++cls;
    }
    return cls;
}

QuotientResult quotient_action(const FiniteGroup& g, const Subgroup& n) {
    if (!is_normal(g, n)) throw PreconditionError("quotient_action: subgroup is not normal");
    const uint32_t size = static_cast<uint32_t>(g.order());
    constexpr uint32_t kUnassigned = UINT32_MAX;
    std::vector<uint32_t> coset_of(size, kUnassigned);
    std::vector<uint32_t> reps;
    for (uint32_t x = 0; x < size; ++x) {
        if (coset_of[x] != kUnassigned) continue;
        const uint32_t id = static_cast<uint32_t>(reps.size());
        reps.push_back(x);
        for (uint32_t m : n.elements) coset_of[g.mul(m, x)] = id;
    }
    if (reps.size() * n.order() != g.order())
        throw InternalError("quotient_action: cosets do not partition the group");

    std::vector<Permutation> gen_perms;
    for (uint32_t a : g.generators()) {
        std::vector<uint32_t> im(reps.size());
        for (uint32_t c = 0; c < reps.size(); ++c) im[c] = coset_of[g.mul(reps[c], a)];
        gen_perms.emplace_back(std::move(im));
    }
    PermGroup q(static_cast<uint32_t>(reps.size()), std::move(gen_perms));
    if (q.order() * n.order() != g.order())
        throw InternalError("quotient_action: image order mismatch");
    return QuotientResult{std::move(q), std::move(coset_of)};
}

}  // namespace eppo
