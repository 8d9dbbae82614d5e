#include "eppo/structure.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>

#include "eppo/catalog.hpp"
#include "eppo/errors.hpp"
#include "eppo/numbers.hpp"
#include "eppo/perm_dense.hpp"

namespace eppo {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::passed: return "passed";
        case CheckStatus::failed: return "failed";
        case CheckStatus::not_applicable: return "not-applicable";
        case CheckStatus::flagged: return "flagged";
    }
    return "?";
}

std::string ChiefFactor::to_string() const {
    if (prime_power && exponent > 1) return std::to_string(prime) + "^" + std::to_string(exponent);
    return std::to_string(order);
}

std::string ChiefSeriesReport::to_string() const {
    std::ostringstream out;
    out << '[';
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) out << ", ";
        out << factors[i].to_string();
    }
    out << ']';
    return out.str();
}

namespace {

ChiefFactor make_factor(uint64_t order) {
    ChiefFactor f;
    f.order = order;
    uint64_t p;
    uint32_t e;
    if (is_prime_power(order, &p, &e)) {
        f.prime = p;
        f.exponent = e;
        f.prime_power = true;
    }
    return f;
}

}  // namespace

ChiefSeriesReport chief_series(const FiniteGroup& g) {
    ChiefSeriesReport report;
    std::vector<ChiefFactor> bottom_up;
    std::vector<std::unique_ptr<PermDenseGroup>> owned;
    const FiniteGroup* cur = &g;
    while (cur->order() > 1) {
        const Subgroup n = minimal_normal_subgroup(*cur);
        bottom_up.push_back(make_factor(n.order()));
        auto quotient = quotient_action(*cur, n);
        owned.push_back(std::make_unique<PermDenseGroup>(quotient.group, cur->order()));
        cur = owned.back().get();
    }
    report.factors.assign(bottom_up.rbegin(), bottom_up.rend());
    for (const auto& f : report.factors)
        if (!f.prime_power) report.all_prime_power = false;
    return report;
}

bool is_generalized_quaternion(const FiniteGroup& g, const Subgroup& p) {
    const uint64_t n = p.order();
    if (n < 8 || p_part(n, 2) != n) return false;
    // A 2-group with a unique involution is cyclic or generalized
    // quaternion; an element of full order separates the two.
    uint32_t involutions = 0;
    bool cyclic = false;
    for (uint32_t x : p.elements) {
        const uint64_t d = g.element_order(x);
        if (d == 2) ++involutions;
        if (d == n) cyclic = true;
    }
    return involutions == 1 && !cyclic;
}

namespace {

std::string join_factors(const std::vector<ChiefFactor>& fs, size_t from, size_t to) {
    std::ostringstream out;
    for (size_t i = from; i < to && i < fs.size(); ++i) {
        if (i > from) out << ',';
        out << fs[i].to_string();
    }
    return out.str();
}

void add_check(std::vector<CheckItem>& checks, bool ok, const std::string& name,
               const std::string& detail = "") {
    checks.push_back({name, ok ? CheckStatus::passed : CheckStatus::failed, detail});
}

/// Largest normal q-subgroup from the normal subgroup lattice.
Subgroup normal_core(const FiniteGroup& g, uint64_t q,
                     const std::vector<Subgroup>& normals) {
    const Subgroup* best = nullptr;
    for (const auto& n : normals) {
        if (p_part(n.order(), q) != n.order()) continue;  // not a q-group
        if (!best || n.order() > best->order()) best = &n;
    }
    return best ? *best : trivial_subgroup(g);
}

}  // namespace

std::string ChiefPatternReport::summary() const {
    std::ostringstream out;
    if (!applicable) {
        out << "not applicable: " << reason;
        return out.str();
    }
    out << case_name << " p=" << p << " q=" << q << " alpha=" << alpha << " beta=" << beta;
    if (case_name == "general") out << " gamma=" << gamma;
    out << " b=" << b << " factors=" << series.to_string() << (passed ? " OK" : " FAIL");
    return out.str();
}

ChiefPatternReport chief_pattern_check(const FiniteGroup& g, uint64_t seed) {
    ChiefPatternReport rep;
    const auto primes = prime_divisors(g.order());
    if (primes.size() != 2) {
        rep.reason = "group order has " + std::to_string(primes.size()) + " prime divisors";
        return rep;
    }
    if (!is_solvable(g)) {
        rep.reason = "group is not solvable";
        return rep;
    }
    if (!is_eppo_exhaustive(g).is_eppo) {
        rep.reason = "group has an element of composite order";
        return rep;
    }

    const auto normals = normal_subgroups(g);
    // Exactly one of the two primes has a nontrivial normal core here: the
    // Fitting subgroup of a solvable group with prime-power element orders
    // is a q-group for a single q.
    Subgroup core0 = normal_core(g, primes[0], normals);
    Subgroup core1 = normal_core(g, primes[1], normals);
    if (core0.is_trivial() == core1.is_trivial()) {
        rep.reason = "no unique nontrivial normal prime core";
        return rep;
    }
    rep.applicable = true;
    const bool q_is_first = !core0.is_trivial();
    rep.q = q_is_first ? primes[0] : primes[1];
    rep.p = q_is_first ? primes[1] : primes[0];
    const Subgroup& q_core = q_is_first ? core0 : core1;

    const uint64_t p_full = p_part(g.order(), rep.p);
    const uint64_t q_full = p_part(g.order(), rep.q);
    rep.alpha = factorize(p_full)[0].second;
    rep.beta = factorize(q_full)[0].second;
    rep.series = chief_series(g);
    const auto& fs = rep.series.factors;

    // Quaternion Sylow 2-subgroup?
    bool quaternion2 = false;
    if (g.order() % 2 == 0) {
        SeededRng rng(seed);
        quaternion2 = is_generalized_quaternion(g, sylow_subgroup(g, 2, rng));
    }

    auto count_leading = [&](size_t from, uint64_t prime, uint32_t exponent) {
        size_t i = from;
        while (i < fs.size() && fs[i].prime == prime && fs[i].exponent == exponent) ++i;
        return i - from;
    };

    if (quaternion2 && rep.p == 2) {
        rep.case_name = "quaternion-sylow";
        // alpha copies of 2, then q-power factors q^(b_i), b_i > 1, b | b_i.
        rep.b = multiplicative_order(rep.q, ipow(2, rep.alpha - 1));
        const size_t twos = count_leading(0, 2, 1);
        add_check(rep.checks, twos == rep.alpha, "leading-2-factors",
                  std::to_string(twos) + " factors of 2, alpha=" + std::to_string(rep.alpha));
        bool tail_ok = true;
        uint32_t exp_sum = 0;
        for (size_t i = twos; i < fs.size(); ++i) {
            if (fs[i].prime != rep.q) tail_ok = false;
            rep.b_list.push_back(fs[i].exponent);
            exp_sum += fs[i].exponent;
        }
        rep.k = static_cast<uint32_t>(rep.b_list.size());
        add_check(rep.checks, tail_ok && exp_sum == rep.beta, "q-power-tail",
                  "factors " + join_factors(fs, twos, fs.size()));
        for (uint32_t bi : rep.b_list) {
            add_check(rep.checks, bi > 1, "b_i-greater-than-1", "b_i=" + std::to_string(bi));
            add_check(rep.checks, bi % rep.b == 0, "b-divides-b_i",
                      "b=" + std::to_string(rep.b) + " b_i=" + std::to_string(bi));
        }
    } else if (q_core.order() == q_full) {
        rep.case_name = "normal-sylow";
        rep.b = multiplicative_order(rep.q, ipow(rep.p, rep.alpha));
        const size_t ps = count_leading(0, rep.p, 1);
        add_check(rep.checks, ps == rep.alpha, "leading-p-factors",
                  std::to_string(ps) + " factors of " + std::to_string(rep.p) +
                      ", alpha=" + std::to_string(rep.alpha));
        bool tail_ok = fs.size() > ps;
        for (size_t i = ps; i < fs.size(); ++i) {
            if (fs[i].prime != rep.q || fs[i].exponent != rep.b) tail_ok = false;
            rep.b_list.push_back(fs[i].exponent);
        }
        rep.k = static_cast<uint32_t>(rep.b_list.size());
        add_check(rep.checks, tail_ok, "equal-q^b-tail",
                  "factors " + join_factors(fs, ps, fs.size()) + ", b=" + std::to_string(rep.b));
        add_check(rep.checks, rep.k * rep.b == rep.beta, "beta-equals-k-times-b",
                  "beta=" + std::to_string(rep.beta) + " k=" + std::to_string(rep.k) +
                      " b=" + std::to_string(rep.b));
        // Nilpotency class of the normal Sylow q-subgroup is bounded by k.
        SeededRng rng(seed + 1);
        const Subgroup q_sylow = sylow_subgroup(g, rep.q, rng);
        const uint32_t cls = nilpotency_class(g, q_sylow);
        add_check(rep.checks, cls <= rep.k, "nilpotency-class-at-most-k",
                  "class=" + std::to_string(cls) + " k=" + std::to_string(rep.k));
    } else {
        rep.case_name = "general";
        rep.b = multiplicative_order(rep.q, ipow(rep.p, rep.alpha));
        const uint32_t core_exp = factorize(q_core.order())[0].second;
        rep.gamma = rep.beta - core_exp;
        const size_t qs = count_leading(0, rep.q, 1);
        add_check(rep.checks, qs == rep.gamma, "leading-q-factors",
                  std::to_string(qs) + " factors of " + std::to_string(rep.q) +
                      ", gamma=" + std::to_string(rep.gamma));
        const size_t ps = count_leading(qs, rep.p, 1);
        add_check(rep.checks, ps == rep.alpha, "middle-p-factors",
                  std::to_string(ps) + " factors of " + std::to_string(rep.p) +
                      ", alpha=" + std::to_string(rep.alpha));
        bool tail_ok = true;
        uint32_t exp_sum = 0;
        for (size_t i = qs + ps; i < fs.size(); ++i) {
            if (fs[i].prime != rep.q) tail_ok = false;
            rep.b_list.push_back(fs[i].exponent);
            exp_sum += fs[i].exponent;
        }
        rep.k = static_cast<uint32_t>(rep.b_list.size());
        add_check(rep.checks, tail_ok && exp_sum + rep.gamma == rep.beta, "q-power-tail",
                  "factors " + join_factors(fs, qs + ps, fs.size()));
        for (uint32_t bi : rep.b_list)
            add_check(rep.checks, bi % rep.b == 0, "b-divides-b_i",
                      "b=" + std::to_string(rep.b) + " b_i=" + std::to_string(bi));
        add_check(rep.checks, (rep.p - 1) % ipow(rep.q, rep.gamma) == 0, "q^gamma-divides-p-1",
                  "q^gamma=" + std::to_string(ipow(rep.q, rep.gamma)) +
                      " p-1=" + std::to_string(rep.p - 1));
        // Evaluated but only flagged, never a hard failure.
        rep.checks.push_back({"gamma-less-than-b",
                              rep.gamma < rep.b ? CheckStatus::flagged : CheckStatus::failed,
                              "gamma=" + std::to_string(rep.gamma) + " b=" + std::to_string(rep.b)});
    }

    rep.passed = true;
    for (const auto& c : rep.checks)
        if (c.status == CheckStatus::failed) rep.passed = false;
    return rep;
}

HallShapeReport hall_shape_check(const FiniteGroup& g, uint64_t q, uint64_t seed) {
    HallShapeReport rep;
    if (!is_prime(q) || g.order() % q != 0) {
        rep.reason = "q must be a prime dividing the group order";
        return rep;
    }
    const auto normals = normal_subgroups(g);
    if (normal_core(g, q, normals).is_trivial()) {
        rep.reason = "no nontrivial normal q-subgroup";
        return rep;
    }
    if (!is_eppo_exhaustive(g).is_eppo) {
        rep.reason = "group has an element of composite order";
        return rep;
    }
    rep.applicable = true;

    // Cyclic subgroups <x> with order coprime to q are cyclic groups of
    // prime-power order.
    bool cyclic_ok = true;
    std::string cyclic_detail;
    for (uint32_t x = 0; x < g.order(); ++x) {
        const uint64_t d = g.element_order(x);
        if (d == 1 || std::gcd(d, q) != 1) continue;
        if (!is_prime_power(d)) {
            cyclic_ok = false;
            cyclic_detail = g.element_name(x) + " has order " + std::to_string(d);
            break;
        }
    }
    add_check(rep.checks, cyclic_ok, "coprime-cyclic-subgroups-prime-power", cyclic_detail);

    // Sylow subgroups for the other primes: cyclic, or generalized
    // quaternion when p = 2. (Quaternion can only occur at p = 2; for odd
    // p only the cyclic shape is accepted.)
    SeededRng rng(seed);
    for (uint64_t p : prime_divisors(g.order())) {
        if (p == q) continue;
        const Subgroup syl = sylow_subgroup(g, p, rng);
        const bool cyclic = subgroup_is_cyclic(g, syl);
        const bool quaternion = p == 2 && is_generalized_quaternion(g, syl);
        add_check(rep.checks, cyclic || quaternion,
                  "sylow-" + std::to_string(p) + "-cyclic-or-quaternion",
                  cyclic ? "cyclic of order " + std::to_string(syl.order())
                         : (quaternion ? "generalized quaternion of order " +
                                             std::to_string(syl.order())
                                       : "neither, order " + std::to_string(syl.order())));
    }

    rep.passed = true;
    for (const auto& c : rep.checks)
        if (c.status == CheckStatus::failed) rep.passed = false;
    return rep;
}

SylowStructureReport quaternion_sylow_check(const FiniteGroup& g, uint64_t seed) {
    SylowStructureReport rep;
    const auto primes = prime_divisors(g.order());
    SeededRng rng(seed);

    // Clause 1: quaternion Sylow 2-subgroup.
    bool quaternion2 = false;
    if (g.order() % 2 == 0)
        quaternion2 = is_generalized_quaternion(g, sylow_subgroup(g, 2, rng));
    if (quaternion2) {
        rep.any_applied = true;
        add_check(rep.checks, primes.size() <= 2, "quaternion-sylow2-two-primes",
                  std::to_string(primes.size()) + " prime divisors");
        for (uint64_t p : primes) {
            if (p == 2) continue;
            const Subgroup syl = sylow_subgroup(g, p, rng);
            add_check(rep.checks, is_normal(g, syl),
                      "quaternion-sylow2-odd-sylow-normal",
                      "Sylow " + std::to_string(p) + "-subgroup of order " +
                          std::to_string(syl.order()));
        }
    } else {
        rep.checks.push_back({"quaternion-sylow2-two-primes", CheckStatus::not_applicable,
                              "Sylow 2-subgroup is not generalized quaternion"});
    }

    // Clause 2: a nontrivial normal q-subgroup plus one of the solvability
    // conditions forces solvability.
    const auto normals = normal_subgroups(g);
    bool clause2_applies = false;
    std::string why;
    for (uint64_t q : primes) {
        const Subgroup core = normal_core(g, q, normals);
        if (core.is_trivial()) continue;
        if (q % 2 == 1) {
            clause2_applies = true;
            why = "odd prime q=" + std::to_string(q);
            break;
        }
        if (core.order() == p_part(g.order(), q)) {
            clause2_applies = true;
            why = "normal core is the full Sylow " + std::to_string(q) + "-subgroup";
            break;
        }
        if (g.order() % 2 == 0) {
            const Subgroup syl2 = sylow_subgroup(g, 2, rng);
            if (subgroup_is_abelian(g, syl2)) {
                clause2_applies = true;
                why = "abelian Sylow 2-subgroup";
                break;
            }
        }
    }
    if (clause2_applies) {
        rep.any_applied = true;
        add_check(rep.checks, is_solvable(g), "normal-core-forces-solvable", why);
    } else {
        rep.checks.push_back({"normal-core-forces-solvable", CheckStatus::not_applicable,
                              "no qualifying normal subgroup"});
    }

    for (const auto& c : rep.checks)
        if (c.status == CheckStatus::failed) rep.passed = false;
    return rep;
}

std::optional<Subgroup> noncentral_normal_abelian(const FiniteGroup& g) {
    const Subgroup z = center(g);
    for (const auto& n : normal_subgroups(g)) {
        if (n.is_trivial()) continue;
        if (!subgroup_is_abelian(g, n)) continue;
        bool inside_center = true;
        for (uint32_t x : n.elements)
            if (!z.contains(x)) {
                inside_center = false;
                break;
            }
        if (!inside_center) return n;
    }
    return std::nullopt;
}

ExponentArithmeticReport minimal_normal_exponent_check(const FiniteGroup& g, bool eppo_known,
                                                       uint64_t seed) {
    ExponentArithmeticReport rep;
    const auto primes = prime_divisors(g.order());
    if (primes.size() != 2) {
        rep.reason = "group order has " + std::to_string(primes.size()) + " prime divisors";
        return rep;
    }
    const auto normals = normal_subgroups(g);
    SeededRng rng(seed);

    // Try both orientations; the hypotheses pick at most one.
    for (int orient = 0; orient < 2 && !rep.applicable; ++orient) {
        const uint64_t q = primes[orient];
        const uint64_t p = primes[1 - orient];
        const uint64_t q_full = p_part(g.order(), q);
        // Q = Sylow q-subgroup, normal and minimal normal.
        const Subgroup core = normal_core(g, q, normals);
        if (core.order() != q_full) continue;
        bool minimal = true;
        for (const auto& n : normals)
            if (n.order() > 1 && n.order() < core.order() && core.order() % n.order() == 0) {
                // a smaller nontrivial normal subgroup inside Q?
                bool inside = std::includes(core.elements.begin(), core.elements.end(),
                                            n.elements.begin(), n.elements.end());
                if (inside) {
                    minimal = false;
                    break;
                }
            }
        if (!minimal) continue;
        const Subgroup p_sylow = sylow_subgroup(g, p, rng);
        if (!subgroup_is_cyclic(g, p_sylow)) continue;

        rep.applicable = true;
        rep.p = p;
        rep.q = q;
        rep.alpha = factorize(p_part(g.order(), p))[0].second;
        rep.beta = factorize(q_full)[0].second;

        const Subgroup cent = centralizer_of_set(g, core.gens.empty() ? core.elements : core.gens);
        rep.centralizer_is_q = cent.elements == core.elements;
        if (eppo_known)
            add_check(rep.checks, rep.centralizer_is_q, "eppo-forces-self-centralizing-core",
                      "C_G(Q) order " + std::to_string(cent.order()));
        if (rep.centralizer_is_q) {
            rep.expected_beta = multiplicative_order(q, ipow(p, rep.alpha));
            add_check(rep.checks, rep.expected_beta == rep.beta, "beta-is-multiplicative-order",
                      "beta=" + std::to_string(rep.beta) +
                          " ord_q(p^alpha)=" + std::to_string(rep.expected_beta));
        }
    }
    if (!rep.applicable) {
        rep.reason = "hypotheses unmet (need cyclic Sylow p and minimal normal Sylow q)";
        return rep;
    }
    rep.passed = true;
    for (const auto& c : rep.checks)
        if (c.status == CheckStatus::failed) rep.passed = false;
    return rep;
}

bool is_supersolvable(const FiniteGroup& g) {
    if (g.order() == 1) return true;
    if (!is_solvable(g)) return false;
    for (const auto& f : chief_series(g).factors)
        if (!(f.prime_power && f.exponent == 1)) return false;
    return true;
}

SupersolvableReport supersolvable_criterion_check(const FiniteGroup& g) {
    SupersolvableReport rep;
    rep.supersolvable = is_supersolvable(g);
    for (const auto& n : normal_subgroups(g))
        if (is_prime(n.order())) rep.has_prime_order_normal = true;
    rep.equivalent = rep.supersolvable == rep.has_prime_order_normal;
    return rep;
}

std::string to_string(SimpleExtensionBase id) {
    switch (id) {
        case SimpleExtensionBase::psl2_5: return "PSL2(5)";
        case SimpleExtensionBase::psl2_8: return "PSL2(8)";
        case SimpleExtensionBase::psl2_17: return "PSL2(17)";
        case SimpleExtensionBase::sz8: return "Sz(8)";
        case SimpleExtensionBase::sz32: return "Sz(32)";
    }
    return "?";
}

uint64_t extension_constraint_product(SimpleExtensionBase id) {
    switch (id) {
        case SimpleExtensionBase::psl2_5: return 3 * 5;
        case SimpleExtensionBase::psl2_8: return 9 * 7;
        case SimpleExtensionBase::psl2_17: return 9 * 17;
        case SimpleExtensionBase::sz8: return 5 * 7 * 13;
        case SimpleExtensionBase::sz32: return 25ull * 31 * 41;
    }
    throw PreconditionError("extension_constraint_product: unsupported id");
}

bool extension_order_constraint(SimpleExtensionBase id, uint64_t t_order) {
    if (t_order == 0 || (t_order & (t_order - 1)) != 0)
        throw PreconditionError("extension_order_constraint: |T| must be a power of 2");
    return (t_order - 1) % extension_constraint_product(id) == 0;
}

bool extension_order_constraint_exp(SimpleExtensionBase id, uint32_t k) {
    if (k > 64) throw PreconditionError("extension_order_constraint_exp: k must be <= 64");
    // 2^k - 1 divisible by m  <=>  2^k = 1 (mod m)
    return pow_mod(2, k, extension_constraint_product(id)) == 1;
}

std::string to_string(GroupClass c) {
    switch (c) {
        case GroupClass::not_eppo: return "not-eppo";
        case GroupClass::solvable_eppo: return "solvable-eppo";
        case GroupClass::simple_eppo: return "simple-eppo";
        case GroupClass::a5_recognized: return "a5-recognized";
        case GroupClass::eppo_unclassified: return "eppo-unclassified";
    }
    return "?";
}

std::string ClassificationRecord::summary() const {
    std::ostringstream out;
    out << to_string(verdict);
    if (verdict == GroupClass::simple_eppo) out << ' ' << simple_name;
    out << " (order " << order << ", spectrum " << spectrum.to_string() << ")";
    if (!detail.empty()) out << " -- " << detail;
    return out.str();
}

namespace {

bool every_order_one_or_prime(const Spectrum& s) {
    for (uint64_t d : s.orders)
        if (d != 1 && !is_prime(d)) return false;
    return true;
}

std::string match_catalog(uint64_t order, const Spectrum& spec, bool spectrum_exact) {
    for (const auto& e : simple_eppo_catalog()) {
        if (e.expected_order != order) continue;
        if (spectrum_exact) {
            if (spec.orders == e.expected_spectrum) return e.name;
        } else {
            // Sampled: the observed orders must be a subset.
            bool subset = true;
            for (uint64_t d : spec.orders)
                if (std::find(e.expected_spectrum.begin(), e.expected_spectrum.end(), d) ==
                    e.expected_spectrum.end())
                    subset = false;
            if (subset) return e.name;
        }
    }
    return "";
}

}  // namespace

ClassificationRecord classify(const FiniteGroup& g) {
    ClassificationRecord rec;
    rec.order = g.order();
    rec.primes = prime_divisors(g.order());
    rec.spectrum = spectrum_of(g);
    rec.eppo = is_eppo_exhaustive(g);
    if (!rec.eppo.is_eppo) {
        rec.verdict = GroupClass::not_eppo;
        rec.detail = rec.eppo.summary();
        return rec;
    }
    rec.solvable = is_solvable(g);
    rec.simple = is_simple(g);

    // Recognition by the two "orders": at least three prime divisors and
    // every element of prime order. That combination only occurs for A5,
    // which the corroborating evidence must confirm.
    if (rec.primes.size() >= 3 && every_order_one_or_prime(rec.spectrum)) {
        rec.verdict = GroupClass::a5_recognized;
        if (rec.order != 60 || rec.spectrum.orders != std::vector<uint64_t>{1, 2, 3, 5} ||
            !rec.simple)
            throw InternalError("classify: recognition evidence does not match A5");
        rec.detail = "three primes, all element orders prime; order 60, simple";
        return rec;
    }
    if (rec.solvable) {
        rec.verdict = GroupClass::solvable_eppo;
        rec.chief = chief_series(g);
        rec.detail = "chief factors " + rec.chief->to_string();
        return rec;
    }
    if (rec.simple) {
        const std::string name = match_catalog(rec.order, rec.spectrum, true);
        if (!name.empty()) {
            rec.verdict = GroupClass::simple_eppo;
            rec.simple_name = name;
            rec.detail = "order and spectrum match " + name;
            return rec;
        }
    }
    rec.verdict = GroupClass::eppo_unclassified;
    return rec;
}

ClassificationRecord classify_sampled(const PermGroup& g, uint64_t sample_n, uint64_t seed) {
    ClassificationRecord rec;
    rec.order = g.order();
    rec.primes = prime_divisors(g.order());
    rec.spectrum = spectrum_sampled(g, sample_n, seed);
    rec.eppo = is_eppo_sampled(g, sample_n, seed);
    if (!rec.eppo.is_eppo) {
        rec.verdict = GroupClass::not_eppo;
        rec.detail = rec.eppo.summary();
        return rec;
    }
    const std::string name = match_catalog(rec.order, rec.spectrum, false);
    if (!name.empty()) {
        rec.verdict = GroupClass::simple_eppo;
        rec.simple_name = name;
        rec.detail = "sampled evidence: order matches " + name +
                     ", sampled spectrum within its expected spectrum";
        return rec;
    }
    rec.verdict = GroupClass::eppo_unclassified;
    rec.detail = "sampled evidence only";
    return rec;
}

}  // namespace eppo
