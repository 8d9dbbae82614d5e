#include "eppo/constructors.hpp"

#include <map>
#include <sstream>

#include "eppo/errors.hpp"
#include "eppo/group_io.hpp"
#include "eppo/numbers.hpp"

namespace eppo {

std::optional<uint64_t> find_metacyclic_r(uint64_t p, uint32_t alpha, uint64_t q, uint32_t beta) {
    if (!is_prime(p) || !is_prime(q) || p == q)
        throw PreconditionError("find_metacyclic_r: p and q must be distinct primes");
    const uint64_t pa = ipow(p, alpha);
    const uint64_t qb = ipow(q, beta);
    for (uint64_t r = 2; r < pa; ++r) {
        if (r % p == 0) continue;
        if (pow_mod(r, qb, pa) != 1) continue;
        if (beta >= 1 && pow_mod(r, qb / q, pa) == 1) continue;  // order < q^beta
        return r;
    }
    return std::nullopt;
}

std::shared_ptr<MetacyclicGroup> metacyclic_group(const MetacyclicSpec& spec) {
    return std::make_shared<MetacyclicGroup>(spec);
}

std::shared_ptr<GeneralizedQuaternionGroup> generalized_quaternion(uint32_t n) {
    return std::make_shared<GeneralizedQuaternionGroup>(n);
}

std::shared_ptr<SemidirectGroup> semidirect_product(const SemidirectSpec& spec) {
    return std::make_shared<SemidirectGroup>(spec);
}

std::shared_ptr<CyclicGroup> cyclic_group(uint64_t n) { return std::make_shared<CyclicGroup>(n); }

std::shared_ptr<DihedralGroup> dihedral_group(uint32_t n) {
    return std::make_shared<DihedralGroup>(n);
}

std::vector<Matrix> quaternion_matrices(const Field& f) {
    if (f.characteristic() == 2 || f.extension_degree() != 1)
        throw PreconditionError("quaternion_matrices: need an odd prime field");
    Matrix i(f, 2, 2);
    i.set(0, 1, f.neg(f.one()));
    i.set(1, 0, f.one());
    // j = [[a, b], [b, -a]] with a^2 + b^2 = -1 anticommutes with i and
    // squares to -I; the smallest solution keeps things reproducible.
    for (uint32_t a = 0; a < f.size(); ++a) {
        for (uint32_t b = 1; b < f.size(); ++b) {
            if (f.add(f.mul(a, a), f.mul(b, b)) != f.neg(f.one())) continue;
            Matrix j(f, 2, 2);
            j.set(0, 0, a);
            j.set(0, 1, b);
            j.set(1, 0, b);
            j.set(1, 1, f.neg(a));
            return {i, j};
        }
    }
    throw InternalError("quaternion_matrices: no solution of a^2 + b^2 = -1");
}

Matrix rotation_order4(const Field& f) {
    Matrix m(f, 2, 2);
    m.set(0, 1, f.neg(f.one()));
    m.set(1, 0, f.one());
    return m;
}

std::vector<Matrix> sl2_generators(const Field& f) {
    Matrix t(f, 2, 2);
    t.set(0, 0, f.one());
    t.set(0, 1, f.one());
    t.set(1, 1, f.one());
    return {t, rotation_order4(f)};
}

namespace {

std::map<std::string, std::string> parse_kv(const std::vector<std::string>& tokens, size_t from) {
    std::map<std::string, std::string> out;
    for (size_t i = from; i < tokens.size(); ++i) {
        const auto eq = tokens[i].find('=');
        if (eq == std::string::npos)
            throw ParseError("constructor spec: expected key=value, got '" + tokens[i] + "'");
        out[tokens[i].substr(0, eq)] = tokens[i].substr(eq + 1);
    }
    return out;
}

uint64_t require_u64(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError("constructor spec: missing parameter '" + key + "'");
    try {
        return std::stoull(it->second);
    } catch (const std::exception&) {
        throw ParseError("constructor spec: parameter '" + key + "' is not a number");
    }
}

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

std::vector<Matrix> named_h_generators(const std::string& name, const Field& f, uint32_t m) {
    if (name == "Q8") {
        if (m != 2) throw ParseError("H=Q8 requires m=2");
        return quaternion_matrices(f);
    }
    if (name == "C4") {
        if (m == 2) return {rotation_order4(f)};
        if (m == 1) {
            if ((f.size() - 1) % 4 != 0) throw ParseError("H=C4 with m=1 needs 4 | q-1");
            for (uint32_t a = 2; a < f.size(); ++a)
                if (f.multiplicative_order(a) == 4) {
                    Matrix g(f, 1, 1);
                    g.set(0, 0, a);
                    return {g};
                }
        }
        throw ParseError("H=C4 requires m=1 or m=2");
    }
    if (name == "C2" || name == "-I") {
        Matrix g(f, m, m);
        for (uint32_t i = 0; i < m; ++i) g.set(i, i, f.neg(f.one()));
        return {g};
    }
    throw ParseError("unknown H name '" + name + "' (use Q8, C4, C2, -I or file:<path>)");
}

}  // namespace

std::shared_ptr<FiniteGroup> build_from_spec_string(const std::string& text) {
    const auto tokens = tokenize(text);
    if (tokens.empty()) throw ParseError("constructor spec: empty string");
    const std::string& kind = tokens[0];

    if (kind == "metacyclic") {
        const auto kv = parse_kv(tokens, 1);
        MetacyclicSpec spec;
        spec.p = require_u64(kv, "p");
        spec.alpha = static_cast<uint32_t>(require_u64(kv, "a"));
        spec.q = require_u64(kv, "q");
        spec.beta = static_cast<uint32_t>(require_u64(kv, "b"));
        if (kv.count("r")) {
            spec.r = require_u64(kv, "r");
        } else {
            auto r = find_metacyclic_r(spec.p, spec.alpha, spec.q, spec.beta);
            if (!r)
                throw ParseError("metacyclic: no r with multiplicative order exactly q^b exists "
                                 "for these parameters; pass r= explicitly");
            spec.r = *r;
        }
        return metacyclic_group(spec);
    }
    if (kind == "semidirect") {
        const auto kv = parse_kv(tokens, 1);
        const uint64_t q = require_u64(kv, "q");
        const uint32_t m = static_cast<uint32_t>(require_u64(kv, "m"));
        auto hit = kv.find("H");
        if (hit == kv.end()) throw ParseError("semidirect: missing H=");
        SemidirectSpec spec;
        spec.field = &Field::get(static_cast<uint32_t>(q), 1);
        spec.dimension = m;
        if (hit->second.rfind("file:", 0) == 0) {
            const auto def = read_matrix_group_file(hit->second.substr(5));
            if (def.field != spec.field || def.dimension != m)
                throw ParseError("semidirect: matrix file field/dimension does not match q/m");
            spec.action_gens = def.generators;
        } else {
            spec.action_gens = named_h_generators(hit->second, *spec.field, m);
        }
        return semidirect_product(spec);
    }
    if (kind == "genquat") {
        const auto kv = parse_kv(tokens, 1);
        return generalized_quaternion(static_cast<uint32_t>(require_u64(kv, "n")));
    }
    if (kind == "cyclic") {
        const auto kv = parse_kv(tokens, 1);
        return cyclic_group(require_u64(kv, "n"));
    }
    if (kind == "dihedral") {
        const auto kv = parse_kv(tokens, 1);
        return dihedral_group(static_cast<uint32_t>(require_u64(kv, "n")));
    }
    throw ParseError("unknown constructor '" + kind +
                     "' (use metacyclic, semidirect, genquat, cyclic, dihedral)");
}

}  // namespace eppo
