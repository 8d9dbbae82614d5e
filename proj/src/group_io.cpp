#include "eppo/group_io.hpp"

#include <fstream>
#include <sstream>

#include "eppo/errors.hpp"

namespace eppo {

namespace {

std::string strip_comment(const std::string& line) {
    const auto pos = line.find('#');
    std::string out = pos == std::string::npos ? line : line.substr(0, pos);
    const auto first = out.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = out.find_last_not_of(" \t\r\n");
    return out.substr(first, last - first + 1);
}

std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto s = strip_comment(line);
        if (!s.empty()) out.push_back(std::move(s));
    }
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

PermGroup parse_group_text(const std::string& text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("group file: missing degree line");
    uint64_t degree = 0;
    try {
        size_t used = 0;
        degree = std::stoull(lines[0], &used);
        if (used != lines[0].size()) throw std::invalid_argument("trailing junk");
    } catch (const std::exception&) {
        throw ParseError("group file: first line must be the degree, got '" + lines[0] + "'");
    }
    if (degree == 0 || degree > (1u << 20))
        throw ParseError("group file: degree out of range");
    std::vector<Permutation> gens;
    for (size_t i = 1; i < lines.size(); ++i)
        gens.push_back(Permutation::from_cycles(lines[i], static_cast<uint32_t>(degree)));
    return PermGroup(static_cast<uint32_t>(degree), std::move(gens));
}

PermGroup read_group_file(const std::string& path) { return parse_group_text(slurp(path)); }

std::string write_group_text(const PermGroup& g) {
    std::ostringstream out;
    out << "# permutation group, degree " << g.degree() << ", order " << g.order() << "\n";
    out << g.degree() << "\n";
    for (const auto& gen : g.generators()) out << gen.to_cycle_string() << "\n";
    return out.str();
}

namespace {

// Parses one field element: "(c0,c1,...)" coefficient tuple or a bare
// integer encoding.
uint32_t parse_element(const std::string& tok, const Field& f) {
    if (tok.empty()) throw ParseError("matrix file: empty element");
    if (tok.front() == '(') {
        if (tok.back() != ')') throw ParseError("matrix file: unbalanced tuple '" + tok + "'");
        std::vector<uint32_t> coeffs;
        std::string inner = tok.substr(1, tok.size() - 2);
        std::istringstream in(inner);
        std::string part;
        while (std::getline(in, part, ',')) {
            try {
                coeffs.push_back(static_cast<uint32_t>(std::stoul(part)));
            } catch (const std::exception&) {
                throw ParseError("matrix file: bad coefficient in '" + tok + "'");
            }
        }
        try {
            return f.from_coefficients(coeffs);
        } catch (const PreconditionError& e) {
            throw ParseError(std::string("matrix file: ") + e.what());
        }
    }
    uint64_t v = 0;
    try {
        v = std::stoull(tok);
    } catch (const std::exception&) {
        throw ParseError("matrix file: bad element '" + tok + "'");
    }
    if (v >= f.size())
        throw ParseError("matrix file: element " + tok + " out of range for " + f.name());
    return static_cast<uint32_t>(v);
}

}  // namespace

MatrixGroupDef parse_matrix_group_text(const std::string& text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("matrix file: missing field line");
    // Field line: GF(p) or GF(p^k).
    uint32_t p = 0, k = 1;
    {
        const std::string& l = lines[0];
        if (l.rfind("GF(", 0) != 0 || l.back() != ')')
            throw ParseError("matrix file: first line must be GF(p) or GF(p^k), got '" + l + "'");
        const std::string body = l.substr(3, l.size() - 4);
        const auto caret = body.find('^');
        try {
            if (caret == std::string::npos) {
                p = static_cast<uint32_t>(std::stoul(body));
            } else {
                p = static_cast<uint32_t>(std::stoul(body.substr(0, caret)));
                k = static_cast<uint32_t>(std::stoul(body.substr(caret + 1)));
            }
        } catch (const std::exception&) {
            throw ParseError("matrix file: bad field line '" + l + "'");
        }
    }
    const Field* field;
    try {
        field = &Field::get(p, k);
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("matrix file: ") + e.what());
    }

    if (lines.size() < 2 || lines[1].rfind("dim", 0) != 0)
        throw ParseError("matrix file: expected 'dim m' after the field line");
    uint32_t dim = 0;
    try {
        dim = static_cast<uint32_t>(std::stoul(lines[1].substr(3)));
    } catch (const std::exception&) {
        throw ParseError("matrix file: bad dimension line '" + lines[1] + "'");
    }
    if (dim == 0 || dim > 16) throw ParseError("matrix file: dimension out of range");

    MatrixGroupDef def{field, dim, {}};
    for (size_t i = 2; i < lines.size(); ++i) {
        std::istringstream in(lines[i]);
        std::string head;
        in >> head;
        if (head != "gen")
            throw ParseError("matrix file: expected 'gen ...' line, got '" + lines[i] + "'");
        Matrix m(*field, dim, dim);
        for (uint32_t r = 0; r < dim; ++r)
            for (uint32_t c = 0; c < dim; ++c) {
                std::string tok;
                if (!(in >> tok))
                    throw ParseError("matrix file: generator line has too few entries");
                m.set(r, c, parse_element(tok, *field));
            }
        std::string extra;
        if (in >> extra) throw ParseError("matrix file: generator line has too many entries");
        def.generators.push_back(std::move(m));
    }
    return def;
}

MatrixGroupDef read_matrix_group_file(const std::string& path) {
    return parse_matrix_group_text(slurp(path));
}

std::string write_matrix_group_text(const MatrixGroupDef& def) {
    std::ostringstream out;
    out << def.field->name() << "\n";
    out << "dim " << def.dimension << "\n";
    for (const auto& g : def.generators) {
        out << "gen";
        for (uint32_t r = 0; r < def.dimension; ++r)
            for (uint32_t c = 0; c < def.dimension; ++c)
                out << ' ' << def.field->element_to_string(g.at(r, c));
        out << "\n";
    }
    return out.str();
}

}  // namespace eppo
