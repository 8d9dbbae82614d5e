#pragma once

#include <string>
#include <vector>

#include "eppo/gf_matrix.hpp"
#include "eppo/perm_group.hpp"

namespace eppo {

/**
 * @file group_io.hpp
 * @brief Text formats for group definitions.
 *
 * Permutation group files: a degree line, then one generator per line in
 * 1-based disjoint-cycle notation. '#' starts a comment; blank lines and
 * extra whitespace are ignored.
 *
 *     # A5
 *     5
 *     (1 2 3 4 5)
 *     (1 2 3)
 *
 * Matrix group files: a field line GF(p) or GF(p^k), a dimension line
 * "dim m", then one generator per "gen" line with m*m entries row-major.
 * Extension-field elements are written as coefficient tuples (c0,c1,...);
 * bare integers are accepted as encodings, and are the normal spelling for
 * prime fields.
 *
 *     GF(3)
 *     dim 2
 *     gen 0 2 1 0
 *     gen 1 1 1 2
 */

PermGroup parse_group_text(const std::string& text);
PermGroup read_group_file(const std::string& path);
std::string write_group_text(const PermGroup& g);

struct MatrixGroupDef {
    const Field* field;
    uint32_t dimension;
    std::vector<Matrix> generators;
};

MatrixGroupDef parse_matrix_group_text(const std::string& text);
MatrixGroupDef read_matrix_group_file(const std::string& path);
std::string write_matrix_group_text(const MatrixGroupDef& def);

}  // namespace eppo
