#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eppo/config.hpp"
#include "eppo/finite_group.hpp"
#include "eppo/perm_group.hpp"
#include "eppo/table_groups.hpp"

namespace eppo {

/**
 * The shared test corpus: catalog members within threshold, the full
 * metacyclic and semidirect construction grids (positive and negative
 * cases), and the classic small groups. Expected EPPO flags come from a
 * route independent of the element-order scan: arithmetic of r for the
 * metacyclic grid, the faithful/fixed-point-free criterion for the
 * semidirect grid, and known spectra for the named groups.
 */
struct CorpusEntry {
    std::string name;
    std::string family;  // catalog | metacyclic | semidirect | classic
    std::shared_ptr<const FiniteGroup> dense;
    std::shared_ptr<const PermGroup> perm;  // set for permutation-backed entries
    bool expected_eppo = false;
    std::optional<MetacyclicSpec> metacyclic;  // set for the metacyclic grid
};

std::vector<CorpusEntry> build_corpus(const RunConfig& config);

/// The metacyclic grid portion only: p, q over {2,3,5,7,13,17},
/// alpha, beta in {1,2}, every valid r.
std::vector<CorpusEntry> metacyclic_grid(const RunConfig& config);

/// The semidirect grid: q in {3,5}, m in {1,2}, H drawn from cyclic,
/// quaternion, trivial-action and fixed-vector variants.
std::vector<CorpusEntry> semidirect_grid(const RunConfig& config);

struct SemidirectVariant {
    std::string name;
    SemidirectSpec spec;
};

/// The underlying semidirect grid specs (shared by the corpus and the
/// two-route acceptance check).
std::vector<SemidirectVariant> semidirect_variants();

}  // namespace eppo
