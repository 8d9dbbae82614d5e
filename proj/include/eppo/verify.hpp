#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eppo/config.hpp"

namespace eppo {

/**
 * @file verify.hpp
 * @brief The acceptance suite: eleven criteria covering the catalog, the
 *        predicate equivalences, both construction grids, the monomial
 *        eigenvalue property, the solvable structure checks, the boundary
 *        cases of the simple family, the recognizer, the extension
 *        arithmetic, and report determinism.
 */

struct CriterionResult {
    std::string id;
    std::string title;
    bool pass = false;
    bool skipped = false;
    uint64_t checks = 0;
    uint64_t failures = 0;
    std::string first_failure;
};

struct VerifyRun {
    std::vector<CriterionResult> results;
    std::string records;
    bool all_pass = true;
};

/// Ids: c01-catalog .. c11-determinism.
std::vector<std::string> criterion_ids();

/**
 * Runs the suite. `only` restricts to the listed ids (empty = all);
 * `inject_failure` forces one synthetic failed check inside the named
 * criterion (a test hook for the failure path). The determinism criterion
 * reruns the other selected criteria and byte-compares their records.
 */
VerifyRun run_verification(const RunConfig& config, const std::vector<std::string>& only = {},
                           const std::string& inject_failure = "");

/// "[PASS] c01-catalog  <title> (n checks)" -- one line per criterion.
std::string criterion_line(const CriterionResult& r);

}  // namespace eppo
