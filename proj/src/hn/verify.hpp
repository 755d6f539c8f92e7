// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hn/characters.hpp"
#include "hn/config.hpp"

#include <string>
#include <vector>

namespace hn {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    std::string detail;
};

// The full acceptance battery; every tolerance is exact equality.
std::vector<CriterionResult> run_acceptance(TableCache& tables, const Integer& budget);

// Reduced battery (degrees <= 3) for `selftest --level fast`.
std::vector<CriterionResult> run_fast_checks(TableCache& tables, const Integer& budget);

// Named verification suites for `verify <suite>`; d bounds the degree swept.
// Known suites: orthogonality, idempotency, cuts, cutjoin, tm, oracles,
// theorem31, tau, charmap, ym, schur-expectation, int-tau.
Report run_suite(const std::string& name, int d, TableCache& tables, const Integer& budget);

} // namespace hn
