// SPDX-License-Identifier: Apache-2.0
//
// Acceptance battery: every exact criterion, one pass/fail line each.
// Exit status is nonzero when any criterion fails.

#include "hn/verify.hpp"

#include <cstdio>

int main() {
    hn::TableCache tables("", 12);
    hn::Integer budget(100000000);
    auto results = hn::run_acceptance(tables, budget);
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        std::printf("criterion %2d [%s] %7.2fs  %s%s%s\n", r.id, r.pass ? "PASS" : "FAIL",
                    r.seconds, r.name.c_str(), r.pass ? "" : " -- ", r.pass ? "" : r.detail.c_str());
    }
    std::printf("acceptance: %s\n", all ? "ALL CRITERIA PASS" : "FAILURES PRESENT");
    return all ? 0 : 1;
}
