// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hn/rational.hpp"

#include <string>

namespace hn {

// Runtime configuration shared by the library context and the CLI.
struct Config {
    std::string cache_dir;            // empty = no on-disk character cache
    int max_weight = 12;              // guards factorial blow-ups
    Integer budget = Integer(100000000); // enumeration step cap (1e8)
    std::string format = "json";      // json | table
    bool numeric = false;             // exact mode unless requested

    void check() const {
        if (max_weight < 0) throw DomainError("max weight must be nonnegative");
        if (budget <= 0) throw DomainError("budget must be positive");
        if (format != "json" && format != "table") throw DomainError("format must be json or table");
    }
};

} // namespace hn
