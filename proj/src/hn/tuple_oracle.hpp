// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hn/partition.hpp"
#include "hn/permutation.hpp"
#include "hn/rational.hpp"

#include <map>
#include <vector>

namespace hn {

// Exact tally of Hurwitz numbers over tuples of watchtower profiles: entry
// key is the ordered V-tuple (Delta~^1,...,Delta~^V). The shared N-exponent
// of a Wick query (-n d) rides along; tuple queries leave it 0.
struct ProfileTally {
    int d = 0;
    int towers = 0;
    long long n_exponent = 0;
    std::map<std::vector<Partition>, Rational> entries; // nonzero entries only

    Rational at(const std::vector<Partition>& key) const {
        auto it = entries.find(key);
        return it == entries.end() ? Rational(0) : it->second;
    }
    Rational total() const {
        Rational t = 0;
        for (const auto& [k, v] : entries) t += v;
        return t;
    }
    bool operator==(const ProfileTally&) const = default;
};

// Brute-force Hurwitz number from the fundamental-group relator:
// orientable genus g (euler = 2-2g):  [a_1,b_1]...[a_g,b_g] s_1...s_F = 1,
// non-orientable genus g (euler = 2-g):  c_1^2...c_g^2 s_1...s_F = 1,
// counted over explicit permutation tuples and divided by d!.
// Throws BudgetError when the enumeration would exceed `budget` steps.
Rational tuple_hurwitz(int euler, bool orientable, const std::vector<Partition>& profiles, int d,
                       const Integer& budget);

// Same enumeration with `free_slots` extra unconstrained permutations,
// tallied by their cycle types.
ProfileTally tuple_tally(int euler, bool orientable, const std::vector<Partition>& fixed_profiles,
                         int free_slots, int d, const Integer& budget);

} // namespace hn
