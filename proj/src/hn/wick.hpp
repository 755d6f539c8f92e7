// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hn/characters.hpp"
#include "hn/partition.hpp"
#include "hn/tuple_oracle.hpp"

#include <string>
#include <vector>

namespace hn {

// One face side: the covered edge with its traversal direction, followed by
// the corner it runs into, carrying (watchtower id, source-slot id).
struct MapSide {
    int edge = 0;
    bool rev = false;
    int tower = 0;
    int slot = 0;
};

struct MapFace {
    Partition profile; // capital profile Delta^j
    std::vector<MapSide> sides;
};

// Faces as cyclic side/corner sequences. validate() derives edge and tower
// counts and enforces the orientable two-occurrence rule (each edge once
// forward, once reversed), connectivity, and that the corners around every
// tower close into a single cycle.
struct CombinatorialMap {
    std::vector<MapFace> faces;

    int edges = 0;  // n
    int towers = 0; // V
    std::vector<int> tower_corner_count;

    int euler() const { return static_cast<int>(faces.size()) + towers - edges; }

    static CombinatorialMap parse(const std::string& json_text);
    void validate(); // throws DomainError on malformed input
};

// Full Wick contraction of the trace monomial of the map at degree d:
// enumerate all complete pairings per edge, trace every closed index line
// through the source-slot letters, and tally watchtower monodromy types
// with weight 1/prod_j z_{Delta^j}. N-exponent of every entry is -n d.
ProfileTally wick_contract(const CombinatorialMap& map, int d, const Integer& budget);

// wick == tuple tally == character formula, entry by entry
Report verify_theorem(const CombinatorialMap& map, int d, TableCache& tables, const Integer& budget);

// Worked map instances: two 1-gons on the sphere sharing a loop edge, the
// one-face square realization of the torus, and a three-face sphere map on
// the theta graph.
CombinatorialMap example1_map(const Partition& delta1, const Partition& delta2);
CombinatorialMap example2_map(const Partition& delta);
CombinatorialMap sphere_three_face_map(const Partition& d1, const Partition& d2, const Partition& d3);

} // namespace hn
