// SPDX-License-Identifier: Apache-2.0
#include "hn/wick.hpp"

#include "hn/engine.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace hn {

namespace {

struct Occurrence {
    int face = -1;
    int pos = -1;
};

struct MapIndex {
    std::vector<Occurrence> fwd; // rev=false occurrence per edge
    std::vector<Occurrence> bwd; // rev=true occurrence per edge
};

MapIndex index_edges(const CombinatorialMap& m) {
    MapIndex idx;
    idx.fwd.assign(static_cast<size_t>(m.edges), Occurrence{});
    idx.bwd.assign(static_cast<size_t>(m.edges), Occurrence{});
    for (int f = 0; f < static_cast<int>(m.faces.size()); ++f) {
        const auto& sides = m.faces[static_cast<size_t>(f)].sides;
        for (int t = 0; t < static_cast<int>(sides.size()); ++t) {
            const MapSide& s = sides[static_cast<size_t>(t)];
            Occurrence& slot = s.rev ? idx.bwd[static_cast<size_t>(s.edge)]
                                     : idx.fwd[static_cast<size_t>(s.edge)];
            slot = Occurrence{f, t};
        }
    }
    return idx;
}

// sheet successor within the cycle layout of a face profile: sheets
// 0..d-1 are grouped into consecutive blocks of the profile parts
std::vector<int> sheet_successor(const Partition& profile) {
    std::vector<int> next(static_cast<size_t>(profile.weight()));
    int base = 0;
    for (int part : profile.parts()) {
        for (int i = 0; i < part; ++i)
            next[static_cast<size_t>(base + i)] = base + (i + 1) % part;
        base += part;
    }
    return next;
}

struct CornerRef {
    int face, sheet, pos;
};

// Full contraction without budget/structure precondition checks; used both
// by wick_contract and as the d=1 well-formedness probe in validate().
ProfileTally contract(const CombinatorialMap& m, int d) {
    MapIndex idx = index_edges(m);
    int F = static_cast<int>(m.faces.size());

    std::vector<std::vector<int>> succ_sheet;
    std::vector<size_t> face_offset(static_cast<size_t>(F) + 1, 0);
    succ_sheet.reserve(static_cast<size_t>(F));
    Rational weight = 1;
    for (int f = 0; f < F; ++f) {
        const Partition& prof = m.faces[static_cast<size_t>(f)].profile;
        if (prof.weight() != d)
            throw DomainError("face profile " + prof.str() + " has weight != d");
        succ_sheet.push_back(sheet_successor(prof));
        weight /= Rational(prof.z_order());
        face_offset[static_cast<size_t>(f) + 1] =
            face_offset[static_cast<size_t>(f)] +
            m.faces[static_cast<size_t>(f)].sides.size() * static_cast<size_t>(d);
    }
    size_t total_corners = face_offset[static_cast<size_t>(F)];
    auto vix = [&](const CornerRef& c) {
        size_t k = m.faces[static_cast<size_t>(c.face)].sides.size();
        return face_offset[static_cast<size_t>(c.face)] +
               static_cast<size_t>(c.sheet) * k + static_cast<size_t>(c.pos);
    };

    const auto& sd = symmetric_group(d);
    size_t perms = sd.size();

    ProfileTally tally;
    tally.d = d;
    tally.towers = m.towers;
    tally.n_exponent = -static_cast<long long>(m.edges) * d;

    std::vector<size_t> dial(static_cast<size_t>(m.edges), 0); // one perm index per edge
    std::vector<char> visited;
    for (;;) {
        visited.assign(total_corners, 0);
        std::vector<std::vector<int>> tower_parts(static_cast<size_t>(m.towers));

        for (int f0 = 0; f0 < F; ++f0) {
            int k = static_cast<int>(m.faces[static_cast<size_t>(f0)].sides.size());
            for (int s0 = 0; s0 < d; ++s0) {
                for (int t0 = 0; t0 < k; ++t0) {
                    if (visited[vix(CornerRef{f0, s0, t0})]) continue;
                    int tower = m.faces[static_cast<size_t>(f0)].sides[static_cast<size_t>(t0)].tower;
                    int len = 0;
                    CornerRef cur{f0, s0, t0};
                    do {
                        visited[vix(cur)] = 1;
                        ++len;
                        const auto& face = m.faces[static_cast<size_t>(cur.face)];
                        int kk = static_cast<int>(face.sides.size());
                        // step to the side after this corner, wrapping to the
                        // next sheet of the face cycle at the seam
                        int npos = (cur.pos + 1) % kk;
                        int nsheet = (cur.pos + 1 == kk)
                                         ? succ_sheet[static_cast<size_t>(cur.face)][static_cast<size_t>(cur.sheet)]
                                         : cur.sheet;
                        const MapSide& side = face.sides[static_cast<size_t>(npos)];
                        const Perm& pi = sd[dial[static_cast<size_t>(side.edge)]];
                        Occurrence other;
                        int psheet;
                        if (!side.rev) {
                            other = idx.bwd[static_cast<size_t>(side.edge)];
                            psheet = pi(nsheet);
                        } else {
                            other = idx.fwd[static_cast<size_t>(side.edge)];
                            psheet = pi.inverse()(nsheet);
                        }
                        int ptower = m.faces[static_cast<size_t>(other.face)]
                                         .sides[static_cast<size_t>(other.pos)].tower;
                        if (ptower != tower)
                            throw DomainError("corner cycle leaves its watchtower; the side/corner "
                                              "data do not describe a polygonal complex");
                        cur = CornerRef{other.face, psheet, other.pos};
                    } while (!(cur.face == f0 && cur.sheet == s0 && cur.pos == t0));
                    int kw = m.tower_corner_count[static_cast<size_t>(tower)];
                    if (len % kw != 0)
                        throw DomainError("corner cycle length is not a multiple of the tower "
                                          "word length; malformed map");
                    tower_parts[static_cast<size_t>(tower)].push_back(len / kw);
                }
            }
        }

        std::vector<Partition> key;
        key.reserve(static_cast<size_t>(m.towers));
        for (auto& parts : tower_parts) {
            std::sort(parts.begin(), parts.end(), std::greater<int>());
            key.push_back(Partition(parts));
        }
        tally.entries[key] += weight;

        // advance the odometer
        int pos = 0;
        while (pos < m.edges) {
            if (++dial[static_cast<size_t>(pos)] < perms) break;
            dial[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == m.edges) break;
    }

    for (auto it = tally.entries.begin(); it != tally.entries.end();)
        it = (it->second == 0) ? tally.entries.erase(it) : std::next(it);
    return tally;
}

} // namespace

CombinatorialMap CombinatorialMap::parse(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw DomainError(std::string("map JSON parse error: ") + e.what());
    }
    CombinatorialMap m;
    if (!j.contains("faces") || !j["faces"].is_array() || j["faces"].empty())
        throw DomainError("map needs a non-empty 'faces' array");
    try {
        for (const auto& jf : j["faces"]) {
            MapFace f;
            f.profile = Partition(jf.at("profile").get<std::vector<int>>());
            for (const auto& js : jf.at("sides")) {
                MapSide s;
                s.edge = js.at("edge").get<int>();
                s.rev = js.value("rev", false);
                s.tower = js.at("tower").get<int>();
                s.slot = js.at("slot").get<int>();
                f.sides.push_back(s);
            }
            m.faces.push_back(std::move(f));
        }
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("map JSON field error: ") + e.what());
    }
    m.validate();
    return m;
}

void CombinatorialMap::validate() {
    std::set<int> edge_ids, tower_ids;
    std::map<int, int> edge_fwd, edge_bwd;
    for (const auto& f : faces) {
        if (f.sides.empty()) throw DomainError("face with no sides");
        for (const auto& s : f.sides) {
            edge_ids.insert(s.edge);
            tower_ids.insert(s.tower);
            ++(s.rev ? edge_bwd : edge_fwd)[s.edge];
        }
    }
    edges = static_cast<int>(edge_ids.size());
    for (int l = 0; l < edges; ++l)
        if (!edge_ids.count(l)) throw DomainError("edge ids must be 0..n-1 without gaps");
    towers = static_cast<int>(tower_ids.size());
    for (int w = 0; w < towers; ++w)
        if (!tower_ids.count(w)) throw DomainError("tower ids must be 0..V-1 without gaps");

    for (int l = 0; l < edges; ++l) {
        if (edge_fwd[l] + edge_bwd[l] != 2)
            throw DomainError("edge " + std::to_string(l) + " must occur exactly twice");
        if (edge_fwd[l] != 1 || edge_bwd[l] != 1)
            throw DomainError("edge " + std::to_string(l) +
                              " occurs twice with the same orientation; the glued surface "
                              "would be non-orientable, which this oracle does not cover");
    }

    tower_corner_count.assign(static_cast<size_t>(towers), 0);
    for (const auto& f : faces)
        for (const auto& s : f.sides) ++tower_corner_count[static_cast<size_t>(s.tower)];

    // connectivity over faces joined by shared edges
    std::vector<int> comp(faces.size());
    for (size_t i = 0; i < comp.size(); ++i) comp[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (comp[static_cast<size_t>(x)] != x) x = comp[static_cast<size_t>(x)];
        return x;
    };
    MapIndex idx = index_edges(*this);
    for (int l = 0; l < edges; ++l)
        comp[static_cast<size_t>(find(idx.fwd[static_cast<size_t>(l)].face))] =
            find(idx.bwd[static_cast<size_t>(l)].face);
    for (size_t i = 0; i < comp.size(); ++i)
        if (find(static_cast<int>(i)) != find(0)) throw DomainError("map is not connected");

    // at d = 1 the unique gluing must close one corner cycle per tower
    // covering all its corners; this rules out inconsistent corner data
    CombinatorialMap probe = *this;
    for (auto& f : probe.faces) f.profile = Partition(std::vector<int>{1});
    contract(probe, 1);
}

ProfileTally wick_contract(const CombinatorialMap& m, int d, const Integer& budget) {
    if (d < 1) throw DomainError("wick contraction needs d >= 1");
    size_t corners = 0;
    for (const auto& f : m.faces) corners += f.sides.size();
    Integer steps = int_pow(factorial(d), static_cast<unsigned>(m.edges)) * Integer(corners) * d;
    if (steps > budget)
        throw BudgetError("wick contraction needs " + steps.str() + " steps, budget is " +
                          budget.str());
    return contract(m, d);
}

Report verify_theorem(const CombinatorialMap& m, int d, TableCache& tables, const Integer& budget) {
    ProfileTally wick = wick_contract(m, d, budget);

    std::vector<Partition> profiles;
    for (const auto& f : m.faces) profiles.push_back(f.profile);
    ProfileTally tuple = tuple_tally(m.euler(), true, profiles, m.towers, d, budget);

    if (wick.entries != tuple.entries)
        return {false, "wick and tuple tallies disagree on the map (e=" +
                           std::to_string(m.euler()) + ", d=" + std::to_string(d) + ")"};

    // both tallies against the character formula, on the full key grid
    std::vector<Partition> all = enumerate_partitions(d);
    std::vector<Partition> cur;
    Report bad{true, ""};
    std::function<void(int)> grid = [&](int v) {
        if (!bad.pass) return;
        if (v == m.towers) {
            auto ext = profiles;
            ext.insert(ext.end(), cur.begin(), cur.end());
            if (hurwitz(m.euler(), d, ext, tables) != wick.at(cur)) {
                std::string ks;
                for (const auto& p : cur) ks += p.str();
                bad = {false, "character formula disagrees with wick tally at towers " + ks};
            }
            return;
        }
        for (const auto& p : all) {
            cur.push_back(p);
            grid(v + 1);
            cur.pop_back();
        }
    };
    grid(0);
    if (!bad.pass) return bad;
    return {true, "wick = tuple = character formula on the map (d=" + std::to_string(d) + ")"};
}

CombinatorialMap example1_map(const Partition& delta1, const Partition& delta2) {
    CombinatorialMap m;
    m.faces.push_back(MapFace{delta1, {MapSide{0, false, 0, 0}}});
    m.faces.push_back(MapFace{delta2, {MapSide{0, true, 0, 1}}});
    m.validate();
    return m;
}

CombinatorialMap example2_map(const Partition& delta) {
    CombinatorialMap m;
    m.faces.push_back(MapFace{delta,
                              {MapSide{0, false, 0, 0}, MapSide{1, false, 0, 1},
                               MapSide{0, true, 0, 2}, MapSide{1, true, 0, 3}}});
    m.validate();
    return m;
}

CombinatorialMap sphere_three_face_map(const Partition& d1, const Partition& d2, const Partition& d3) {
    // theta graph: two watchtowers joined by three edges, three 2-gon faces
    CombinatorialMap m;
    m.faces.push_back(MapFace{d1, {MapSide{0, false, 1, 0}, MapSide{1, true, 0, 0}}});
    m.faces.push_back(MapFace{d2, {MapSide{1, false, 1, 1}, MapSide{2, true, 0, 1}}});
    m.faces.push_back(MapFace{d3, {MapSide{2, false, 1, 2}, MapSide{0, true, 0, 2}}});
    m.validate();
    return m;
}

} // namespace hn
