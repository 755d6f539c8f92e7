// SPDX-License-Identifier: Apache-2.0
#include "hn/tuple_oracle.hpp"

#include <functional>

namespace hn {

namespace {

int genus_slots(int euler, bool orientable) {
    if (orientable) {
        if (euler > 2 || euler % 2 != 0)
            throw DomainError("orientable surfaces need even Euler characteristic <= 2");
        return 2 - euler; // = 2g: one slot per handle generator a_i, b_i
    }
    if (euler > 1) throw DomainError("non-orientable surfaces need Euler characteristic <= 1");
    return 2 - euler; // = g: one slot per cross-cap generator c_i
}

struct Enumeration {
    int d = 0;
    bool orientable = true;
    int g_slots = 0;                        // generator slots before the sigma block
    std::vector<std::vector<Perm>> classes; // enumerated fixed classes
    int free_enumerated = 0;                // free tower slots enumerated (last one is solved)

    Integer steps() const {
        Integer s = 1;
        Integer dfact = factorial(d);
        for (int i = 0; i < g_slots; ++i) s *= dfact; // each generator ranges over S_d
        for (const auto& c : classes) s *= static_cast<long long>(c.size());
        for (int i = 0; i < free_enumerated; ++i) s *= dfact;
        return s;
    }
};

// Walk every assignment of the enumerated slots, calling sink with the
// left-to-right product of the relator prefix and the free-slot types.
void walk(const Enumeration& en, const std::function<void(const Perm&, std::vector<Partition>&)>& sink) {
    const auto& sd = symmetric_group(en.d);
    std::vector<Partition> free_types;
    free_types.reserve(static_cast<size_t>(en.free_enumerated));

    std::function<void(int, const Perm&)> free_rec = [&](int slot, const Perm& acc) {
        if (slot == en.free_enumerated) {
            sink(acc, free_types);
            return;
        }
        for (const Perm& t : sd) {
            free_types.push_back(t.cycle_type());
            free_rec(slot + 1, acc * t);
            free_types.pop_back();
        }
    };

    std::function<void(size_t, const Perm&)> class_rec = [&](size_t ci, const Perm& acc) {
        if (ci == en.classes.size()) {
            free_rec(0, acc);
            return;
        }
        for (const Perm& s : en.classes[ci]) class_rec(ci + 1, acc * s);
    };

    if (en.orientable) {
        // handle pairs contribute commutators [a,b]
        std::function<void(int, const Perm&)> gen_rec = [&](int pair, const Perm& acc) {
            if (pair == en.g_slots / 2) {
                class_rec(0, acc);
                return;
            }
            for (const Perm& a : sd)
                for (const Perm& b : sd)
                    gen_rec(pair + 1, acc * (a * b * a.inverse() * b.inverse()));
        };
        gen_rec(0, Perm(en.d));
    } else {
        std::function<void(int, const Perm&)> gen_rec = [&](int slot, const Perm& acc) {
            if (slot == en.g_slots) {
                class_rec(0, acc);
                return;
            }
            for (const Perm& c : sd) gen_rec(slot + 1, acc * (c * c));
        };
        gen_rec(0, Perm(en.d));
    }
}

} // namespace

Rational tuple_hurwitz(int euler, bool orientable, const std::vector<Partition>& profiles, int d,
                       const Integer& budget) {
    for (const auto& p : profiles)
        if (p.weight() != d) throw DomainError("profile weight disagrees with degree");

    Enumeration en;
    en.d = d;
    en.orientable = orientable;
    en.g_slots = genus_slots(euler, orientable);
    // the last fixed profile is solved from the relator instead of enumerated
    for (size_t i = 0; profiles.size() >= 1 && i + 1 < profiles.size(); ++i)
        en.classes.push_back(conjugacy_class(profiles[i]));

    Integer steps = en.steps();
    if (steps > budget)
        throw BudgetError("tuple enumeration needs " + steps.str() + " steps, budget is " +
                          budget.str());

    long long count = 0;
    if (profiles.empty()) {
        walk(en, [&](const Perm& acc, std::vector<Partition>&) {
            if (acc.is_identity()) ++count;
        });
    } else {
        // the solved slot is acc^-1, which has the same cycle type as acc
        const Partition& last = profiles.back();
        walk(en, [&](const Perm& acc, std::vector<Partition>&) {
            if (acc.cycle_type() == last) ++count;
        });
    }
    return Rational(count, factorial(d));
}

ProfileTally tuple_tally(int euler, bool orientable, const std::vector<Partition>& fixed_profiles,
                         int free_slots, int d, const Integer& budget) {
    for (const auto& p : fixed_profiles)
        if (p.weight() != d) throw DomainError("profile weight disagrees with degree");
    if (free_slots < 0) throw DomainError("negative tower count");

    ProfileTally tally;
    tally.d = d;
    tally.towers = free_slots;
    tally.n_exponent = 0;
    if (free_slots == 0) {
        Rational v = tuple_hurwitz(euler, orientable, fixed_profiles, d, budget);
        if (v != 0) tally.entries[{}] = v;
        return tally;
    }

    Enumeration en;
    en.d = d;
    en.orientable = orientable;
    en.g_slots = genus_slots(euler, orientable);
    for (const auto& p : fixed_profiles) en.classes.push_back(conjugacy_class(p));
    en.free_enumerated = free_slots - 1; // last tower is solved from the relator

    Integer steps = en.steps();
    if (steps > budget)
        throw BudgetError("tuple tally needs " + steps.str() + " steps, budget is " + budget.str());

    Rational unit(1, factorial(d));
    walk(en, [&](const Perm& acc, std::vector<Partition>& free_types) {
        std::vector<Partition> key = free_types;
        key.push_back(acc.cycle_type()); // solved slot acc^-1 shares the type
        tally.entries[key] += unit;
    });
    // drop exact zeros that never accumulated (none expected, keys are additive)
    for (auto it = tally.entries.begin(); it != tally.entries.end();)
        it = (it->second == 0) ? tally.entries.erase(it) : std::next(it);
    return tally;
}

} // namespace hn
