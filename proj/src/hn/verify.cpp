// SPDX-License-Identifier: Apache-2.0
#include "hn/verify.hpp"

#include "hn/classalg.hpp"
#include "hn/engine.hpp"
#include "hn/symfun.hpp"
#include "hn/tuple_oracle.hpp"
#include "hn/wick.hpp"
#include "hn/ym.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace hn {

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

std::vector<std::vector<Partition>> profile_lists(int d, int max_f) {
    std::vector<std::vector<Partition>> out{{}};
    std::vector<Partition> all = enumerate_partitions(d);
    std::vector<Partition> cur;
    std::function<void(int)> rec = [&](int f) {
        if (f > 0) out.push_back(cur);
        if (f == max_f) return;
        for (const auto& p : all) {
            cur.push_back(p);
            rec(f + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

Report paper_example1(TableCache& tables, const Integer& budget) {
    struct Case {
        Partition third;
        Rational value;
    };
    std::vector<Case> cases{{P({3}), Rational(1, 3)}, {P({1, 1, 1}), Rational(1, 3)}, {P({2, 1}), Rational(0)}};
    for (const auto& c : cases) {
        std::vector<Partition> profiles{P({3}), P({3}), c.third};
        Rational engine = hurwitz(2, 3, profiles, tables);
        Rational tuples = tuple_hurwitz(2, true, profiles, 3, budget);
        if (engine != c.value || tuples != c.value)
            return {false, "sphere triple " + c.third.str() + ": engine " + rat_str(engine) +
                               ", tuple " + rat_str(tuples) + ", expected " + rat_str(c.value)};
    }
    ProfileTally wick = wick_contract(example1_map(P({3}), P({3})), 3, budget);
    if (wick.n_exponent != -3) return {false, "one-edge map must carry N^-3"};
    for (const auto& c : cases)
        if (wick.at({c.third}) != c.value)
            return {false, "wick tally at " + c.third.str() + " is " + rat_str(wick.at({c.third}))};
    return {true, "H_2((3),(3),.) = 1/3, 1/3, 0 via engine, tuples and wick"};
}

Report paper_example2(TableCache& tables, const Integer& budget) {
    struct Case {
        Partition a, b;
        Rational value;
    };
    std::vector<Case> cases{{P({1, 1}), P({1, 1}), Rational(2)},
                            {P({1, 1}), P({2}), Rational(0)},
                            {P({2}), P({2}), Rational(2)},
                            {P({2}), P({1, 1}), Rational(0)}};
    for (const auto& c : cases) {
        Rational engine = hurwitz(0, 2, {c.a, c.b}, tables);
        Rational tuples = tuple_hurwitz(0, true, {c.a, c.b}, 2, budget);
        ProfileTally wick = wick_contract(example2_map(c.a), 2, budget);
        Rational from_wick = wick.at({c.b});
        if (engine != c.value || tuples != c.value || from_wick != c.value)
            return {false, "torus pair (" + c.a.str() + "," + c.b.str() + "): engine " +
                               rat_str(engine) + ", tuple " + rat_str(tuples) + ", wick " +
                               rat_str(from_wick) + ", expected " + rat_str(c.value)};
    }
    return {true, "H_0 torus pairs = 2, 0, 2, 0 via engine, tuples and wick"};
}

Report paper_examples_d1(TableCache&, const Integer& budget) {
    ProfileTally w1 = wick_contract(example1_map(P({1}), P({1})), 1, budget);
    if (w1.n_exponent != -1 || w1.entries.size() != 1 || w1.at({P({1})}) != 1)
        return {false, "one-sheet sphere map: expected single entry 1 with N^-1"};
    ProfileTally w2 = wick_contract(example2_map(P({1})), 1, budget);
    if (w2.n_exponent != -2 || w2.entries.size() != 1 || w2.at({P({1})}) != 1)
        return {false, "one-sheet torus map: expected single entry 1 with N^-2"};
    return {true, "d=1 contractions give tr(A Ahat) N^-1 and tr(..) N^-2 shapes"};
}

Report two_point_inverse(int d_max, TableCache& tables) {
    for (int d = 0; d <= d_max; ++d)
        for (const auto& delta : enumerate_partitions(d)) {
            Rational got = hurwitz(2, d, {delta, delta}, tables);
            if (got != Rational(1, delta.z_order()))
                return {false, "H_2(" + delta.str() + "," + delta.str() + ") = " + rat_str(got)};
            for (const auto& mu : enumerate_partitions(d))
                if (!(mu == delta) && hurwitz(2, d, {delta, mu}, tables) != 0)
                    return {false, "H_2(" + delta.str() + "," + mu.str() + ") != 0"};
        }
    return {true, "H_2(Delta, Mu) = delta_{Delta,Mu}/z for all weights <= " + std::to_string(d_max)};
}

Report orthogonality_sweep(int d_max, TableCache& tables) {
    for (int d = 0; d <= d_max; ++d) {
        Report r = verify_orthogonality(tables.get(d));
        if (!r.pass) return r;
    }
    return {true, "both orthogonality relations exact for d <= " + std::to_string(d_max)};
}

Report cut_relations(int d_max, TableCache& tables) {
    for (int d = 1; d <= d_max; ++d) {
        auto lists = profile_lists(d, 2);
        for (int e : {2, 1, 0, -1}) {
            for (const auto& profiles : lists) {
                Report h = verify_handle_cut(e, profiles, d, tables);
                if (!h.pass) return h;
                Report m = verify_moebius_cut(e, profiles, d, tables);
                if (!m.pass) return m;
            }
        }
        for (auto [e1, e2] : std::vector<std::pair<int, int>>{{2, 2}, {2, 1}, {2, 0}, {1, 1}, {1, 0}, {2, -1}}) {
            for (const auto& profiles : lists) {
                for (size_t cut = 0; cut <= profiles.size(); ++cut) {
                    std::vector<Partition> p1(profiles.begin(), profiles.begin() + static_cast<long>(cut));
                    std::vector<Partition> p2(profiles.begin() + static_cast<long>(cut), profiles.end());
                    Report r = verify_surface_cut(e1, e2, p1, p2, d, tables);
                    if (!r.pass) return r;
                }
            }
        }
    }
    return {true, "handle, surface and Moebius cuts exact for d <= " + std::to_string(d_max) +
                      ", e in {2,1,0,-1}"};
}

Report oracle_equivalence(int d_max, TableCache& tables, const Integer& budget) {
    // tuple model against the character formula over closed surfaces with
    // |e| <= 2, both orientations where defined
    for (int d = 1; d <= d_max; ++d) {
        auto singles = enumerate_partitions(d);
        auto check = [&](int e, bool orientable, const std::vector<Partition>& profiles) -> Report {
            Rational a = tuple_hurwitz(e, orientable, profiles, d, budget);
            Rational b = hurwitz(e, d, profiles, tables);
            if (a != b) {
                std::ostringstream os;
                os << "tuple oracle disagrees with formula at e=" << e
                   << (orientable ? " orientable" : " non-orientable") << " d=" << d;
                return {false, os.str()};
            }
            return {true, ""};
        };
        // sphere: up to three profiles
        for (const auto& a : singles)
            for (const auto& b : singles) {
                for (const auto& c : singles) {
                    Report r = check(2, true, {a, b, c});
                    if (!r.pass) return r;
                }
                Report r = check(2, true, {a, b});
                if (!r.pass) return r;
            }
        // torus / Klein bottle / RP^2 / e=-1 / e=-2, one profile and none
        for (const auto& a : singles) {
            for (auto [e, ori] : std::vector<std::pair<int, bool>>{
                     {0, true}, {1, false}, {0, false}, {-1, false}, {-2, true}, {-2, false}}) {
                Report r = check(e, ori, {a});
                if (!r.pass) return r;
            }
        }
        for (auto [e, ori] : std::vector<std::pair<int, bool>>{
                 {0, true}, {1, false}, {0, false}, {-1, false}, {-2, true}}) {
            Report r = check(e, ori, {});
            if (!r.pass) return r;
        }
        // two profiles on RP^2
        for (const auto& a : singles)
            for (const auto& b : singles) {
                Report r = check(1, false, {a, b});
                if (!r.pass) return r;
            }
    }
    return {true, "tuple oracle = character formula on sphere, torus, RP2, Klein bottle, e=-1, e=-2"};
}

Report wick_equivalence(int d_max, TableCache& tables, const Integer& budget) {
    for (int d = 1; d <= d_max; ++d)
        for (const auto& a : enumerate_partitions(d))
            for (const auto& b : enumerate_partitions(d)) {
                Report r = verify_theorem(example1_map(a, b), d, tables, budget);
                if (!r.pass) return r;
            }
    for (int d = 1; d <= std::min(2, d_max); ++d)
        for (const auto& a : enumerate_partitions(d)) {
            Report r = verify_theorem(example2_map(a), d, tables, budget);
            if (!r.pass) return r;
        }
    for (const auto& a : enumerate_partitions(2)) {
        Report r = verify_theorem(sphere_three_face_map(a, P({1, 1}), P({2})), 2, tables, budget);
        if (!r.pass) return r;
    }
    return {true, "wick = tuple = formula on the worked maps"};
}

Report cutjoin_checks(int eigen_max, int d_max, int m_max, TableCache& tables) {
    for (int d = 0; d <= eigen_max; ++d)
        for (const auto& lambda : enumerate_partitions(d)) {
            EigenReport r = cutjoin_eigencheck(lambda, tables);
            if (!r.pass) return {false, "cut-and-join eigencheck fails at " + lambda.str()};
        }
    return verify_cutjoin_evolution(d_max, m_max, tables);
}

Report tm_identity(int max_weight) {
    for (int d = 0; d <= max_weight; ++d)
        for (const auto& lambda : enumerate_partitions(d)) {
            Laurent lhs = quantum_content_sum(lambda) * (Laurent::monomial(1) - Laurent::monomial(-1));
            Laurent rhs = completed_cycle_eigen_poly(lambda);
            if (!(lhs == rhs))
                return {false, "quantum content identity fails at " + lambda.str()};
        }
    return {true, "(q^(1/2)-q^(-1/2)) sum q^content = completed-cycle eigenvalue, |lambda| <= " +
                      std::to_string(max_weight)};
}

Report tau_agreement(int d_max, int order, TableCache& tables) {
    for (int d = 1; d <= d_max; ++d) {
        for (int k_shift : {0, 1}) {
            auto tl = tau_jm_tl(k_shift, order, order, d, tables);
            for (const auto& [key, series] : tl) {
                TSeries<Laurent> engine = deformed_hurwitz_modes(2, d, {key.first, key.second},
                                                                 k_shift, order, order, tables);
                if (!(series == engine)) {
                    std::ostringstream os;
                    os << "TL tau coefficient differs from deformed Hurwitz at d=" << d << " ("
                       << key.first.str() << "," << key.second.str() << ") k=" << k_shift;
                    return {false, os.str()};
                }
            }
            auto bkp = tau_jm_bkp(k_shift, order, order, d, tables);
            for (const auto& [key, series] : bkp) {
                TSeries<Laurent> engine =
                    deformed_hurwitz_modes(1, d, {key}, k_shift, order, order, tables);
                if (!(series == engine)) {
                    std::ostringstream os;
                    os << "BKP tau coefficient differs from deformed Hurwitz at d=" << d << " "
                       << key.str() << " k=" << k_shift;
                    return {false, os.str()};
                }
            }
        }
    }
    return {true, "tau series coefficients = deformed Hurwitz numbers, d <= " +
                      std::to_string(d_max) + ", order " + std::to_string(order)};
}

Report ym_checks(int d_max, TableCache& tables) {
    Report cm = verify_char_map(5, tables);
    if (!cm.pass) return cm;
    for (int d = 1; d <= d_max; ++d) {
        for (auto [e, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {1, 1}}) {
            Report r = verify_ym_hurwitz_expansion(e, k, d, 2, tables);
            if (!r.pass) return r;
        }
    }
    return {true, "characteristic-map identity and Wilson-correlator expansion verified"};
}

Report schur_and_int_tau(int d_max, TableCache& tables, const Integer& budget) {
    for (int d = 1; d <= d_max; ++d) {
        for (const auto& lambda : enumerate_partitions(d)) {
            Report r = verify_schur_expectation(example1_map(lambda, lambda), {lambda, lambda}, d,
                                                tables, budget);
            if (!r.pass) return r;
        }
        // distinct representations integrate to zero
        if (d >= 2) {
            Report r = verify_schur_expectation(example1_map(P({2}), P({1, 1})),
                                                {Partition(std::vector<int>{2}), P({1, 1})}, 2,
                                                tables, budget);
            if (!r.pass) return r;
        }
    }
    for (auto [h, m, f] : std::vector<std::array<int, 3>>{{0, 0, 1}, {0, 1, 1}, {1, 0, 2}}) {
        Report r = verify_int_tau(h, m, f, std::min(2, d_max), 3, 2, tables, budget);
        if (!r.pass) return r;
    }
    return {true, "Schur expectations and tau-integral identities verified"};
}

CriterionResult timed(int id, const std::string& name, const std::function<Report()>& fn) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    r.id = id;
    r.name = name;
    try {
        Report rep = fn();
        r.pass = rep.pass;
        r.detail = rep.detail;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace

std::vector<CriterionResult> run_acceptance(TableCache& tables, const Integer& budget) {
    std::vector<CriterionResult> out;
    out.push_back(timed(1, "sphere triple (3),(3),. worked example",
                        [&] { return paper_example1(tables, budget); }));
    out.push_back(timed(2, "torus two-sheet worked example",
                        [&] { return paper_example2(tables, budget); }));
    out.push_back(timed(3, "one-sheet contractions on both maps",
                        [&] { return paper_examples_d1(tables, budget); }));
    out.push_back(timed(4, "two-point H_2 = 1/z to weight 6",
                        [&] { return two_point_inverse(6, tables); }));
    out.push_back(timed(5, "character orthogonality to d=8",
                        [&] { return orthogonality_sweep(8, tables); }));
    out.push_back(timed(6, "cut relations exhaustive to d=4",
                        [&] { return cut_relations(4, tables); }));
    out.push_back(timed(7, "oracle equivalence (tuples d<=4, wick d<=3)", [&] {
        Report a = oracle_equivalence(4, tables, budget);
        if (!a.pass) return a;
        return wick_equivalence(3, tables, budget);
    }));
    out.push_back(timed(8, "cut-and-join eigenvalues and evolution",
                        [&] { return cutjoin_checks(6, 4, 3, tables); }));
    out.push_back(timed(9, "quantum content identity to weight 6",
                        [&] { return tm_identity(6); }));
    out.push_back(timed(10, "tau series = deformed Hurwitz to d=4, order 3",
                        [&] { return tau_agreement(4, 3, tables); }));
    out.push_back(timed(11, "characteristic map and Wilson 1/N expansion", [&] {
        Report a = ym_checks(3, tables);
        if (!a.pass) return a;
        return schur_and_int_tau(3, tables, budget);
    }));
    return out;
}

std::vector<CriterionResult> run_fast_checks(TableCache& tables, const Integer& budget) {
    std::vector<CriterionResult> out;
    out.push_back(timed(1, "sphere triple (3),(3),. worked example",
                        [&] { return paper_example1(tables, budget); }));
    out.push_back(timed(2, "torus two-sheet worked example",
                        [&] { return paper_example2(tables, budget); }));
    out.push_back(timed(3, "one-sheet contractions on both maps",
                        [&] { return paper_examples_d1(tables, budget); }));
    out.push_back(timed(4, "two-point H_2 = 1/z to weight 3",
                        [&] { return two_point_inverse(3, tables); }));
    out.push_back(timed(5, "character orthogonality to d=4",
                        [&] { return orthogonality_sweep(4, tables); }));
    out.push_back(timed(6, "cut relations exhaustive to d=3",
                        [&] { return cut_relations(3, tables); }));
    out.push_back(timed(7, "oracle equivalence to d=3", [&] {
        Report a = oracle_equivalence(3, tables, budget);
        if (!a.pass) return a;
        return wick_equivalence(2, tables, budget);
    }));
    out.push_back(timed(8, "cut-and-join eigenvalues and evolution (d<=3)",
                        [&] { return cutjoin_checks(3, 3, 3, tables); }));
    out.push_back(timed(9, "quantum content identity to weight 3",
                        [&] { return tm_identity(3); }));
    out.push_back(timed(10, "tau series = deformed Hurwitz to d=2, order 2",
                        [&] { return tau_agreement(2, 2, tables); }));
    out.push_back(timed(11, "characteristic map and Wilson 1/N expansion (d<=2)", [&] {
        Report a = ym_checks(2, tables);
        if (!a.pass) return a;
        return schur_and_int_tau(2, tables, budget);
    }));
    return out;
}

Report run_suite(const std::string& name, int d, TableCache& tables, const Integer& budget) {
    if (name == "orthogonality") return orthogonality_sweep(d, tables);
    if (name == "idempotency") {
        for (int k = 0; k <= d; ++k) {
            Report r = idempotency_check(k, tables);
            if (!r.pass) return r;
        }
        return {true, "idempotency exact for d <= " + std::to_string(d)};
    }
    if (name == "cuts") return cut_relations(d, tables);
    if (name == "cutjoin") return cutjoin_checks(d, std::min(d, 4), 3, tables);
    if (name == "tm") return tm_identity(d);
    if (name == "oracles") return oracle_equivalence(d, tables, budget);
    if (name == "theorem31") return wick_equivalence(std::min(d, 3), tables, budget);
    if (name == "tau") return tau_agreement(std::min(d, 4), 3, tables);
    if (name == "charmap") return verify_char_map(d, tables);
    if (name == "ym") return ym_checks(std::min(d, 3), tables);
    if (name == "schur-expectation" || name == "int-tau")
        return schur_and_int_tau(std::min(d, 3), tables, budget);
    if (name == "twopoint") return two_point_inverse(d, tables);
    throw DomainError("unknown verification suite '" + name + "'");
}

} // namespace hn
