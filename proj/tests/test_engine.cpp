// SPDX-License-Identifier: Apache-2.0
#include "hn/engine.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace hn;

namespace {
Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }
TableCache& cache() {
    static TableCache c;
    return c;
}
}

TEST_CASE("surface validation") {
    CHECK_NOTHROW((SurfaceSpec{2, true}).validate());
    CHECK_NOTHROW((SurfaceSpec{1, false}).validate());
    CHECK_NOTHROW((SurfaceSpec{-2, false}).validate());
    CHECK_THROWS_AS((SurfaceSpec{3, true}).validate(), DomainError);
    CHECK_THROWS_AS((SurfaceSpec{1, true}).validate(), DomainError);
    CHECK_THROWS_AS((SurfaceSpec{2, false}).validate(), DomainError);
}

TEST_CASE("worked sphere and torus values") {
    CHECK(hurwitz(2, -1, {P({3}), P({3}), P({3})}, cache()) == Rational(1, 3));
    CHECK(hurwitz(2, -1, {P({3}), P({3}), P({1, 1, 1})}, cache()) == Rational(1, 3));
    CHECK(hurwitz(2, -1, {P({3}), P({3}), P({2, 1})}, cache()) == 0);
    CHECK(hurwitz(0, -1, {P({1, 1}), P({1, 1})}, cache()) == 2);
    CHECK(hurwitz(0, -1, {P({1, 1}), P({2})}, cache()) == 0);
    CHECK(hurwitz(0, -1, {P({2}), P({2})}, cache()) == 2);
    // unbranched double cover of the sphere
    CHECK(hurwitz(2, 2, {}, cache()) == Rational(1, 2));
    // degree zero: the empty covering
    CHECK(hurwitz(2, 0, {}, cache()) == 1);
    CHECK_THROWS_AS(hurwitz(2, -1, {P({2}), P({3})}, cache()), DomainError);
    CHECK_THROWS_AS(hurwitz(2, -1, {}, cache()), DomainError);
}

TEST_CASE("two-point orthogonality values") {
    for (int d = 0; d <= 6; ++d)
        for (const auto& delta : enumerate_partitions(d))
            CHECK(hurwitz(2, d, {delta, delta}, cache()) == Rational(1, delta.z_order()));
}

TEST_CASE("profile permutation and padding invariance") {
    std::vector<Partition> profiles{P({2, 1, 1}), P({3, 1}), P({2, 2})};
    Rational base = hurwitz(0, -1, profiles, cache());
    std::sort(profiles.begin(), profiles.end());
    do {
        CHECK(hurwitz(0, -1, profiles, cache()) == base);
    } while (std::next_permutation(profiles.begin(), profiles.end()));

    auto padded = std::vector<Partition>{P({2, 1, 1}), P({3, 1}), P({2, 2}), P({1, 1, 1, 1})};
    CHECK(hurwitz(0, -1, padded, cache()) == base);
}

TEST_CASE("parity vanishing from the cover Euler characteristic") {
    // colength sum incompatible with an even cover characteristic forces 0
    for (int d = 1; d <= 4; ++d) {
        std::vector<std::vector<Partition>> lists{{}};
        for (const auto& a : enumerate_partitions(d)) {
            lists.push_back({a});
            for (const auto& b : enumerate_partitions(d)) lists.push_back({a, b});
        }
        for (int e : {2, 0}) {
            for (const auto& profiles : lists) {
                int colength_sum = 0;
                for (const auto& p : profiles) colength_sum += p.colength();
                if (((e * d - colength_sum) % 2 + 2) % 2 == 1)
                    CHECK(hurwitz(e, d, profiles, cache()) == 0);
            }
        }
    }
}

TEST_CASE("moebius functional via both routes") {
    CHECK(moebius_functional(P({1}), cache()) == 1);
    CHECK(moebius_functional(P({1, 1}), cache()) == 2);
    CHECK(moebius_functional(P({2}), cache()) == 0);
    // d=3: the squares in S_3 are the identity (4 times) and both 3-cycles
    CHECK(moebius_functional(P({1, 1, 1}), cache()) == 4);
    CHECK(moebius_functional(P({2, 1}), cache()) == 0);
    CHECK(moebius_functional(P({3}), cache()) == 1);
    for (int d = 0; d <= 6; ++d)
        for (const auto& delta : enumerate_partitions(d))
            CHECK(moebius_functional(delta, cache()) == moebius_character_sum(delta, cache()));
}

TEST_CASE("cut relations on specific instances") {
    CHECK(verify_handle_cut(2, {P({1, 1})}, -1, cache()).pass);
    CHECK(verify_handle_cut(2, {P({3})}, -1, cache()).pass);
    CHECK(verify_handle_cut(1, {P({2, 1})}, -1, cache()).pass); // Klein-cut instance
    // H_0((1,1)) = sum_Delta H_2((1,1),Delta,Delta) z = 2
    Rational rhs = 0;
    for (const auto& delta : enumerate_partitions(2))
        rhs += hurwitz(2, -1, {P({1, 1}), delta, delta}, cache()) * Rational(delta.z_order());
    CHECK(rhs == 2);

    CHECK(verify_surface_cut(2, 2, {P({3}), P({3})}, {P({3})}, -1, cache()).pass);
    CHECK(verify_surface_cut(2, 0, {P({2, 1})}, {P({3})}, -1, cache()).pass);
    CHECK(verify_surface_cut(2, 0, {P({2})}, {}, -1, cache()).pass);

    CHECK(verify_moebius_cut(2, {P({2, 1, 1})}, -1, cache()).pass);
    CHECK(verify_moebius_cut(1, {P({2, 1})}, -1, cache()).pass);
    CHECK(verify_moebius_cut(2, {P({1})}, -1, cache()).pass);
}

TEST_CASE("deformed hurwitz series") {
    // t^0 coefficient is the plain Hurwitz number
    auto series = deformed_hurwitz(2, -1, {P({2, 1}), P({2, 1})}, Rational(2), 3, cache());
    CHECK(series.coeff({0}) == hurwitz(2, -1, {P({2, 1}), P({2, 1})}, cache()));

    // s = 1 (q = 1) kills every positive order
    auto flat = deformed_hurwitz(0, -1, {P({2}), P({2})}, Rational(1), 3, cache());
    CHECK(flat.coeff({0}) == 2);
    CHECK(flat.coeff({1}) == 0);
    CHECK(flat.coeff({2}) == 0);

    // single sheet: exp(t (s - 1/s)) times the base value
    Rational s(3, 1);
    auto one = deformed_hurwitz(2, -1, {P({1}), P({1})}, s, 3, cache());
    Rational step = s - Rational(1) / s;
    CHECK(one.coeff({0}) == 1);
    CHECK(one.coeff({1}) == step);
    CHECK(one.coeff({2}) == step * step / 2);
    CHECK(one.coeff({3}) == step * step * step / 6);

    CHECK_THROWS_AS(deformed_hurwitz(2, -1, {P({1})}, Rational(0), 2, cache()), DomainError);
}

TEST_CASE("derivative of the deformation matches the transposition insertion") {
    // d/dt at 0, divided by (q^(1/2)-q^(-1/2)) sum q^c, reproduces one extra
    // transposition class; checked through an added profile
    Rational s(2, 1);
    for (int d = 2; d <= 4; ++d) {
        for (const auto& delta : enumerate_partitions(d)) {
            auto series = deformed_hurwitz(2, d, {delta}, s, 1, cache());
            // the t-coefficient equals sum_lambda e_lambda(q) phi (dim/d!)^2;
            // comparing against the engine with a transposition inserted uses
            // e_lambda = (q^(1/2)-q^(-1/2)) * content sum only after summing
            // over lambda, so build the reference directly:
            Rational expect = 0;
            const CharacterTable& t = cache().get(d);
            for (const auto& l : t.order()) {
                Rational w = t.normalized(l, delta);
                Rational dim_frac(Integer(t.dim(l)), factorial(d));
                Rational content = 0;
                for (int c : l.contents()) content += rat_pow(s, 2L * c);
                expect += w * dim_frac * dim_frac * (s - Rational(1) / s) * content;
            }
            CHECK(series.coeff({1}) == expect);
        }
    }
}

TEST_CASE("one-point series and connected log") {
    CHECK(one_hurwitz(0, P({1, 1}), cache()) == Rational(1, 2));
    CHECK(one_hurwitz(2, P({1, 1}), cache()) == Rational(1, 2));
    CHECK(one_hurwitz(1, P({2}), cache()) == Rational(1, 2));
    CHECK_THROWS_AS(one_hurwitz(1, P({1}), cache()), DomainError);

    auto table = generating_series(3, 3, cache());
    CHECK(table.at(UPKey{0, P({1})}) == 1);
    CHECK(table.at(UPKey{0, P({1, 1})}) == Rational(1, 2));
    CHECK(table.count(UPKey{1, P({1})}) == 0);
    // spot values against one_hurwitz
    CHECK(table.at(UPKey{2, P({1, 1})}) == one_hurwitz(2, P({1, 1}), cache()));
    CHECK(table.at(UPKey{1, P({2})}) == one_hurwitz(1, P({2}), cache()));
    CHECK(table.at(UPKey{2, P({3})}) == one_hurwitz(2, P({3}), cache()));
    CHECK(table.at(UPKey{2, P({3})}) == 1);

    auto connected = connected_log(table, 3, 3);
    CHECK(connected.at(UPKey{0, P({1})}) == 1);
    CHECK(connected.count(UPKey{0, P({1, 1})}) == 0); // disconnected-only, cancels in the log
    // connected double covers of the sphere need both simple branch points
    CHECK(connected.at(UPKey{2, P({1, 1})}) == Rational(1, 2));
    CHECK(connected.count(UPKey{2, P({2})}) == 0); // parity-impossible profile
}

TEST_CASE("cut-and-join evolution") {
    CHECK(verify_cutjoin_evolution(3, 3, cache()).pass);
    CHECK(verify_cutjoin_evolution(4, 2, cache()).pass);

    // corrupting one coefficient must break the evolution equation
    auto table = generating_series(3, 3, cache());
    table[UPKey{1, P({2, 1})}] += Rational(1, 5);
    bool broken = false;
    for (int m = 0; m < 3 && !broken; ++m) {
        PowerSumPoly level, next;
        for (const auto& delta : enumerate_partitions(3)) {
            if (auto it = table.find(UPKey{m, delta}); it != table.end())
                level.add_term(delta, it->second);
            if (auto it = table.find(UPKey{m + 1, delta}); it != table.end())
                next.add_term(delta, it->second);
        }
        broken = !(cut_and_join_apply(level) == next);
    }
    CHECK(broken);
}
