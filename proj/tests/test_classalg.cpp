// SPDX-License-Identifier: Apache-2.0
#include "hn/classalg.hpp"

#include "hn/engine.hpp"
#include "hn/symfun.hpp"

#include <doctest.h>

#include <random>

using namespace hn;

namespace {
Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }
TableCache& cache() {
    static TableCache c;
    return c;
}
}

TEST_CASE("basis conversions on known elements") {
    // identity class sum has phi = 1 against every idempotent
    CentralElement id3 = to_idempotent_basis(class_sum(3, P({1, 1, 1})), cache());
    for (const auto& l : enumerate_partitions(3)) CHECK(id3.coeff(l) == 1);

    CentralElement c21 = to_idempotent_basis(class_sum(3, P({2, 1})), cache());
    CHECK(c21.coeff(P({3})) == 3);
    CHECK(c21.coeff(P({2, 1})) == 0);
    CHECK(c21.coeff(P({1, 1, 1})) == -3);

    CentralElement f1 = from_idempotent_basis(idempotent(1, P({1})), cache());
    CHECK(f1.coeff(P({1})) == 1);

    CentralElement f2 = from_idempotent_basis(idempotent(2, P({2})), cache());
    CHECK(f2.coeff(P({1, 1})) == Rational(1, 2));
    CHECK(f2.coeff(P({2})) == Rational(1, 2));

    // resolution of identity: sum of idempotents is the identity class sum
    CentralElement sum{4, Basis::Idempotent, {}};
    for (const auto& l : enumerate_partitions(4)) sum.coeffs[l] = 1;
    CentralElement back = from_idempotent_basis(sum, cache());
    CHECK(back.coeffs.size() == 1);
    CHECK(back.coeff(P({1, 1, 1, 1})) == 1);
}

TEST_CASE("round trips on random elements") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-6, 6);
    for (int d = 1; d <= 6; ++d) {
        for (int rep = 0; rep < 5; ++rep) {
            CentralElement x{d, Basis::Class, {}};
            for (const auto& p : enumerate_partitions(d))
                x.set(p, Rational(num(rng), 1 + rep));
            CentralElement round = from_idempotent_basis(to_idempotent_basis(x, cache()), cache());
            CHECK(round == x);
        }
    }
}

TEST_CASE("class products") {
    // identity acts trivially
    for (const auto& p : enumerate_partitions(4)) {
        CentralElement prod = class_product(P({1, 1, 1, 1}), p, cache());
        CHECK(prod.coeffs.size() == 1);
        CHECK(prod.coeff(p) == 1);
    }

    CentralElement sq = class_product(P({2}), P({2}), cache());
    CHECK(sq.coeffs.size() == 1);
    CHECK(sq.coeff(P({1, 1})) == 1);

    CentralElement t2 = class_product(P({2, 1}), P({2, 1}), cache());
    CHECK(t2.coeff(P({1, 1, 1})) == 3);
    CHECK(t2.coeff(P({3})) == 3);
    CHECK(t2.coeff(P({2, 1})) == 0);
}

TEST_CASE("product coefficients are scaled sphere Hurwitz numbers") {
    // coefficient of c_Delta in c_A c_B equals H_2(A, B, Delta) z_Delta
    for (const auto& a : enumerate_partitions(4))
        for (const auto& b : enumerate_partitions(4)) {
            CentralElement prod = class_product(a, b, cache());
            for (const auto& delta : enumerate_partitions(4)) {
                Rational h = hurwitz(2, 4, {a, b, delta}, cache());
                CHECK(prod.coeff(delta) == h * Rational(delta.z_order()));
            }
        }
}

TEST_CASE("associativity and commutativity on random triples") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-4, 4);
    for (int d = 2; d <= 5; ++d) {
        auto parts = enumerate_partitions(d);
        std::uniform_int_distribution<size_t> pick(0, parts.size() - 1);
        for (int rep = 0; rep < 4; ++rep) {
            CentralElement x{d, Basis::Class, {}}, y{d, Basis::Class, {}}, z{d, Basis::Class, {}};
            x.set(parts[pick(rng)], num(rng));
            x.set(parts[pick(rng)], num(rng));
            y.set(parts[pick(rng)], num(rng));
            z.set(parts[pick(rng)], num(rng));
            CentralElement xy_z = multiply(multiply(x, y, cache()), z, cache());
            CentralElement x_yz = multiply(x, multiply(y, z, cache()), cache());
            CHECK(xy_z == x_yz);
            CHECK(multiply(x, y, cache()) == multiply(y, x, cache()));
        }
    }
}

TEST_CASE("idempotency check with negative control") {
    CHECK(idempotency_check(2, cache()).pass);
    CHECK(idempotency_check(3, cache()).pass);
    CHECK(idempotency_check(4, cache()).pass);

    // a perturbed projector stops being idempotent
    CentralElement f = idempotent(3, P({2, 1}));
    f.coeffs[P({3})] = Rational(1, 7);
    CentralElement sq = multiply(f, f, cache());
    CHECK_FALSE(sq == f);
}

TEST_CASE("jm insertions") {
    // first power sum of contents: coefficients are content sums
    CentralElement p1 = jm_insertion(SymmetricInsertion::power_sum({1}), 2);
    CHECK(p1.coeff(P({2})) == 1);
    CHECK(p1.coeff(P({1, 1})) == -1);

    // G = 1 gives the identity element
    CentralElement one = from_idempotent_basis(jm_insertion(SymmetricInsertion::one(), 3), cache());
    CHECK(one.coeffs.size() == 1);
    CHECK(one.coeff(P({1, 1, 1})) == 1);

    // sum of Jucys-Murphy elements is the transposition class sum
    for (int d = 2; d <= 8; ++d) {
        CentralElement x =
            from_idempotent_basis(jm_insertion(SymmetricInsertion::power_sum({1}), d), cache());
        std::vector<int> tr{2};
        tr.insert(tr.end(), static_cast<size_t>(d - 2), 1);
        CHECK(x.coeffs.size() == 1);
        CHECK(x.coeff(Partition(tr)) == 1);
    }
}

TEST_CASE("q-exponential insertion matches completed-cycle eigenvalues") {
    Rational s(3, 2);
    for (int d = 1; d <= 5; ++d) {
        auto series = jm_insertion_qexp(s, d, 4);
        for (const auto& l : enumerate_partitions(d)) {
            // t^k coefficient on F_lambda must be e_lambda(q)^k / k!
            Rational e = completed_cycle_eigen(l, s);
            Rational power = 1;
            Integer kfact = 1;
            for (int k = 0; k <= 4; ++k) {
                if (k > 0) {
                    power *= e;
                    kfact *= k;
                }
                CHECK(series[static_cast<size_t>(k)].coeff(l) == power / Rational(kfact));
            }
        }
    }
    CHECK_THROWS_AS(jm_insertion_qexp(Rational(0), 2, 2), DomainError);
}
