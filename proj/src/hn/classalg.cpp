// SPDX-License-Identifier: Apache-2.0
#include "hn/classalg.hpp"

#include <algorithm>

namespace hn {

CentralElement class_sum(int d, const Partition& delta) {
    if (delta.weight() != d) throw DomainError("class sum weight mismatch");
    CentralElement x{d, Basis::Class, {}};
    x.coeffs[delta] = 1;
    return x;
}

CentralElement idempotent(int d, const Partition& lambda) {
    if (lambda.weight() != d) throw DomainError("idempotent weight mismatch");
    CentralElement x{d, Basis::Idempotent, {}};
    x.coeffs[lambda] = 1;
    return x;
}

CentralElement to_idempotent_basis(const CentralElement& x, TableCache& tables) {
    if (x.basis == Basis::Idempotent) return x;
    const CharacterTable& t = tables.get(x.d);
    CentralElement out{x.d, Basis::Idempotent, {}};
    for (const auto& lambda : t.order()) {
        Rational acc = 0;
        for (const auto& [delta, c] : x.coeffs) acc += c * t.normalized(lambda, delta);
        out.set(lambda, acc);
    }
    return out;
}

CentralElement from_idempotent_basis(const CentralElement& x, TableCache& tables) {
    if (x.basis == Basis::Class) return x;
    const CharacterTable& t = tables.get(x.d);
    Integer dfact = factorial(x.d);
    CentralElement out{x.d, Basis::Class, {}};
    for (const auto& delta : t.order()) {
        Rational acc = 0;
        Rational z(delta.z_order());
        for (const auto& [lambda, c] : x.coeffs) {
            Rational dd(Integer(t.dim(lambda)), dfact);
            acc += c * dd * dd * z * t.normalized(lambda, delta);
        }
        out.set(delta, acc);
    }
    return out;
}

CentralElement class_product(const Partition& d1, const Partition& d2, TableCache& tables) {
    if (d1.weight() != d2.weight()) throw DomainError("class product weight mismatch");
    int d = d1.weight();
    const CharacterTable& t = tables.get(d);
    CentralElement prod{d, Basis::Idempotent, {}};
    for (const auto& lambda : t.order())
        prod.set(lambda, t.normalized(lambda, d1) * t.normalized(lambda, d2));
    return from_idempotent_basis(prod, tables);
}

CentralElement multiply(const CentralElement& a, const CentralElement& b, TableCache& tables) {
    if (a.d != b.d) throw DomainError("central element degree mismatch");
    CentralElement ia = to_idempotent_basis(a, tables);
    CentralElement ib = to_idempotent_basis(b, tables);
    CentralElement out{a.d, Basis::Idempotent, {}};
    for (const auto& [lambda, c] : ia.coeffs) out.set(lambda, c * ib.coeff(lambda));
    return out;
}

Report idempotency_check(int d, TableCache& tables) {
    const CharacterTable& t = tables.get(d);
    for (const auto& l : t.order()) {
        for (const auto& m : t.order()) {
            CentralElement prod = multiply(from_idempotent_basis(idempotent(d, l), tables),
                                           from_idempotent_basis(idempotent(d, m), tables), tables);
            CentralElement expect{d, Basis::Idempotent, {}};
            if (l == m) expect.coeffs[l] = 1;
            if (!(prod == expect))
                return {false, "idempotent relation fails at (" + l.str() + "," + m.str() + ")"};
        }
    }
    return {true, "idempotent basis exact for d=" + std::to_string(d)};
}

SymmetricInsertion SymmetricInsertion::power_sum(const std::vector<int>& exponents) {
    std::vector<int> e = exponents;
    std::sort(e.begin(), e.end(), std::greater<int>());
    for (int x : e)
        if (x <= 0) throw DomainError("power-sum exponents must be positive");
    SymmetricInsertion g;
    g.powersum_terms[Partition(e)] = 1;
    return g;
}

SymmetricInsertion SymmetricInsertion::one() {
    SymmetricInsertion g;
    g.powersum_terms[Partition()] = 1;
    return g;
}

Rational SymmetricInsertion::eval_on(const std::vector<int>& contents) const {
    Rational total = 0;
    for (const auto& [mono, c] : powersum_terms) {
        Rational term = c;
        for (int k : mono.parts()) {
            Rational pk = 0;
            for (int x : contents) pk += rat_pow(Rational(x), k);
            term *= pk;
        }
        total += term;
    }
    return total;
}

CentralElement jm_insertion(const SymmetricInsertion& g, int d) {
    CentralElement out{d, Basis::Idempotent, {}};
    for (const auto& lambda : enumerate_partitions(d)) out.set(lambda, g.eval_on(lambda.contents()));
    return out;
}

std::vector<CentralElement> jm_insertion_qexp(const Rational& s, int d, int order) {
    if (s == 0) throw DomainError("q-exponential insertion requires s != 0");
    std::vector<CentralElement> series(static_cast<size_t>(order) + 1,
                                       CentralElement{d, Basis::Idempotent, {}});
    for (const auto& lambda : enumerate_partitions(d)) {
        // (q^(1/2)-q^(-1/2)) sum_i q^(c_i) with q = s^2
        Rational base = 0;
        for (int c : lambda.contents()) base += rat_pow(s, 2L * c);
        base *= s - Rational(1) / s;
        Rational power = 1;
        Integer kfact = 1;
        for (int k = 0; k <= order; ++k) {
            if (k > 0) {
                power *= base;
                kfact *= k;
            }
            series[static_cast<size_t>(k)].set(lambda, power / Rational(kfact));
        }
    }
    return series;
}

} // namespace hn
