// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hn/characters.hpp"
#include "hn/partition.hpp"
#include "hn/rational.hpp"

#include <map>

namespace hn {

enum class Basis { Class, Idempotent };

// Element of the center Z(C[S_d]) as a rational coefficient vector over
// partitions of weight d, in either the class-sum or the idempotent basis.
// Products are diagonal in the idempotent basis, so that is the working
// representation; the class basis is a view obtained by conversion.
struct CentralElement {
    int d = 0;
    Basis basis = Basis::Class;
    std::map<Partition, Rational> coeffs;

    Rational coeff(const Partition& p) const {
        auto it = coeffs.find(p);
        return it == coeffs.end() ? Rational(0) : it->second;
    }
    void set(const Partition& p, Rational v) {
        if (v == 0) coeffs.erase(p);
        else coeffs[p] = std::move(v);
    }
    bool operator==(const CentralElement& o) const = default;
};

CentralElement class_sum(int d, const Partition& delta);   // unit coefficient on one class
CentralElement idempotent(int d, const Partition& lambda);

// c_Delta = sum_lambda phi_lambda(Delta) F_lambda
CentralElement to_idempotent_basis(const CentralElement& x, TableCache& tables);
// F_lambda = (dim/d!)^2 sum_Delta z_Delta phi_lambda(Delta) c_Delta
CentralElement from_idempotent_basis(const CentralElement& x, TableCache& tables);

// exact product of two class sums, returned in the class basis
CentralElement class_product(const Partition& d1, const Partition& d2, TableCache& tables);

CentralElement multiply(const CentralElement& a, const CentralElement& b, TableCache& tables);

// F_lambda F_mu = delta_{lambda mu} F_lambda, checked exactly for all pairs
Report idempotency_check(int d, TableCache& tables);

// A symmetric function G evaluated on content multisets: a rational linear
// combination of power-sum monomials, G = sum_Delta c_Delta prod_i p_{Delta_i}.
struct SymmetricInsertion {
    std::map<Partition, Rational> powersum_terms;

    static SymmetricInsertion power_sum(const std::vector<int>& exponents);
    static SymmetricInsertion one();

    Rational eval_on(const std::vector<int>& contents) const;
};

// G(J_1,...,J_d) in the idempotent basis: coefficient of F_lambda is
// G(contents(lambda)).
CentralElement jm_insertion(const SymmetricInsertion& g, int d);

// exp(t (q^(1/2)-q^(-1/2)) sum_i q^(J_i)) with q = s^2, as a truncated
// t-series of central elements (idempotent basis), entry k = t^k coefficient.
std::vector<CentralElement> jm_insertion_qexp(const Rational& s, int d, int order);

} // namespace hn
