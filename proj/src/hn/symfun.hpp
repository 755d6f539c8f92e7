// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hn/characters.hpp"
#include "hn/laurent.hpp"
#include "hn/partition.hpp"
#include "hn/rational.hpp"

#include <map>
#include <vector>

namespace hn {

// Element of Q[p_1, p_2, ...]: rational combination of monomials
// p_Delta = p_{Delta_1} p_{Delta_2} ... . Mixed weights are allowed; the
// grading by |Delta| is respected by every operation here.
class PowerSumPoly {
public:
    PowerSumPoly() = default;
    explicit PowerSumPoly(std::map<Partition, Rational> terms);
    static PowerSumPoly monomial(const Partition& mono, const Rational& c = 1);
    static PowerSumPoly constant(const Rational& c) { return monomial(Partition(), c); }

    const std::map<Partition, Rational>& terms() const { return c_; }
    Rational coeff(const Partition& mono) const;
    void add_term(const Partition& mono, const Rational& c);
    bool is_zero() const { return c_.empty(); }
    int max_weight() const;

    PowerSumPoly& operator+=(const PowerSumPoly& o);
    PowerSumPoly& operator-=(const PowerSumPoly& o);
    friend PowerSumPoly operator+(PowerSumPoly a, const PowerSumPoly& b) { return a += b; }
    friend PowerSumPoly operator-(PowerSumPoly a, const PowerSumPoly& b) { return a -= b; }
    PowerSumPoly operator*(const PowerSumPoly& o) const;
    PowerSumPoly scaled(const Rational& k) const;
    bool operator==(const PowerSumPoly& o) const { return c_ == o.c_; }

    PowerSumPoly weight_slice(int d) const;

    // substitute numeric values for the p_m
    Rational eval(const std::vector<Rational>& p_values) const; // p_values[m-1] = p_m

private:
    std::map<Partition, Rational> c_;
};

// s_lambda = sum_Delta chi_lambda(Delta) p_Delta / z_Delta
PowerSumPoly schur_in_p(const Partition& lambda, TableCache& tables);

// Jacobi-Trudi determinant over elementary Schur polynomials; independent
// route used to cross-check schur_in_p.
PowerSumPoly schur_jacobi_trudi(const Partition& lambda);
PowerSumPoly elementary_schur(int m); // s_(m), with s_(0) = 1

// p_Delta = sum_lambda chi_lambda(Delta) s_lambda: Schur coordinates of a
// power-sum monomial. Exact inverse of schur_in_p.
std::map<Partition, Rational> char_map_forward(const Partition& delta, TableCache& tables);

// cut-and-join operator
// L = 1/2 sum_{a,b} ( (a+b) p_a p_b d/dp_{a+b} + a b p_{a+b} d^2/dp_a dp_b )
PowerSumPoly cut_and_join_apply(const PowerSumPoly& f);

struct EigenReport {
    Partition lambda;
    Rational eigenvalue;
    PowerSumPoly residual; // zero on pass
    bool pass = false;
};

// asserts L s_lambda = (sum of contents) s_lambda exactly
EigenReport cutjoin_eigencheck(const Partition& lambda, TableCache& tables);

// sum_i ( (1/2 + lambda_i - i)^n - (1/2 - i)^n ); n = 1 gives |lambda|
Rational shifted_power_eigen(const Partition& lambda, int n);

// e_lambda(q) = sum_i ( q^(1/2+lambda_i-i) - q^(1/2-i) ), q = s^2, as an
// exact Laurent polynomial in s
Laurent completed_cycle_eigen_poly(const Partition& lambda);
Rational completed_cycle_eigen(const Partition& lambda, const Rational& s);

// sum over nodes of q^(j-i), q = s^2
Laurent quantum_content_sum(const Partition& lambda);

// dense polynomial in N, index = power of N
using PolyN = std::vector<Rational>;
PolyN polyn_mul(const PolyN& a, const PolyN& b);
bool polyn_equal(const PolyN& a, const PolyN& b);

// (N)_lambda = prod_{(i,j)} (N + j - i)
PolyN content_product_poly(const Partition& lambda);
Rational content_product(const Partition& lambda, const Rational& N);

// s_lambda(I_N) = (dim/d!) (N)_lambda
PolyN principal_specialization_poly(const Partition& lambda);
Rational principal_specialization(const Partition& lambda, const Rational& N);

// phi_lambda(k) = sum over Delta with colength k of phi_lambda(Delta)
Rational phi_coefficient(const Partition& lambda, int k, TableCache& tables);

// tilde-phi_lambda(k; e) = sum_{l>=1} e(e-1)...(e-l+1)
//                          sum_{mu: l(mu)=l, |mu|=k} prod phi_lambda(mu_i) / |aut mu|
Rational tilde_phi(const Partition& lambda, int k, const Rational& e, TableCache& tables);

// graded series utilities on Q[p][[u]]; keys are (m, monomial), value is the
// coefficient of u^m p_Delta (no 1/m! absorbed here)
struct UPKey {
    int m = 0;
    Partition mono;
    bool operator==(const UPKey&) const = default;
    auto operator<=>(const UPKey&) const = default;
};
using UPSeries = std::map<UPKey, Rational>;

UPSeries up_mul(const UPSeries& a, const UPSeries& b, int m_max, int d_max);
// log requires constant term exactly 1; exp requires constant term 0
UPSeries up_log(const UPSeries& f, int m_max, int d_max);
UPSeries up_exp(const UPSeries& f, int m_max, int d_max);

PowerSumPoly series_exp(const PowerSumPoly& f, int d_max);
PowerSumPoly series_log(const PowerSumPoly& f, int d_max);

} // namespace hn
