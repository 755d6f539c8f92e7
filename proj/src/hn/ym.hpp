// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hn/characters.hpp"
#include "hn/engine.hpp"
#include "hn/laurent.hpp"
#include "hn/symfun.hpp"
#include "hn/tseries.hpp"
#include "hn/wick.hpp"

#include <map>
#include <utility>
#include <vector>

namespace hn {

// c_2 = sum_{i=1}^N (lambda_i - i + N)^2, lambda padded by zeros.
Integer casimir(const Partition& lambda, int N);

// Exponent of the hypergeometric tau weight: sum_{i=1}^N (lambda_i-i+N+1/2)^2.
Rational shifted_casimir(const Partition& lambda, int N);

// A unitary class presented through its power sums p_m = tr(Theta^m),
// m = 1..d_max, exact.
struct ClassSpec {
    std::vector<Rational> power_sums;
    static ClassSpec identity(int N, int d_max); // p_m = N for all m
    Rational p(int m) const;
};

// Exact mode: the coupling rho is a formal variable truncated at rho_order;
// the result collects sum over |lambda| <= d_max of
// e^{-rho c2/2} (dim_G lambda)^(e-k) prod_i s_lambda(Theta_i), with
// dim_G lambda = s_lambda(I_N) and the sum cut to l(lambda) <= N.
TSeries<Rational> ym_partition(int euler, int N, int d_max, int rho_order, TableCache& tables);
TSeries<Rational> ym_correlator(int euler, const std::vector<ClassSpec>& classes, int N, int d_max,
                                int rho_order, TableCache& tables);

// Numeric mode: floating-point rho and a plain double result.
double ym_partition_numeric(int euler, double rho, int N, int d_max, TableCache& tables);
double ym_correlator_numeric(int euler, const std::vector<ClassSpec>& classes, double rho, int N,
                             int d_max, TableCache& tables);

// Weight-d slice of the correlator with formal Wilson classes: coefficient
// of prod_v p_{Delta^v}(Theta_v), one rho-series per ordered profile tuple.
std::map<std::vector<Partition>, TSeries<Rational>>
ym_correlator_formal(int euler, int k, int N, int d, int rho_order, TableCache& tables);

enum class TauKind { TL, BKP };

// Hypergeometric tau series (TL: two argument sets, BKP: one), expanded in
// formal power-sum monomials of the arguments on the weight-d slice:
// weight (N^{|lambda|}/(N)_lambda)^a e^{(t/2) shifted_casimir} per lambda.
std::map<std::pair<Partition, Partition>, TSeries<Rational>>
tau_hypergeometric_tl(int a, int N, int d, int t_order, TableCache& tables);
std::map<Partition, TSeries<Rational>>
tau_hypergeometric_bkp(int a, int N, int d, int t_order, TableCache& tables);

// Jucys-Murphy tau series at weight d with formal s (q = s^2) and times
// t_1..t_modes: TL keys are (p-monomial Delta^1, denominator profile
// Delta^2 standing for prod_i (1-q^{Delta^2_i})^{-1}); BKP keys are the
// denominator profile alone.
std::map<std::pair<Partition, Partition>, TSeries<Laurent>>
tau_jm_tl(int k_shift, int modes, int order, int d, TableCache& tables);
std::map<Partition, TSeries<Laurent>>
tau_jm_bkp(int k_shift, int modes, int order, int d, TableCache& tables);

// H~ = sum_lambda tilde-phi_lambda(i;e) (phi_lambda(1))^m prod phi_lambda(Delta^j) (dim/d!)^e
// with tilde-phi(0;e) = 1; a finite combination of ordinary Hurwitz numbers.
Rational hurwitz_1overN(int euler, const std::vector<Partition>& profiles, int i, int m,
                        TableCache& tables);

// Schur average over the Ginibre measure on a map: the wick route against
// the closed form delta * ((N)_lambda / N^d)^n (s_lambda(I_N))^-n s_lambda(A).
Report verify_schur_expectation(const CombinatorialMap& map,
                                const std::vector<Partition>& lambdas, int d, TableCache& tables,
                                const Integer& budget);

// Integral of products of hypergeometric tau factors against the closed
// Schur-sum form, on the worked maps, exact per (d, key, rho-order).
Report verify_int_tau(int handles, int moebius, int faces, int d_max, int N, int rho_order,
                      TableCache& tables, const Integer& budget);

// s_lambda(I_N) = (dim/d!) N^d (1 + sum_k phi_lambda(k) N^-k) as an exact
// polynomial identity in N.
Report verify_char_map(int max_weight, TableCache& tables);

// ym_correlator coefficients against the tilde-phi combination, order by
// order in 1/N and rho; requires e-k >= 0 so both sides are polynomial in N.
Report verify_ym_hurwitz_expansion(int euler, int k, int d, int rho_order, TableCache& tables);

} // namespace hn
