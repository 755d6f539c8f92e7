// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hn/characters.hpp"
#include "hn/laurent.hpp"
#include "hn/partition.hpp"
#include "hn/symfun.hpp"
#include "hn/tseries.hpp"

#include <vector>

namespace hn {

// The character formula uses only the Euler characteristic; the orientable
// flag is validation metadata (orientable surfaces have even e <= 2,
// non-orientable ones have e <= 1).
struct SurfaceSpec {
    int euler = 2;
    bool orientable = true;
    void validate() const;
};

// Disconnected Hurwitz number
//   H_e(Delta^1,...,Delta^F) = sum_lambda prod_i phi_lambda(Delta^i) (dim/d!)^e.
// The profile list may be empty (unbranched count); d then gives the degree.
// With profiles present, d must match their common weight (pass -1 to infer).
Rational hurwitz(int euler, int d, const std::vector<Partition>& profiles, TableCache& tables);

// D(Delta) = z_Delta H_1(Delta); the RP^2 one-point functional of the
// Moebius cut. moebius_character_sum is the independent character route
// sum_lambda chi_lambda(Delta); the two agree identically.
Rational moebius_functional(const Partition& delta, TableCache& tables);
Rational moebius_character_sum(const Partition& delta, TableCache& tables);

// H_{e-2}(...) = sum_Delta H_e(..., Delta, Delta) z_Delta
Report verify_handle_cut(int euler, const std::vector<Partition>& profiles, int d, TableCache& tables);
// H_{e1+e2-2}(p1, p2) = sum_Delta H_{e1}(p1, Delta) z_Delta H_{e2}(Delta, p2)
Report verify_surface_cut(int e1, int e2, const std::vector<Partition>& p1,
                          const std::vector<Partition>& p2, int d, TableCache& tables);
// H_{e-1}(...) = sum_Delta H_e(..., Delta) D(Delta)
Report verify_moebius_cut(int euler, const std::vector<Partition>& profiles, int d, TableCache& tables);

// Jucys-Murphy deformed Hurwitz number with a single time t and numeric
// q = s^2: coefficient of t^k is
//   sum_lambda (e_lambda(q))^k / k! prod_i phi_lambda(Delta^i) (dim/d!)^e,
// evaluated through content sums (the class-algebra route).
TSeries<Rational> deformed_hurwitz(int euler, int d, const std::vector<Partition>& profiles,
                                   const Rational& s, int order, TableCache& tables);

// Multi-mode deformation with formal s: insertion
//   exp( sum_m t_m q^{km} (q^{m/2}-q^{-m/2})/m sum_i q^{m J_i} ),
// one series mode per t_m, truncated at total degree `order`.
TSeries<Laurent> deformed_hurwitz_modes(int euler, int d, const std::vector<Partition>& profiles,
                                        int k_shift, int modes, int order, TableCache& tables);

Partition transposition_class(int d);

// 1-Hurwitz numbers h_{m,Delta} = H_2(Delta, (2,1^{d-2}) x m)
Rational one_hurwitz(int m, const Partition& delta, TableCache& tables);

// table of h_{m,Delta} for |Delta| <= d_max, m <= m_max; key holds (m, Delta)
std::map<UPKey, Rational> generating_series(int d_max, int m_max, TableCache& tables);

// connected numbers via the formal log of F(u|p) in the (u, p) grading
std::map<UPKey, Rational> connected_log(const std::map<UPKey, Rational>& h_table, int d_max, int m_max);

// dF/du = L F, checked coefficient-wise against symfun's cut-and-join
Report verify_cutjoin_evolution(int d_max, int m_max, TableCache& tables);

} // namespace hn
