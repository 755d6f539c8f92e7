// SPDX-License-Identifier: Apache-2.0
#include "hn/engine.hpp"

#include <sstream>

namespace hn {

void SurfaceSpec::validate() const {
    if (euler > 2) throw DomainError("no closed surface has Euler characteristic > 2");
    if (orientable && euler % 2 != 0)
        throw DomainError("orientable surfaces have even Euler characteristic");
    if (!orientable && euler > 1)
        throw DomainError("non-orientable surfaces have Euler characteristic <= 1");
}

namespace {

int common_weight(int d, const std::vector<Partition>& profiles) {
    if (profiles.empty()) {
        if (d < 0) throw DomainError("degree required when no profiles are given");
        return d;
    }
    int w = profiles.front().weight();
    for (const auto& p : profiles)
        if (p.weight() != w)
            throw DomainError("mixed profile weights: " + profiles.front().str() + " vs " + p.str());
    if (d >= 0 && d != w) throw DomainError("degree disagrees with profile weight");
    return w;
}

} // namespace

Rational hurwitz(int euler, int d, const std::vector<Partition>& profiles, TableCache& tables) {
    int w = common_weight(d, profiles);
    if (w == 0) return 1; // the empty covering
    const CharacterTable& t = tables.get(w);
    Integer dfact = factorial(w);
    Rational total = 0;
    for (const auto& lambda : t.order()) {
        Rational term = rat_pow(Rational(Integer(t.dim(lambda)), dfact), euler);
        for (const auto& delta : profiles) term *= t.normalized(lambda, delta);
        total += term;
    }
    return total;
}

Rational moebius_functional(const Partition& delta, TableCache& tables) {
    return Rational(delta.z_order()) * hurwitz(1, -1, {delta}, tables);
}

Rational moebius_character_sum(const Partition& delta, TableCache& tables) {
    const CharacterTable& t = tables.get(delta.weight());
    long long acc = 0;
    for (const auto& lambda : t.order()) acc += t.chi(lambda, delta);
    return Rational(acc);
}

Report verify_handle_cut(int euler, const std::vector<Partition>& profiles, int d, TableCache& tables) {
    int w = common_weight(d, profiles);
    Rational lhs = hurwitz(euler - 2, w, profiles, tables);
    Rational rhs = 0;
    for (const auto& delta : enumerate_partitions(w)) {
        auto ext = profiles;
        ext.push_back(delta);
        ext.push_back(delta);
        rhs += hurwitz(euler, w, ext, tables) * Rational(delta.z_order());
    }
    if (lhs != rhs)
        return {false, "handle cut fails at e=" + std::to_string(euler) + ": " + rat_str(lhs) +
                           " vs " + rat_str(rhs)};
    return {true, "handle cut holds"};
}

Report verify_surface_cut(int e1, int e2, const std::vector<Partition>& p1,
                          const std::vector<Partition>& p2, int d, TableCache& tables) {
    std::vector<Partition> all = p1;
    all.insert(all.end(), p2.begin(), p2.end());
    int w = common_weight(d, all);
    Rational lhs = hurwitz(e1 + e2 - 2, w, all, tables);
    Rational rhs = 0;
    for (const auto& delta : enumerate_partitions(w)) {
        auto left = p1;
        left.push_back(delta);
        auto right = p2;
        right.insert(right.begin(), delta);
        rhs += hurwitz(e1, w, left, tables) * Rational(delta.z_order()) * hurwitz(e2, w, right, tables);
    }
    if (lhs != rhs)
        return {false, "surface cut fails at e1=" + std::to_string(e1) + ", e2=" + std::to_string(e2) +
                           ": " + rat_str(lhs) + " vs " + rat_str(rhs)};
    return {true, "surface cut holds"};
}

Report verify_moebius_cut(int euler, const std::vector<Partition>& profiles, int d, TableCache& tables) {
    int w = common_weight(d, profiles);
    Rational lhs = hurwitz(euler - 1, w, profiles, tables);
    Rational rhs = 0;
    for (const auto& delta : enumerate_partitions(w)) {
        auto ext = profiles;
        ext.push_back(delta);
        rhs += hurwitz(euler, w, ext, tables) * moebius_functional(delta, tables);
    }
    if (lhs != rhs)
        return {false, "Moebius cut fails at e=" + std::to_string(euler) + ": " + rat_str(lhs) +
                           " vs " + rat_str(rhs)};
    return {true, "Moebius cut holds"};
}

TSeries<Rational> deformed_hurwitz(int euler, int d, const std::vector<Partition>& profiles,
                                   const Rational& s, int order, TableCache& tables) {
    if (s == 0) throw DomainError("deformation requires s != 0");
    int w = common_weight(d, profiles);
    TSeries<Rational> out(1, order);
    if (w == 0) {
        out.set({0}, 1);
        return out;
    }
    const CharacterTable& t = tables.get(w);
    Integer dfact = factorial(w);
    for (const auto& lambda : t.order()) {
        Rational weight = rat_pow(Rational(Integer(t.dim(lambda)), dfact), euler);
        for (const auto& delta : profiles) weight *= t.normalized(lambda, delta);
        if (weight == 0) continue;
        // (q^(1/2)-q^(-1/2)) sum_i q^(content), q = s^2, via contents
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
            out.add({k}, weight * power / Rational(kfact));
        }
    }
    return out;
}

TSeries<Laurent> deformed_hurwitz_modes(int euler, int d, const std::vector<Partition>& profiles,
                                        int k_shift, int modes, int order, TableCache& tables) {
    int w = common_weight(d, profiles);
    TSeries<Laurent> out(modes, order);
    if (w == 0) {
        out.set(std::vector<int>(static_cast<size_t>(modes), 0), Laurent(Rational(1)));
        return out;
    }
    const CharacterTable& t = tables.get(w);
    Integer dfact = factorial(w);
    for (const auto& lambda : t.order()) {
        Rational weight = rat_pow(Rational(Integer(t.dim(lambda)), dfact), euler);
        for (const auto& delta : profiles) weight *= t.normalized(lambda, delta);
        if (weight == 0) continue;
        // exponent sum_m t_m q^{km} (q^{m/2}-q^{-m/2})/m sum_i q^{m c_i}
        TSeries<Laurent> arg(modes, order);
        for (int m = 1; m <= modes; ++m) {
            Laurent qsum;
            for (int c : lambda.contents()) qsum += Laurent::monomial(2 * m * c);
            Laurent factor = (Laurent::monomial(m) - Laurent::monomial(-m)) * qsum;
            factor *= Laurent::monomial(2 * k_shift * m, Rational(1, m));
            std::vector<int> e(static_cast<size_t>(modes), 0);
            e[static_cast<size_t>(m - 1)] = 1;
            arg.set(e, factor);
        }
        out += TSeries<Laurent>::exp_of(arg).scaled(Laurent(weight));
    }
    return out;
}

Partition transposition_class(int d) {
    if (d < 2) throw DomainError("transposition class needs d >= 2");
    std::vector<int> parts{2};
    parts.insert(parts.end(), static_cast<size_t>(d - 2), 1);
    return Partition(parts);
}

Rational one_hurwitz(int m, const Partition& delta, TableCache& tables) {
    if (m < 0) throw DomainError("negative number of simple branch points");
    if (m > 0 && delta.weight() < 2)
        throw DomainError("simple branch points require degree >= 2");
    std::vector<Partition> profiles{delta};
    for (int i = 0; i < m; ++i) profiles.push_back(transposition_class(delta.weight()));
    return hurwitz(2, -1, profiles, tables);
}

std::map<UPKey, Rational> generating_series(int d_max, int m_max, TableCache& tables) {
    std::map<UPKey, Rational> h;
    for (int d = 0; d <= d_max; ++d) {
        for (const auto& delta : enumerate_partitions(d)) {
            for (int m = 0; m <= m_max; ++m) {
                if (m > 0 && d < 2) continue; // no simple branch point below two sheets
                Rational v = (d == 0) ? (m == 0 ? Rational(1) : Rational(0))
                                      : one_hurwitz(m, delta, tables);
                if (v != 0) h[UPKey{m, delta}] = v;
            }
        }
    }
    return h;
}

std::map<UPKey, Rational> connected_log(const std::map<UPKey, Rational>& h_table, int d_max, int m_max) {
    // raw series coefficients are h/m!
    UPSeries raw;
    for (const auto& [key, v] : h_table) {
        if (key.m > m_max || key.mono.weight() > d_max) continue;
        raw[key] = v / Rational(factorial(key.m));
    }
    UPSeries logged = up_log(raw, m_max, d_max);
    std::map<UPKey, Rational> out;
    for (const auto& [key, v] : logged) out[key] = v * Rational(factorial(key.m));
    return out;
}

Report verify_cutjoin_evolution(int d_max, int m_max, TableCache& tables) {
    auto h = generating_series(d_max, m_max, tables);
    for (int d = 0; d <= d_max; ++d) {
        for (int m = 0; m < m_max; ++m) {
            PowerSumPoly level;
            for (const auto& delta : enumerate_partitions(d)) {
                auto it = h.find(UPKey{m, delta});
                if (it != h.end()) level.add_term(delta, it->second);
            }
            PowerSumPoly next_expected = cut_and_join_apply(level);
            PowerSumPoly next_actual;
            for (const auto& delta : enumerate_partitions(d)) {
                auto it = h.find(UPKey{m + 1, delta});
                if (it != h.end()) next_actual.add_term(delta, it->second);
            }
            if (!(next_expected == next_actual)) {
                std::ostringstream os;
                os << "cut-and-join evolution fails at d=" << d << " m=" << m;
                return {false, os.str()};
            }
        }
    }
    return {true, "evolution dF/du = LF holds to d<=" + std::to_string(d_max) + ", m<=" +
                      std::to_string(m_max)};
}

} // namespace hn
