// SPDX-License-Identifier: Apache-2.0
#include "hn/symfun.hpp"

#include <algorithm>

namespace hn {

PowerSumPoly::PowerSumPoly(std::map<Partition, Rational> terms) : c_(std::move(terms)) {
    for (auto it = c_.begin(); it != c_.end();)
        it = (it->second == 0) ? c_.erase(it) : std::next(it);
}

PowerSumPoly PowerSumPoly::monomial(const Partition& mono, const Rational& c) {
    PowerSumPoly p;
    if (c != 0) p.c_[mono] = c;
    return p;
}

Rational PowerSumPoly::coeff(const Partition& mono) const {
    auto it = c_.find(mono);
    return it == c_.end() ? Rational(0) : it->second;
}

void PowerSumPoly::add_term(const Partition& mono, const Rational& c) {
    auto it = c_.find(mono);
    if (it == c_.end()) {
        if (c != 0) c_[mono] = c;
    } else {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

int PowerSumPoly::max_weight() const {
    int w = 0;
    for (const auto& [mono, c] : c_) w = std::max(w, mono.weight());
    return w;
}

PowerSumPoly& PowerSumPoly::operator+=(const PowerSumPoly& o) {
    for (const auto& [mono, c] : o.c_) add_term(mono, c);
    return *this;
}

PowerSumPoly& PowerSumPoly::operator-=(const PowerSumPoly& o) {
    for (const auto& [mono, c] : o.c_) add_term(mono, -c);
    return *this;
}

PowerSumPoly PowerSumPoly::operator*(const PowerSumPoly& o) const {
    PowerSumPoly r;
    for (const auto& [ma, ca] : c_)
        for (const auto& [mb, cb] : o.c_) r.add_term(merge_parts(ma, mb), ca * cb);
    return r;
}

PowerSumPoly PowerSumPoly::scaled(const Rational& k) const {
    PowerSumPoly r;
    if (k == 0) return r;
    for (const auto& [mono, c] : c_) r.c_[mono] = c * k;
    return r;
}

PowerSumPoly PowerSumPoly::weight_slice(int d) const {
    PowerSumPoly r;
    for (const auto& [mono, c] : c_)
        if (mono.weight() == d) r.c_[mono] = c;
    return r;
}

Rational PowerSumPoly::eval(const std::vector<Rational>& p_values) const {
    Rational acc = 0;
    for (const auto& [mono, c] : c_) {
        Rational term = c;
        for (int part : mono.parts()) {
            if (part > static_cast<int>(p_values.size()))
                throw DomainError("eval: p_" + std::to_string(part) + " not supplied");
            term *= p_values[static_cast<size_t>(part - 1)];
        }
        acc += term;
    }
    return acc;
}

PowerSumPoly schur_in_p(const Partition& lambda, TableCache& tables) {
    const CharacterTable& t = tables.get(lambda.weight());
    PowerSumPoly s;
    for (const auto& delta : t.order())
        s.add_term(delta, Rational(Integer(t.chi(lambda, delta)), delta.z_order()));
    return s;
}

PowerSumPoly elementary_schur(int m) {
    if (m < 0) return {};
    if (m == 0) return PowerSumPoly::constant(1);
    PowerSumPoly s;
    for (const auto& delta : enumerate_partitions(m))
        s.add_term(delta, Rational(1, delta.z_order()));
    return s;
}

PowerSumPoly schur_jacobi_trudi(const Partition& lambda) {
    int n = lambda.length();
    if (n == 0) return PowerSumPoly::constant(1);
    // det over permutations; matrices stay small (length <= 8 in practice)
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    PowerSumPoly det;
    do {
        int sign = 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) sign = -sign;
        PowerSumPoly term = PowerSumPoly::constant(sign);
        bool zero = false;
        for (int i = 0; i < n && !zero; ++i) {
            int m = lambda.part(i) - i + perm[static_cast<size_t>(i)];
            if (m < 0) { zero = true; break; }
            term = term * elementary_schur(m);
        }
        if (!zero) det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

std::map<Partition, Rational> char_map_forward(const Partition& delta, TableCache& tables) {
    const CharacterTable& t = tables.get(delta.weight());
    std::map<Partition, Rational> out;
    for (const auto& lambda : t.order()) {
        long long chi = t.chi(lambda, delta);
        if (chi != 0) out[lambda] = Rational(chi);
    }
    return out;
}

PowerSumPoly cut_and_join_apply(const PowerSumPoly& f) {
    PowerSumPoly out;
    for (const auto& [mono, coeff] : f.terms()) {
        const auto& parts = mono.parts();
        // cut term: replace one part c by (a, c-a)
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i > 0 && parts[i] == parts[i - 1]) continue; // same distinct value once
            int c = parts[i];
            Rational mult(mono.multiplicity(c));
            std::vector<int> rest;
            bool removed = false;
            for (size_t j = 0; j < parts.size(); ++j) {
                if (!removed && parts[j] == c) { removed = true; continue; }
                rest.push_back(parts[j]);
            }
            for (int a = 1; a < c; ++a) {
                std::vector<int> np = rest;
                np.push_back(a);
                np.push_back(c - a);
                std::sort(np.begin(), np.end(), std::greater<int>());
                out.add_term(Partition(np), coeff * mult * Rational(c, 2));
            }
        }
        // join term: replace parts a, b by a+b; ordered pairs (a,b)
        std::vector<int> distinct;
        for (size_t i = 0; i < parts.size(); ++i)
            if (i == 0 || parts[i] != parts[i - 1]) distinct.push_back(parts[i]);
        for (size_t ia = 0; ia < distinct.size(); ++ia) {
            for (size_t ib = 0; ib < distinct.size(); ++ib) {
                int a = distinct[ia], b = distinct[ib];
                Integer ways = (a == b) ? Integer(mono.multiplicity(a)) * (mono.multiplicity(a) - 1)
                                        : Integer(mono.multiplicity(a)) * mono.multiplicity(b);
                if (ways == 0) continue;
                std::vector<int> np;
                int removed_a = 0, removed_b = 0;
                for (int p : parts) {
                    if (p == a && removed_a == 0) { removed_a = 1; continue; }
                    if (p == b && removed_b == 0) { removed_b = 1; continue; }
                    np.push_back(p);
                }
                np.push_back(a + b);
                std::sort(np.begin(), np.end(), std::greater<int>());
                out.add_term(Partition(np), coeff * Rational(Integer(a) * b * ways, 2));
            }
        }
    }
    return out;
}

EigenReport cutjoin_eigencheck(const Partition& lambda, TableCache& tables) {
    EigenReport rep;
    rep.lambda = lambda;
    Rational eig = 0;
    for (int c : lambda.contents()) eig += c;
    rep.eigenvalue = eig;
    PowerSumPoly s = schur_in_p(lambda, tables);
    rep.residual = cut_and_join_apply(s) - s.scaled(eig);
    rep.pass = rep.residual.is_zero();
    return rep;
}

Rational shifted_power_eigen(const Partition& lambda, int n) {
    if (n < 1) throw DomainError("shifted power index must be >= 1");
    Rational acc = 0;
    for (int i = 1; i <= lambda.length(); ++i) {
        Rational with = rat_pow(Rational(1, 2) + lambda.part(i - 1) - i, n);
        Rational without = rat_pow(Rational(1, 2) - i, n);
        acc += with - without;
    }
    return acc;
}

Laurent completed_cycle_eigen_poly(const Partition& lambda) {
    // q^(1/2 + c) = s^(1 + 2c); rows beyond l(lambda) contribute nothing
    Laurent e;
    for (int i = 1; i <= lambda.length(); ++i) {
        e += Laurent::monomial(1 + 2 * (lambda.part(i - 1) - i));
        e -= Laurent::monomial(1 - 2 * i);
    }
    return e;
}

Rational completed_cycle_eigen(const Partition& lambda, const Rational& s) {
    if (s == 0) throw DomainError("completed-cycle eigenvalue requires s != 0");
    return completed_cycle_eigen_poly(lambda).eval(s);
}

Laurent quantum_content_sum(const Partition& lambda) {
    Laurent acc;
    for (int c : lambda.contents()) acc += Laurent::monomial(2 * c);
    return acc;
}

PolyN polyn_mul(const PolyN& a, const PolyN& b) {
    if (a.empty() || b.empty()) return {};
    PolyN r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

bool polyn_equal(const PolyN& a, const PolyN& b) {
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        Rational va = i < a.size() ? a[i] : Rational(0);
        Rational vb = i < b.size() ? b[i] : Rational(0);
        if (va != vb) return false;
    }
    return true;
}

PolyN content_product_poly(const Partition& lambda) {
    PolyN r{1};
    for (int c : lambda.contents()) r = polyn_mul(r, PolyN{Rational(c), 1});
    return r;
}

Rational content_product(const Partition& lambda, const Rational& N) {
    Rational r = 1;
    for (int c : lambda.contents()) r *= N + c;
    return r;
}

PolyN principal_specialization_poly(const Partition& lambda) {
    Rational scale(Integer(dimension(lambda)), factorial(lambda.weight()));
    PolyN r = content_product_poly(lambda);
    for (auto& c : r) c *= scale;
    return r;
}

Rational principal_specialization(const Partition& lambda, const Rational& N) {
    return Rational(Integer(dimension(lambda)), factorial(lambda.weight())) * content_product(lambda, N);
}

Rational phi_coefficient(const Partition& lambda, int k, TableCache& tables) {
    int d = lambda.weight();
    if (k < 0) throw DomainError("phi coefficient index out of range");
    if (k > d - 1) return 0; // no class has colength beyond d-1
    const CharacterTable& t = tables.get(d);
    Rational acc = 0;
    for (const auto& delta : t.order())
        if (delta.colength() == k) acc += t.normalized(lambda, delta);
    return acc;
}

Rational tilde_phi(const Partition& lambda, int k, const Rational& e, TableCache& tables) {
    if (k < 1) throw DomainError("tilde-phi index must be >= 1");
    Rational total = 0;
    for (const auto& mu : enumerate_partitions(k)) {
        int l = mu.length();
        Rational falling = 1;
        for (int i = 0; i < l; ++i) falling *= e - i;
        if (falling == 0) continue;
        Rational prod = 1;
        for (int part : mu.parts()) prod *= phi_coefficient(lambda, part, tables);
        Integer aut = 1;
        int run = 1;
        const auto& parts = mu.parts();
        for (size_t i = 1; i <= parts.size(); ++i) {
            if (i < parts.size() && parts[i] == parts[i - 1]) ++run;
            else { aut *= factorial(run); run = 1; }
        }
        total += falling * prod / Rational(aut);
    }
    return total;
}

UPSeries up_mul(const UPSeries& a, const UPSeries& b, int m_max, int d_max) {
    UPSeries r;
    for (const auto& [ka, va] : a) {
        for (const auto& [kb, vb] : b) {
            int m = ka.m + kb.m;
            if (m > m_max) continue;
            Partition mono = merge_parts(ka.mono, kb.mono);
            if (mono.weight() > d_max) continue;
            Rational& slot = r[UPKey{m, mono}];
            slot += va * vb;
            if (slot == 0) r.erase(UPKey{m, mono});
        }
    }
    return r;
}

UPSeries up_log(const UPSeries& f, int m_max, int d_max) {
    UPKey unit{0, Partition()};
    auto it = f.find(unit);
    if (it == f.end() || it->second != 1)
        throw DomainError("series log requires constant term exactly 1");
    UPSeries x = f;
    x.erase(unit);
    // every term of x has positive grade, so powers terminate
    UPSeries result, power = x;
    int max_steps = (m_max + 1) * (d_max + 1);
    for (int k = 1; k <= max_steps && !power.empty(); ++k) {
        Rational c(((k % 2) ? 1 : -1), k);
        for (const auto& [key, v] : power) {
            Rational& slot = result[key];
            slot += c * v;
            if (slot == 0) result.erase(key);
        }
        power = up_mul(power, x, m_max, d_max);
    }
    return result;
}

UPSeries up_exp(const UPSeries& f, int m_max, int d_max) {
    if (f.count(UPKey{0, Partition()}))
        throw DomainError("series exp requires zero constant term");
    UPSeries result{{UPKey{0, Partition()}, Rational(1)}};
    UPSeries power{{UPKey{0, Partition()}, Rational(1)}};
    Integer kfact = 1;
    int max_steps = (m_max + 1) * (d_max + 1);
    for (int k = 1; k <= max_steps; ++k) {
        power = up_mul(power, f, m_max, d_max);
        if (power.empty()) break;
        kfact *= k;
        for (const auto& [key, v] : power) {
            Rational& slot = result[key];
            slot += v / Rational(kfact);
            if (slot == 0) result.erase(key);
        }
    }
    return result;
}

PowerSumPoly series_exp(const PowerSumPoly& f, int d_max) {
    UPSeries u;
    for (const auto& [mono, c] : f.terms()) u[UPKey{0, mono}] = c;
    UPSeries r = up_exp(u, 0, d_max);
    PowerSumPoly out;
    for (const auto& [key, c] : r) out.add_term(key.mono, c);
    return out;
}

PowerSumPoly series_log(const PowerSumPoly& f, int d_max) {
    UPSeries u;
    for (const auto& [mono, c] : f.terms()) u[UPKey{0, mono}] = c;
    UPSeries r = up_log(u, 0, d_max);
    PowerSumPoly out;
    for (const auto& [key, c] : r) out.add_term(key.mono, c);
    return out;
}

} // namespace hn
