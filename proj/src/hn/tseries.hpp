// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hn/rational.hpp"

#include <map>
#include <vector>

namespace hn {

// Truncated multivariate power series in deformation times (t_1,...,t_k)
// over a commutative coefficient ring K. Keys are exponent vectors; every
// operation truncates at total degree `order`.
template <class K>
class TSeries {
public:
    TSeries(int modes, int order) : modes_(modes), order_(order) {}

    static TSeries constant(int modes, int order, const K& c) {
        TSeries s(modes, order);
        s.set(std::vector<int>(static_cast<size_t>(modes), 0), c);
        return s;
    }

    int modes() const { return modes_; }
    int order() const { return order_; }
    const std::map<std::vector<int>, K>& terms() const { return c_; }

    K coeff(const std::vector<int>& e) const {
        auto it = c_.find(e);
        return it == c_.end() ? K{} : it->second;
    }
    void set(const std::vector<int>& e, const K& v) {
        if (total(e) > order_) return;
        if (v == K{}) c_.erase(e);
        else c_[e] = v;
    }
    void add(const std::vector<int>& e, const K& v) {
        if (total(e) > order_) return;
        auto it = c_.find(e);
        if (it == c_.end()) {
            if (!(v == K{})) c_[e] = v;
        } else {
            it->second += v;
            if (it->second == K{}) c_.erase(it);
        }
    }

    TSeries& operator+=(const TSeries& o) {
        for (const auto& [e, v] : o.c_) add(e, v);
        return *this;
    }
    friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }

    TSeries operator*(const TSeries& o) const {
        TSeries r(modes_, order_);
        for (const auto& [ea, va] : c_) {
            int da = total(ea);
            for (const auto& [eb, vb] : o.c_) {
                if (da + total(eb) > order_) continue;
                std::vector<int> e(ea);
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add(e, va * vb);
            }
        }
        return r;
    }

    TSeries scaled(const K& k) const {
        TSeries r(modes_, order_);
        for (const auto& [e, v] : c_) r.add(e, v * k);
        return r;
    }

    bool operator==(const TSeries& o) const { return modes_ == o.modes_ && c_ == o.c_; }

    // exp of a series with zero constant term
    static TSeries exp_of(const TSeries& x) {
        TSeries r = constant(x.modes_, x.order_, K{1});
        TSeries pow = r;
        Integer kfact = 1;
        for (int k = 1; k <= x.order_; ++k) {
            pow = pow * x;
            kfact *= k;
            r += pow.scaled(K{Rational(1, kfact)});
        }
        return r;
    }

private:
    int modes_;
    int order_;
    std::map<std::vector<int>, K> c_;

    static int total(const std::vector<int>& e) {
        int t = 0;
        for (int x : e) t += x;
        return t;
    }
};

} // namespace hn
