// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hn/rational.hpp"

#include <map>
#include <sstream>

namespace hn {

// Laurent polynomial in one formal variable s with Rational coefficients.
// Used for everything carrying q = s^2: quantum contents, completed-cycle
// eigenvalues, deformed Hurwitz coefficients.
class Laurent {
public:
    Laurent() = default;
    Laurent(const Rational& c) { if (c != 0) c_[0] = c; } // NOLINT: implicit by design
    static Laurent monomial(int exp, const Rational& c = 1) {
        Laurent p;
        if (c != 0) p.c_[exp] = c;
        return p;
    }

    const std::map<int, Rational>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, v] : o.c_) add(e, v);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, v] : o.c_) add(e, -v);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [ea, va] : a.c_)
            for (const auto& [eb, vb] : b.c_) r.add(ea + eb, va * vb);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    Laurent operator-() const {
        Laurent r;
        for (const auto& [e, v] : c_) r.c_[e] = -v;
        return r;
    }
    bool operator==(const Laurent& o) const { return c_ == o.c_; }

    Rational eval(const Rational& s) const {
        Rational acc = 0;
        for (const auto& [e, v] : c_) acc += v * rat_pow(s, e);
        return acc;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, v] : c_) {
            if (!first) os << " + ";
            first = false;
            os << rat_str(v);
            if (e != 0) os << "*s^" << e;
        }
        return os.str();
    }

private:
    std::map<int, Rational> c_; // exponent -> coefficient, zeros absent

    void add(int e, const Rational& v) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            if (v != 0) c_[e] = v;
        } else {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }
};

} // namespace hn
