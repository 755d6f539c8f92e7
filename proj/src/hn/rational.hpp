// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hn {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps gcd(|num|,den)=1 and den>0,
// which is exactly the canonical form we rely on for map keys and output.
using Rational = boost::multiprecision::cpp_rational;

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Integer factorial(int n) {
    if (n < 0) throw DomainError("factorial of negative argument");
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Integer int_pow(Integer base, unsigned exp) {
    Integer r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

// base^exp for signed exp; base must be nonzero when exp < 0.
inline Rational rat_pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    bool neg = exp < 0;
    unsigned long k = neg ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    Rational r = 1, b = base;
    while (k) {
        if (k & 1ul) r *= b;
        b *= b;
        k >>= 1ul;
    }
    if (neg) {
        if (r == 0) throw DomainError("zero base with negative exponent");
        r = Rational(1) / r;
    }
    return r;
}

// Rationals print as "num/den" with an explicit denominator, also for integers.
inline std::string rat_str(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

inline Rational rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            // accept plain integers and decimal literals like "0.3" (= 3/10)
            auto dot = s.find('.');
            if (dot == std::string::npos) return Rational(Integer(s));
            std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
            bool neg = !head.empty() && head[0] == '-';
            if (neg) head = head.substr(1);
            if (head.empty()) head = "0";
            Integer den = int_pow(10, static_cast<unsigned>(tail.size()));
            Integer num = Integer(head) * den + (tail.empty() ? Integer(0) : Integer(tail));
            Rational r(num, den);
            return neg ? -r : r;
        }
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw DomainError("zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const DomainError&) {
        throw;
    } catch (const std::exception&) {
        throw DomainError("malformed rational '" + s + "'");
    }
}

} // namespace hn
