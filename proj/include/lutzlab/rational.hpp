// rational.hpp -- exact rational coefficients
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace lutzlab {

using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline Rational rat_pow(const Rational& q, int e) {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? q : Rational(1) / q;
    int n = e > 0 ? e : -e;
    Rational out(1);
    while (n > 0) {
        if (n & 1) out *= base;
        base *= base;
        n >>= 1;
    }
    return out;
}

inline Rational factorial(int n) {
    Rational out(1);
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

inline std::string rat_str(const Rational& q) { return q.str(); }

}  // namespace lutzlab
