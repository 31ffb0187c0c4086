#pragma once

// Exact scalar types used throughout: arbitrary-precision integers and
// rationals (always reduced, denominator > 0) on top of Boost.Multiprecision.
// Expression templates are switched off so arithmetic has plain value
// semantics (auto-friendly, no dangling expression proxies).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace concordia {

namespace mp = boost::multiprecision;

using Int = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::cpp_rational_backend, mp::et_off>;

inline Int rat_num(const Rational& q) { return numerator(q); }
inline Int rat_den(const Rational& q) { return denominator(q); }

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rational(num) / Rational(den);
}

inline Rational make_rational(long long num, long long den) {
    return make_rational(Int(num), Int(den));
}

template <typename T>
inline int sign_of(const T& x) {
    return x < 0 ? -1 : (x > 0 ? 1 : 0);
}

inline Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }
inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// floor(q) as an Int, exact for negative values too.
inline Int rat_floor(const Rational& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int t = n / d;                       // truncates toward zero
    if (n % d != 0 && n < 0) t -= 1;
    return t;
}

inline Int rat_ceil(const Rational& q) { return -rat_floor(-q); }

// Serialized form is always the explicit reduced fraction "p/q" (so "0/1",
// "2/1"), keeping output byte-stable and trivially parseable.
inline std::string rat_to_string(const Rational& q) {
    return rat_num(q).str() + "/" + rat_den(q).str();
}

inline Rational rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        return make_rational(n, d);
    } catch (const std::exception&) {
        throw std::domain_error("malformed rational literal: " + s);
    }
}

inline long long to_int64_checked(const Int& x) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (x < lo || x > hi)
        throw std::overflow_error("integer exceeds 64-bit range: " + x.str());
    return static_cast<long long>(x);
}

}  // namespace concordia
