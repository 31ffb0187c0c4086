#pragma once

// Rational points on the unit circle, used as exact evaluation sites. A point
// is (c, s) with c^2 + s^2 = 1; the excluded point (1, 0) plays no role in
// any computation here.

#include <stdexcept>

#include "rational.hpp"

namespace concordia {

struct CirclePoint {
    Rational c;
    Rational s;

    CirclePoint(Rational cos_part, Rational sin_part)
        : c(std::move(cos_part)), s(std::move(sin_part)) {
        if (c * c + s * s != 1) throw std::domain_error("point not on the unit circle");
        if (c == 1 && s == 0) throw std::domain_error("circle point (1,0) is excluded");
    }
};

// rational parametrization: t >= 0 maps to the closed upper semicircle,
// t = p/q giving c = (q^2 - p^2)/(q^2 + p^2), s = 2pq/(q^2 + p^2)
inline CirclePoint circle_point_from_t(const Rational& t) {
    if (t < 0) throw std::domain_error("circle parameter must be >= 0");
    Rational tt = t * t;
    return CirclePoint((1 - tt) / (1 + tt), 2 * t / (1 + tt));
}

// Smallest-height rational point on the open upper semicircle whose cosine
// lies in (a, b). Walks the Stern-Brocot tree on the parameter t, where the
// cosine is strictly decreasing in t; requires -1 <= a < b <= 1.
inline CirclePoint pythagorean_point_in(const Rational& a, const Rational& b) {
    if (a < -1 || b > 1 || !(a < b))
        throw std::domain_error("cosine window must satisfy -1 <= a < b <= 1");
    // mediant search; L and R are (num, den) fractions with L < R, R may be 1/0
    Int ln = 0, ld = 1;  // t = 0 gives c = 1
    Int rn = 1, rd = 0;  // t -> infinity gives c -> -1
    while (true) {
        Int mn = ln + rn, md = ld + rd;
        Rational t = make_rational(mn, md);
        Rational tt = t * t;
        Rational c = (1 - tt) / (1 + tt);
        if (c >= b) {
            ln = mn;
            ld = md;
        } else if (c <= a) {
            rn = mn;
            rd = md;
        } else {
            return CirclePoint(c, 2 * t / (1 + tt));
        }
    }
}

}  // namespace concordia
