#pragma once

// Exact isolation of real polynomial roots inside an open rational window.
// Every isolating interval is open with rational non-root endpoints and
// contains exactly one (simple) root of the square-free polynomial.

#include <stdexcept>
#include <vector>

#include "polynomial.hpp"

namespace concordia {

struct IsolatingInterval {
    Rational lo;
    Rational hi;
};

namespace detail {

// Sturm chain of a square-free polynomial, each entry primitive; remainders
// are rescaled by positive factors only, which keeps all sign variations
inline std::vector<IntPolynomial> sturm_chain(const IntPolynomial& q) {
    std::vector<IntPolynomial> chain;
    chain.push_back(q);
    IntPolynomial d = poly_derivative(q);
    if (d.is_zero()) return chain;
    chain.push_back(poly_primitive(d));
    while (true) {
        const IntPolynomial& s0 = chain[chain.size() - 2];
        const IntPolynomial& s1 = chain[chain.size() - 1];
        auto r0 = to_ratpoly(s0);
        auto r1 = to_ratpoly(s1);
        ratpoly_divmod(r0, r1);  // r0 becomes the remainder
        if (r0.empty()) break;
        IntPolynomial rem = ratpoly_to_primitive(r0);
        chain.push_back(poly_neg(rem));
    }
    return chain;
}

inline int sturm_variations(const std::vector<IntPolynomial>& chain, const Rational& x) {
    int v = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = sign_of(poly_eval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace detail

// radius r > 0 such that q has no root y with 0 < |y - at| < r
inline Rational no_root_radius(const IntPolynomial& q, const Rational& at) {
    if (q.is_zero()) throw std::domain_error("no_root_radius of zero polynomial");
    IntPolynomial sh = taylor_shift(q, at);  // roots of sh are roots of q minus at
    size_t m = 0;
    while (m < sh.c.size() && sh.c[m] == 0) ++m;
    if (m + 1 >= sh.c.size()) return 1;  // no other roots anywhere
    Int c0 = int_abs(sh.c[m]);
    Int cmax = 0;
    for (size_t i = m + 1; i < sh.c.size(); ++i) cmax = std::max(cmax, int_abs(sh.c[i]));
    // Cauchy-style: any root of the deflated part has |y| >= c0 / (c0 + cmax)
    return make_rational(c0, c0 + cmax);
}

// Isolate all real roots of p lying strictly inside (a, b). Roots exactly at
// a or b are excluded. Intervals come back ascending and pairwise disjoint,
// with a < lo < hi < b for every interval.
inline std::vector<IsolatingInterval> sturm_isolate_roots(const IntPolynomial& p,
                                                          const Rational& a,
                                                          const Rational& b) {
    if (p.is_zero()) throw std::domain_error("cannot isolate roots of zero polynomial");
    if (!(a < b)) throw std::domain_error("empty isolation window");
    IntPolynomial q = square_free_part(p);
    std::vector<IsolatingInterval> out;
    if (q.degree() <= 0) return out;

    // shrink endpoints inward past any root sitting exactly on them
    auto nudge_in = [&](const Rational& x, bool from_left) {
        Rational step = no_root_radius(q, x) / 2;
        Rational room = (b - a) / 4;
        if (step > room) step = room;
        return from_left ? x + step : x - step;
    };
    Rational lo = (poly_eval(q, a) == 0) ? nudge_in(a, true) : a;
    Rational hi = (poly_eval(q, b) == 0) ? nudge_in(b, false) : b;
    if (!(lo < hi)) return out;

    const auto chain = detail::sturm_chain(q);
    auto count_in = [&](const Rational& x, const Rational& y) {
        // roots in (x, y]; both endpoints here are never roots, so this is
        // the count in the open interval
        return detail::sturm_variations(chain, x) - detail::sturm_variations(chain, y);
    };

    struct Seg { Rational lo, hi; int cnt; };
    std::vector<Seg> stack;
    stack.push_back({lo, hi, count_in(lo, hi)});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.cnt == 0) continue;
        if (s.cnt == 1) {
            out.push_back({s.lo, s.hi});
            continue;
        }
        Rational m = (s.lo + s.hi) / 2;
        if (poly_eval(q, m) == 0) {
            // the midpoint is itself a root: carve out a private interval
            Rational d = no_root_radius(q, m) / 2;
            if (d > (m - s.lo) / 2) d = (m - s.lo) / 2;
            if (d > (s.hi - m) / 2) d = (s.hi - m) / 2;
            Rational m1 = m - d, m2 = m + d;
            // push right-to-left so results pop in ascending order
            stack.push_back({m2, s.hi, count_in(m2, s.hi)});
            stack.push_back({m1, m2, 1});
            stack.push_back({s.lo, m1, count_in(s.lo, m1)});
        } else {
            stack.push_back({m, s.hi, count_in(m, s.hi)});
            stack.push_back({s.lo, m, count_in(s.lo, m)});
        }
    }

    // the stack discipline above emits left intervals last; restore order
    std::sort(out.begin(), out.end(),
              [](const IsolatingInterval& x, const IsolatingInterval& y) { return x.lo < y.lo; });
    return out;
}

// One bisection-style shrink of an isolating interval for the unique root of
// square-free q inside it. The root stays strictly interior.
inline IsolatingInterval refine_interval(const IntPolynomial& q, const IsolatingInterval& iv) {
    Rational m = (iv.lo + iv.hi) / 2;
    Rational fm = poly_eval(q, m);
    if (fm == 0) {
        Rational d = no_root_radius(q, m) / 2;
        if (d > (m - iv.lo) / 2) d = (m - iv.lo) / 2;
        if (d > (iv.hi - m) / 2) d = (iv.hi - m) / 2;
        return {m - d, m + d};
    }
    // exactly one simple root inside, so the endpoint signs differ
    if (sign_of(poly_eval(q, iv.lo)) != sign_of(fm)) return {iv.lo, m};
    return {m, iv.hi};
}

// position of the unique root of q in iv relative to point x:
// -1 root < x, 0 root == x, +1 root > x
inline int compare_root_to_point(const IntPolynomial& q, const IsolatingInterval& iv,
                                 const Rational& x) {
    if (x <= iv.lo) return 1;
    if (x >= iv.hi) return -1;
    Rational fx = poly_eval(q, x);
    if (fx == 0) return 0;
    if (sign_of(poly_eval(q, iv.lo)) != sign_of(fx)) return -1;  // root in (lo, x)
    return 1;
}

}  // namespace concordia
