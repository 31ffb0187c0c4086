#pragma once

// Integer polynomials in one variable, coefficients ascending (c[k] is the
// coefficient of x^k). The zero polynomial is the empty vector; otherwise the
// trailing coefficient is nonzero.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace concordia {

struct IntPolynomial {
    std::vector<Int> c;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    // degree of the zero polynomial is -1 by convention
    long long degree() const { return static_cast<long long>(c.size()) - 1; }
    const Int& leading() const {
        if (c.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c.back();
    }

    bool operator==(const IntPolynomial& o) const { return c == o.c; }
    bool operator!=(const IntPolynomial& o) const { return !(*this == o); }
};

inline IntPolynomial poly_from(std::initializer_list<long long> coeffs) {
    std::vector<Int> v;
    v.reserve(coeffs.size());
    for (long long x : coeffs) v.emplace_back(x);
    return IntPolynomial(std::move(v));
}

inline Rational poly_eval(const IntPolynomial& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

inline Int poly_eval_int(const IntPolynomial& p, const Int& x) {
    Int acc = 0;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> r(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return IntPolynomial(std::move(r));
}

inline IntPolynomial poly_neg(const IntPolynomial& a) {
    std::vector<Int> r = a.c;
    for (auto& x : r) x = -x;
    return IntPolynomial(std::move(r));
}

inline IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b) {
    return poly_add(a, poly_neg(b));
}

inline IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<Int> r(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return IntPolynomial(std::move(r));
}

inline IntPolynomial poly_scale(const IntPolynomial& a, const Int& k) {
    if (k == 0) return IntPolynomial();
    std::vector<Int> r = a.c;
    for (auto& x : r) x *= k;
    return IntPolynomial(std::move(r));
}

inline IntPolynomial poly_derivative(const IntPolynomial& a) {
    if (a.c.size() <= 1) return IntPolynomial();
    std::vector<Int> r(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r[i - 1] = a.c[i] * Int(i);
    return IntPolynomial(std::move(r));
}

// gcd of all coefficients, always >= 0 (0 only for the zero polynomial)
inline Int poly_content(const IntPolynomial& a) {
    Int g = 0;
    for (const auto& x : a.c) g = gcd(g, x);
    return int_abs(g);
}

// divide by the (positive) content; sign of the leading coefficient is kept,
// so root locations AND evaluation signs are preserved
inline IntPolynomial poly_primitive(const IntPolynomial& a) {
    Int g = poly_content(a);
    if (g == 0 || g == 1) return a;
    std::vector<Int> r = a.c;
    for (auto& x : r) x /= g;
    return IntPolynomial(std::move(r));
}

namespace detail {

using RatPoly = std::vector<Rational>;  // ascending, may carry trailing zeros

inline RatPoly to_ratpoly(const IntPolynomial& p) {
    RatPoly r(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) r[i] = Rational(p.c[i]);
    return r;
}

inline void ratpoly_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// in-place remainder of a by b (b nonzero); returns quotient
inline RatPoly ratpoly_divmod(RatPoly& a, const RatPoly& b) {
    RatPoly q;
    ratpoly_trim(a);
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size()) {
        Rational f = a.back() / b.back();
        size_t off = a.size() - b.size();
        q[off] = f;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();  // leading term cancelled exactly
        ratpoly_trim(a);
    }
    return q;
}

// scale a rational-coefficient polynomial by a positive rational into a
// primitive integer polynomial; evaluation signs everywhere are unchanged
inline IntPolynomial ratpoly_to_primitive(const RatPoly& p) {
    Int den_lcm = 1;
    for (const auto& q : p) den_lcm = lcm(den_lcm, rat_den(q));
    std::vector<Int> r(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        r[i] = rat_num(p[i]) * (den_lcm / rat_den(p[i]));
    return poly_primitive(IntPolynomial(std::move(r)));
}

}  // namespace detail

// exact quotient a / b over the integers; throws if division is not exact
inline IntPolynomial poly_exact_div(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    auto ra = detail::to_ratpoly(a);
    auto rb = detail::to_ratpoly(b);
    auto q = detail::ratpoly_divmod(ra, rb);
    if (!ra.empty()) throw std::domain_error("polynomial division not exact");
    std::vector<Int> out(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        if (rat_den(q[i]) != 1) throw std::domain_error("polynomial quotient not integral");
        out[i] = rat_num(q[i]);
    }
    return IntPolynomial(std::move(out));
}

// primitive gcd with positive leading coefficient (zero if both inputs zero)
inline IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    a = poly_primitive(a);
    b = poly_primitive(b);
    auto ra = detail::to_ratpoly(a);
    auto rb = detail::to_ratpoly(b);
    while (!rb.empty()) {
        detail::ratpoly_divmod(ra, rb);
        std::swap(ra, rb);
    }
    IntPolynomial g = detail::ratpoly_to_primitive(ra);
    if (!g.is_zero() && g.leading() < 0) g = poly_neg(g);
    return g;
}

// square-free part: same distinct roots, every root simple; primitive with
// positive leading coefficient
inline IntPolynomial square_free_part(const IntPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("square-free part of zero polynomial");
    IntPolynomial pp = poly_primitive(p);
    if (pp.degree() == 0) return poly_from({1});
    IntPolynomial g = poly_gcd(pp, poly_derivative(pp));
    IntPolynomial q = (g.degree() == 0) ? pp : poly_exact_div(pp, g);
    q = poly_primitive(q);
    if (q.leading() < 0) q = poly_neg(q);
    return q;
}

// Chebyshev polynomial of the first kind, T_n(cos t) = cos(n t)
inline IntPolynomial chebyshev_polynomial(long long n) {
    if (n < 0) throw std::domain_error("chebyshev index must be >= 0");
    IntPolynomial prev = poly_from({1});    // T_0
    if (n == 0) return prev;
    IntPolynomial cur = poly_from({0, 1});  // T_1
    const IntPolynomial two_x = poly_from({0, 2});
    for (long long k = 1; k < n; ++k) {
        IntPolynomial next = poly_sub(poly_mul(two_x, cur), prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// p(T_n(x)) by Horner over polynomial arithmetic
inline IntPolynomial chebyshev_compose(const IntPolynomial& p, long long n) {
    if (n < 1) throw std::domain_error("chebyshev_compose requires n >= 1");
    if (n == 1) return p;
    IntPolynomial t = chebyshev_polynomial(n);
    IntPolynomial acc;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
        acc = poly_mul(acc, t);
        if (*it != 0) acc = poly_add(acc, IntPolynomial({*it}));
    }
    return acc;
}

// integer polynomial with the roots of p shifted by -a: result(x) ~ p(a + x),
// up to a positive scale factor
inline IntPolynomial taylor_shift(const IntPolynomial& p, const Rational& a) {
    detail::RatPoly acc;
    detail::RatPoly lin = {a, Rational(1)};  // (a + x)
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
        // acc = acc * (a + x) + coeff
        detail::RatPoly next(acc.size() + 1, Rational(0));
        for (size_t i = 0; i < acc.size(); ++i) {
            next[i] += acc[i] * lin[0];
            next[i + 1] += acc[i] * lin[1];
        }
        acc = std::move(next);
        if (acc.empty()) acc.push_back(Rational(0));
        acc[0] += Rational(*it);
        detail::ratpoly_trim(acc);
    }
    return detail::ratpoly_to_primitive(acc);
}

}  // namespace concordia
