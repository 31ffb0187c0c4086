#pragma once

// Seifert matrices and the exact invariants computed from them. A valid
// matrix V is square of even size with det(V - V^T) = 1; size 0 is the
// unknot. From V we derive the Alexander polynomial, its fold onto the
// cosine axis, pointwise signatures at rational circle points, and the full
// piecewise-constant signature function.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "circle_point.hpp"
#include "rational_matrix.hpp"
#include "signature_function.hpp"

namespace concordia {

struct SeifertMatrix {
    size_t n = 0;
    std::vector<Int> a;  // row-major

    SeifertMatrix() = default;
    SeifertMatrix(size_t size, std::vector<Int> entries) : n(size), a(std::move(entries)) {
        if (a.size() != n * n) throw std::domain_error("Seifert matrix entry count mismatch");
        if (n % 2 != 0) throw std::domain_error("Seifert matrix size must be even");
        std::vector<std::vector<Int>> s(n, std::vector<Int>(n, Int(0)));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) s[i][j] = at(i, j) - at(j, i);
        if (int_det(s) != 1)
            throw std::domain_error("V - V^T must be unimodular (determinant 1)");
    }

    Int& at(size_t i, size_t j) { return a[i * n + j]; }
    const Int& at(size_t i, size_t j) const { return a[i * n + j]; }
};

inline SeifertMatrix seifert_from(size_t size, std::initializer_list<long long> entries) {
    std::vector<Int> v;
    v.reserve(entries.size());
    for (long long x : entries) v.emplace_back(x);
    return SeifertMatrix(size, std::move(v));
}

inline SeifertMatrix unknot_matrix() { return SeifertMatrix(0, {}); }
inline SeifertMatrix trefoil_matrix() { return seifert_from(2, {-1, 1, 0, -1}); }
inline SeifertMatrix left_trefoil_matrix() { return seifert_from(2, {1, 0, -1, 1}); }
inline SeifertMatrix figure_eight_matrix() { return seifert_from(2, {1, 1, 0, -1}); }

// k full twists; k = 1 is the right trefoil
inline SeifertMatrix twist_matrix(long long k) {
    if (k < 1) throw std::domain_error("twist parameter must be >= 1");
    return SeifertMatrix(2, {Int(-1), Int(1), Int(0), Int(-k)});
}

inline SeifertMatrix block_sum(const SeifertMatrix& x, const SeifertMatrix& y) {
    const size_t n = x.n + y.n;
    std::vector<Int> e(n * n, Int(0));
    SeifertMatrix out;
    out.n = n;
    out.a = std::move(e);
    for (size_t i = 0; i < x.n; ++i)
        for (size_t j = 0; j < x.n; ++j) out.at(i, j) = x.at(i, j);
    for (size_t i = 0; i < y.n; ++i)
        for (size_t j = 0; j < y.n; ++j) out.at(x.n + i, x.n + j) = y.at(i, j);
    return SeifertMatrix(n, std::move(out.a));
}

inline SeifertMatrix seifert_mirror(const SeifertMatrix& v) {
    SeifertMatrix out;
    out.n = v.n;
    out.a.assign(v.n * v.n, Int(0));
    for (size_t i = 0; i < v.n; ++i)
        for (size_t j = 0; j < v.n; ++j) out.at(i, j) = -v.at(j, i);
    return SeifertMatrix(v.n, std::move(out.a));
}

inline SeifertMatrix seifert_reverse(const SeifertMatrix& v) {
    SeifertMatrix out;
    out.n = v.n;
    out.a.assign(v.n * v.n, Int(0));
    for (size_t i = 0; i < v.n; ++i)
        for (size_t j = 0; j < v.n; ++j) out.at(i, j) = v.at(j, i);
    return SeifertMatrix(v.n, std::move(out.a));
}

// concordance inverse (mirror of the reverse)
inline SeifertMatrix seifert_inverse(const SeifertMatrix& v) {
    SeifertMatrix out;
    out.n = v.n;
    out.a.assign(v.n * v.n, Int(0));
    for (size_t i = 0; i < v.n; ++i)
        for (size_t j = 0; j < v.n; ++j) out.at(i, j) = -v.at(i, j);
    return SeifertMatrix(v.n, std::move(out.a));
}

// det(V - t V^T), computed by integer interpolation at t = 0, 1, -1, 2, ...
// and normalized to a positive leading coefficient
inline IntPolynomial alexander_polynomial(const SeifertMatrix& v) {
    const size_t n = v.n;
    if (n == 0) return poly_from({1});
    std::vector<Int> xs, ys;
    Int t = 0;
    while (xs.size() < n + 1) {
        std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m[i][j] = v.at(i, j) - t * v.at(j, i);
        xs.push_back(t);
        ys.push_back(int_det(std::move(m)));
        t = (t > 0) ? -t : 1 - t;  // 0, 1, -1, 2, -2, ...
    }
    // Lagrange interpolation, accumulated over the rationals
    detail::RatPoly acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        IntPolynomial num = poly_from({1});
        Int den = 1;
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            num = poly_mul(num, IntPolynomial({-xs[j], Int(1)}));
            den *= xs[i] - xs[j];
        }
        Rational w = make_rational(ys[i], den);
        if (acc.size() < num.c.size()) acc.resize(num.c.size(), Rational(0));
        for (size_t k = 0; k < num.c.size(); ++k) acc[k] += w * Rational(num.c[k]);
    }
    detail::ratpoly_trim(acc);
    std::vector<Int> coeffs(acc.size());
    for (size_t k = 0; k < acc.size(); ++k) {
        if (rat_den(acc[k]) != 1)
            throw std::logic_error("alexander interpolation produced a non-integer");
        coeffs[k] = rat_num(acc[k]);
    }
    IntPolynomial p(std::move(coeffs));
    if (!p.is_zero() && p.leading() < 0) p = poly_neg(p);
    return p;
}

// Fold the degree <= n palindromic coefficient list of the Alexander
// polynomial onto the cosine axis: delta(cos q) agrees with the unit-circle
// values of t^(-n/2) Delta(t) at t = e^(iq). Roots of delta in (-1, 1) are
// exactly the cosines of unit-circle Alexander roots.
inline IntPolynomial alexander_fold(const SeifertMatrix& v) {
    IntPolynomial delta = alexander_polynomial(v);
    const size_t n = v.n;
    std::vector<Int> c = delta.c;
    if (c.size() > n + 1) throw std::logic_error("alexander polynomial degree exceeds size");
    c.resize(n + 1, Int(0));
    const size_t g = n / 2;
    for (size_t k = 1; k <= g; ++k)
        if (c[g + k] != c[g - k])
            throw std::logic_error("alexander coefficients are not palindromic");
    IntPolynomial acc({c[g]});
    for (size_t k = 1; k <= g; ++k)
        acc = poly_add(acc, poly_scale(chebyshev_polynomial(static_cast<long long>(k)), 2 * c[g + k]));
    return acc;
}

// signature of (1-w)V + (1-conj w)V^T at a rational circle point, computed
// exactly through the real symmetric doubling [[A, -B], [B, A]]
inline long long levine_tristram_at_unchecked(const SeifertMatrix& v, const CirclePoint& w) {
    const size_t n = v.n;
    if (n == 0) return 0;
    RatMatrix m(2 * n);
    const Rational oc = 1 - w.c;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            Rational aij = oc * Rational(v.at(i, j) + v.at(j, i));
            Rational bij = w.s * Rational(v.at(j, i) - v.at(i, j));
            m.at(i, j) = aij;
            m.at(n + i, n + j) = aij;
            m.at(i, n + j) = -bij;
            m.at(n + i, j) = bij;
        }
    }
    long long doubled = signature_of_symmetric(std::move(m));
    return doubled / 2;
}

inline long long levine_tristram_at(const SeifertMatrix& v, const CirclePoint& w) {
    if (poly_eval(alexander_fold(v), w.c) == 0)
        throw std::domain_error("evaluation at Alexander root");
    return levine_tristram_at_unchecked(v, w);
}

// full signature function of V: jumps can only occur at unit-circle Alexander
// roots, so the fold supplies the candidate set and each piece is sampled at
// an exact rational circle point
inline SignatureFunction signature_function(const SeifertMatrix& v) {
    std::vector<IntPolynomial> candidates;
    IntPolynomial delta = alexander_fold(v);
    if (delta.degree() >= 1) candidates.push_back(delta);
    return assemble_signature_function(candidates, [&](const Rational& a, const Rational& b) {
        CirclePoint w = pythagorean_point_in(a, b);
        return Int(levine_tristram_at_unchecked(v, w));
    });
}

// A knot-like value: an optional Seifert matrix, the signature function, a
// certified upper bound for the slice norm, and a display label. The bound
// must dominate the signature lower bound sup|f|/2.
struct KnotValue {
    std::optional<SeifertMatrix> seifert;
    SignatureFunction sigfn;
    Rational slice_ub = 0;
    std::string label;
};

inline KnotValue make_knot_value(std::optional<SeifertMatrix> seifert, SignatureFunction f,
                                 Rational slice_ub, std::string label) {
    if (slice_ub < 0) throw std::domain_error("slice bound must be nonnegative");
    if (Rational(sup_abs(f)) / 2 > slice_ub)
        throw std::domain_error("slice bound is below the signature lower bound");
    KnotValue k;
    k.seifert = std::move(seifert);
    k.sigfn = std::move(f);
    k.slice_ub = std::move(slice_ub);
    k.label = std::move(label);
    return k;
}

inline KnotValue knot_from_matrix(const SeifertMatrix& v, std::string label) {
    return make_knot_value(v, signature_function(v), Rational(Int(v.n)) / 2, std::move(label));
}

inline KnotValue knot_connected_sum(const KnotValue& x, const KnotValue& y) {
    std::optional<SeifertMatrix> s;
    if (x.seifert && y.seifert) s = block_sum(*x.seifert, *y.seifert);
    SignatureFunction f = combine({{Int(1), x.sigfn}, {Int(1), y.sigfn}});
    return make_knot_value(std::move(s), std::move(f), x.slice_ub + y.slice_ub,
                           x.label + " # " + y.label);
}

inline KnotValue knot_mirror(const KnotValue& k) {
    std::optional<SeifertMatrix> s;
    if (k.seifert) s = seifert_mirror(*k.seifert);
    return make_knot_value(std::move(s), sigfn_negate(k.sigfn), k.slice_ub,
                           "mirror(" + k.label + ")");
}

inline KnotValue knot_reverse(const KnotValue& k) {
    std::optional<SeifertMatrix> s;
    if (k.seifert) s = seifert_reverse(*k.seifert);
    return make_knot_value(std::move(s), k.sigfn, k.slice_ub, "rev(" + k.label + ")");
}

// concordance inverse
inline KnotValue knot_dualize(const KnotValue& k) {
    std::optional<SeifertMatrix> s;
    if (k.seifert) s = seifert_inverse(*k.seifert);
    return make_knot_value(std::move(s), sigfn_negate(k.sigfn), k.slice_ub, "-" + k.label);
}

inline KnotValue knot_multiple(long long n, const KnotValue& k) {
    if (n == 0)
        return make_knot_value(unknot_matrix(), sigfn_zero(), Rational(0),
                               "0*" + k.label);
    std::optional<SeifertMatrix> s;
    if (k.seifert) {
        SeifertMatrix base = (n > 0) ? *k.seifert : seifert_inverse(*k.seifert);
        SeifertMatrix acc = unknot_matrix();
        for (long long i = 0; i < (n > 0 ? n : -n); ++i) acc = block_sum(acc, base);
        s = std::move(acc);
    }
    SignatureFunction f = combine({{Int(n), k.sigfn}});
    Rational ub = Rational(Int(n > 0 ? n : -n)) * k.slice_ub;
    return make_knot_value(std::move(s), std::move(f), std::move(ub),
                           std::to_string(n) + "*" + k.label);
}

}  // namespace concordia
