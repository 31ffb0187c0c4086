#pragma once

// Signature functions on the upper unit semicircle, represented through the
// cosine coordinate x in [-1, 1]: a finite ascending list of algebraic jump
// locations in (-1, 1) plus the constant integer value on each piece between
// them. Values are exact integers, jump locations are exact algebraic
// numbers (square-free primitive polynomial + isolating interval).

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "root_isolation.hpp"

namespace concordia {

using ordered_json = nlohmann::ordered_json;

struct AlgebraicNumber {
    IntPolynomial poly;    // square-free, primitive, positive leading coeff
    IsolatingInterval iv;  // open, endpoints non-roots, exactly one root inside

    AlgebraicNumber(IntPolynomial p, IsolatingInterval interval)
        : poly(std::move(p)), iv(std::move(interval)) {
        if (poly.is_zero() || poly != square_free_part(poly))
            throw std::domain_error("jump polynomial must be square-free and primitive");
        if (poly_eval_int(poly, Int(1)) == 0 || poly_eval_int(poly, Int(-1)) == 0)
            throw std::domain_error("jump polynomial must not vanish at +-1");
        if (iv.lo < -1 || iv.hi > 1 || !(iv.lo < iv.hi))
            throw std::domain_error("isolating interval must lie inside [-1, 1]");
        if (poly_eval(poly, iv.lo) == 0 || poly_eval(poly, iv.hi) == 0)
            throw std::domain_error("isolating interval endpoints must not be roots");
        const auto chain = detail::sturm_chain(poly);
        int cnt = detail::sturm_variations(chain, iv.lo) - detail::sturm_variations(chain, iv.hi);
        if (cnt != 1) throw std::domain_error("interval does not isolate exactly one root");
        // keep the interval strictly inside (-1, 1); the root already is
        while (iv.lo <= -1 || iv.hi >= 1) iv = refine_interval(poly, iv);
    }
};

inline bool algnum_equal(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    Rational lo = std::max(a.iv.lo, b.iv.lo);
    Rational hi = std::min(a.iv.hi, b.iv.hi);
    if (!(lo < hi)) return false;
    IntPolynomial g = poly_gcd(a.poly, b.poly);
    if (g.degree() <= 0) return false;
    // endpoints of the overlap belong to one of the two intervals, so they
    // are not roots of the corresponding polynomial, hence not roots of g
    const auto chain = detail::sturm_chain(g);
    return detail::sturm_variations(chain, lo) - detail::sturm_variations(chain, hi) > 0;
}

// total order on the represented real numbers: -1, 0, +1
inline int algnum_compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (algnum_equal(a, b)) return 0;
    IsolatingInterval ia = a.iv, ib = b.iv;
    while (true) {
        if (ia.hi <= ib.lo) return -1;
        if (ib.hi <= ia.lo) return 1;
        ia = refine_interval(a.poly, ia);
        ib = refine_interval(b.poly, ib);
    }
}

struct SignatureFunction {
    // jumps ascending with pairwise disjoint intervals (hi < next lo);
    // values has one more entry than jumps, each even, adjacent entries
    // distinct, and the last entry (the piece ending at x = 1) is zero
    std::vector<AlgebraicNumber> jumps;
    std::vector<Int> values{Int(0)};
};

inline SignatureFunction sigfn_zero() { return SignatureFunction{}; }

inline SignatureFunction make_signature_function(std::vector<AlgebraicNumber> jumps,
                                                 std::vector<Int> values) {
    if (values.size() != jumps.size() + 1)
        throw std::domain_error("signature function needs one value per piece");
    for (const auto& v : values)
        if (v % 2 != 0) throw std::domain_error("signature values must be even");
    for (size_t i = 0; i + 1 < values.size(); ++i)
        if (values[i] == values[i + 1])
            throw std::domain_error("adjacent piece values must differ");
    if (values.back() != 0)
        throw std::domain_error("signature function must vanish on the final piece");
    for (size_t i = 0; i + 1 < jumps.size(); ++i)
        if (algnum_compare(jumps[i], jumps[i + 1]) != -1)
            throw std::domain_error("jump locations must be strictly ascending");
    // refine until intervals are strictly separated; shrinking never breaks
    // separations already established to the left
    for (size_t i = 0; i + 1 < jumps.size(); ++i) {
        while (!(jumps[i].iv.hi < jumps[i + 1].iv.lo)) {
            jumps[i].iv = refine_interval(jumps[i].poly, jumps[i].iv);
            jumps[i + 1].iv = refine_interval(jumps[i + 1].poly, jumps[i + 1].iv);
        }
    }
    SignatureFunction f;
    f.jumps = std::move(jumps);
    f.values = std::move(values);
    return f;
}

// value at cosine x in [-1, 1]; the boundary values are the limits, x = 1
// giving the final piece and x = -1 the first. Evaluation exactly at a jump
// location is refused.
inline Int evaluate(const SignatureFunction& f, const Rational& x) {
    if (x < -1 || x > 1) throw std::domain_error("evaluation point outside [-1, 1]");
    if (x == 1) return f.values.back();
    if (x == -1) return f.values.front();
    for (size_t i = 0; i < f.jumps.size(); ++i) {
        int c = compare_root_to_point(f.jumps[i].poly, f.jumps[i].iv, x);
        if (c == 0) throw std::domain_error("evaluation at a jump point");
        if (c > 0) return f.values[i];  // jump i sits to the right of x
    }
    return f.values.back();
}

inline Int sup_abs(const SignatureFunction& f) {
    Int m = 0;
    for (const auto& v : f.values) m = std::max(m, int_abs(v));
    return m;
}

// open window (a, b) whose every point lies strictly inside piece i
inline std::pair<Rational, Rational> piece_window(const SignatureFunction& f, size_t i) {
    if (i >= f.values.size()) throw std::domain_error("piece index out of range");
    Rational a = (i == 0) ? Rational(-1) : f.jumps[i - 1].iv.hi;
    Rational b = (i == f.jumps.size()) ? Rational(1) : f.jumps[i].iv.lo;
    return {a, b};
}

// Build a signature function from candidate jump polynomials and a piece
// evaluator. The callback receives a window (a, b) with a < b such that
// every point of (a, b) lies strictly inside one piece of the subdivision
// cut by all candidate roots; it must return the (even) value there.
// Candidates whose value does not actually jump are coalesced away.
inline SignatureFunction assemble_signature_function(
    const std::vector<IntPolynomial>& candidates,
    const std::function<Int(const Rational&, const Rational&)>& piece_value) {
    std::vector<AlgebraicNumber> roots;
    for (const auto& p : candidates) {
        if (p.is_zero()) throw std::domain_error("zero candidate polynomial");
        IntPolynomial q = square_free_part(p);
        if (q.degree() <= 0) continue;
        for (const auto& iv : sturm_isolate_roots(q, Rational(-1), Rational(1))) {
            AlgebraicNumber a(q, iv);
            size_t pos = 0;
            bool dup = false;
            for (; pos < roots.size(); ++pos) {
                int c = algnum_compare(a, roots[pos]);
                if (c == 0) { dup = true; break; }
                if (c < 0) break;
            }
            if (!dup) roots.insert(roots.begin() + pos, std::move(a));
        }
    }
    // strict separation so each inter-root window is nonempty
    for (size_t i = 0; i + 1 < roots.size(); ++i) {
        while (!(roots[i].iv.hi < roots[i + 1].iv.lo)) {
            roots[i].iv = refine_interval(roots[i].poly, roots[i].iv);
            roots[i + 1].iv = refine_interval(roots[i + 1].poly, roots[i + 1].iv);
        }
    }
    std::vector<Int> values;
    for (size_t i = 0; i <= roots.size(); ++i) {
        Rational a = (i == 0) ? Rational(-1) : roots[i - 1].iv.hi;
        Rational b = (i == roots.size()) ? Rational(1) : roots[i].iv.lo;
        values.push_back(piece_value(a, b));
    }
    // drop candidates where the function does not actually jump
    size_t i = 0;
    while (i + 1 < values.size()) {
        if (values[i] == values[i + 1]) {
            roots.erase(roots.begin() + i);
            values.erase(values.begin() + i + 1);
        } else {
            ++i;
        }
    }
    return make_signature_function(std::move(roots), std::move(values));
}

// integer linear combination of signature functions
inline SignatureFunction combine(const std::vector<std::pair<Int, SignatureFunction>>& terms) {
    std::vector<IntPolynomial> candidates;
    for (const auto& [coeff, f] : terms) {
        if (coeff == 0) continue;
        for (const auto& j : f.jumps) {
            bool seen = false;
            for (const auto& c : candidates)
                if (c == j.poly) { seen = true; break; }
            if (!seen) candidates.push_back(j.poly);
        }
    }
    return assemble_signature_function(candidates, [&](const Rational& a, const Rational& b) {
        Rational x = (a + b) / 2;
        Int v = 0;
        for (const auto& [coeff, f] : terms) {
            if (coeff == 0) continue;
            v += coeff * evaluate(f, x);
        }
        return v;
    });
}

inline SignatureFunction sigfn_negate(const SignatureFunction& f) {
    SignatureFunction g = f;
    for (auto& v : g.values) v = -v;
    return g;
}

// precomposition with the degree-|n| Chebyshev map; the result at x is the
// value of f at T_|n|(x), and n = 0 gives the zero function
inline SignatureFunction pullback_power(const SignatureFunction& f, long long n) {
    if (n < 0) n = -n;  // the cosine of a power depends only on |n|
    if (n == 0) return sigfn_zero();
    if (n == 1) return f;
    std::vector<IntPolynomial> distinct;
    for (const auto& j : f.jumps) {
        bool seen = false;
        for (const auto& q : distinct)
            if (q == j.poly) { seen = true; break; }
        if (!seen) distinct.push_back(j.poly);
    }
    std::vector<IntPolynomial> composed;
    for (const auto& p : distinct) composed.push_back(chebyshev_compose(p, n));
    const IntPolynomial tn = chebyshev_polynomial(n);
    return assemble_signature_function(composed, [&](const Rational& a, const Rational& b) {
        Rational x = (a + b) / 2;
        return evaluate(f, poly_eval(tn, x));
    });
}

inline bool sigfn_equal(const SignatureFunction& f, const SignatureFunction& g) {
    if (f.values != g.values) return false;
    if (f.jumps.size() != g.jumps.size()) return false;
    for (size_t i = 0; i < f.jumps.size(); ++i)
        if (!algnum_equal(f.jumps[i], g.jumps[i])) return false;
    return true;
}

inline ordered_json sigfn_to_json(const SignatureFunction& f) {
    ordered_json j;
    j["jumps"] = ordered_json::array();
    for (const auto& a : f.jumps) {
        ordered_json e;
        ordered_json coeffs = ordered_json::array();
        for (const auto& c : a.poly.c) coeffs.push_back(to_int64_checked(c));
        e["poly"] = std::move(coeffs);
        e["lo"] = rat_to_string(a.iv.lo);
        e["hi"] = rat_to_string(a.iv.hi);
        j["jumps"].push_back(std::move(e));
    }
    ordered_json vals = ordered_json::array();
    for (const auto& v : f.values) vals.push_back(to_int64_checked(v));
    j["values"] = std::move(vals);
    return j;
}

inline SignatureFunction sigfn_from_json(const ordered_json& j) {
    std::vector<AlgebraicNumber> jumps;
    for (const auto& e : j.at("jumps")) {
        std::vector<Int> coeffs;
        for (const auto& c : e.at("poly")) coeffs.emplace_back(c.get<long long>());
        IsolatingInterval iv{rat_from_string(e.at("lo").get<std::string>()),
                             rat_from_string(e.at("hi").get<std::string>())};
        jumps.emplace_back(IntPolynomial(std::move(coeffs)), std::move(iv));
    }
    std::vector<Int> values;
    for (const auto& v : j.at("values")) values.emplace_back(v.get<long long>());
    return make_signature_function(std::move(jumps), std::move(values));
}

}  // namespace concordia
