#pragma once

// Certificate harnesses. Each check returns a Certificate whose JSON form is
// self-contained: the parameters name the inputs (knots by their expression
// text), the witnesses record every value the verdict rests on, and
// reverify() recomputes that evidence from scratch, accepting only an exact
// reproduction. Generation is deterministic, so certificates are stable
// byte-for-byte across runs and thread counts.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "knotdsl.hpp"
#include "metrics.hpp"

namespace concordia {

inline constexpr const char* certificate_schema = "concordia.certificate/1";

struct Certificate {
    std::string kind;
    ordered_json parameters = ordered_json::object();
    ordered_json witnesses = ordered_json::array();
    bool pass = false;
};

inline ordered_json certificate_to_json(const Certificate& c) {
    ordered_json j;
    j["schema"] = certificate_schema;
    j["kind"] = c.kind;
    j["parameters"] = c.parameters;
    j["witnesses"] = c.witnesses;
    j["verdict"] = c.pass ? "pass" : "fail";
    return j;
}

inline ordered_json circle_point_to_json(const CirclePoint& p) {
    ordered_json j;
    j["c"] = rat_to_string(p.c);
    j["s"] = rat_to_string(p.s);
    return j;
}

inline CirclePoint circle_point_from_json(const ordered_json& j) {
    return CirclePoint(rat_from_string(j.at("c").get<std::string>()),
                       rat_from_string(j.at("s").get<std::string>()));
}

inline ordered_json operator_record(const SatelliteOperator& op) {
    ordered_json j;
    j["label"] = op.label;
    j["w"] = op.w;
    j["gw"] = op.gw;
    j["pattern"] = op.pattern.label;
    return j;
}

// the pattern is named by expression text, so a recorded operator can be
// rebuilt; the rebuilt operator matches in everything a certificate uses
inline SatelliteOperator operator_from_record(const ordered_json& j) {
    KnotValue pattern = knotdsl::eval_string(j.at("pattern").get<std::string>());
    return make_satellite_operator(j.at("w").get<long long>(), j.at("gw").get<long long>(),
                                   std::move(pattern), j.at("label").get<std::string>());
}

// union of the jump locations of several functions, ascending, with
// isolating intervals refined until pairwise disjoint
inline std::vector<AlgebraicNumber> merge_jump_sets(
    const std::vector<const SignatureFunction*>& fs) {
    std::vector<AlgebraicNumber> cuts;
    for (const SignatureFunction* f : fs) {
        for (const AlgebraicNumber& j : f->jumps) {
            bool known = false;
            for (const AlgebraicNumber& c : cuts) {
                if (algnum_equal(c, j)) {
                    known = true;
                    break;
                }
            }
            if (!known) cuts.push_back(j);
        }
    }
    std::sort(cuts.begin(), cuts.end(), [](const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return algnum_compare(a, b) < 0;
    });
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        while (!(cuts[i].iv.hi < cuts[i + 1].iv.lo)) {
            cuts[i].iv = refine_interval(cuts[i].poly, cuts[i].iv);
            cuts[i + 1].iv = refine_interval(cuts[i + 1].poly, cuts[i + 1].iv);
        }
    }
    return cuts;
}

// Smallest-height pythagorean point with cosine strictly between two
// algebraic cuts (null meaning -1 on the left, +1 on the right). The walk
// compares the candidate cosine against the exact roots, not against their
// isolating intervals, so the minimal witness is found even when the open
// gap between the recorded intervals misses it.
inline CirclePoint pythagorean_point_between(const AlgebraicNumber* left,
                                             const AlgebraicNumber* right) {
    Int ln = 0, ld = 1;  // t = 0 gives c = 1
    Int rn = 1, rd = 0;  // t -> infinity gives c -> -1
    while (true) {
        Int mn = ln + rn, md = ld + rd;
        Rational t = make_rational(mn, md);
        Rational tt = t * t;
        Rational c = (1 - tt) / (1 + tt);
        bool too_big = right && compare_root_to_point(right->poly, right->iv, c) <= 0;
        bool too_small = !too_big && left && compare_root_to_point(left->poly, left->iv, c) >= 0;
        if (too_big) {  // cosine decreases as t grows
            ln = mn;
            ld = md;
        } else if (too_small) {
            rn = mn;
            rd = md;
        } else {
            return CirclePoint(c, 2 * t / (1 + tt));
        }
    }
}

namespace detail {

// Gauss-Jordan inverse over the rationals; empty result when singular
inline std::vector<std::vector<Rational>> rat_inverse(std::vector<std::vector<Rational>> m) {
    const size_t n = m.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return {};
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        const Rational d = m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

inline ordered_json stage_failure(const char* stage, const std::string& reason) {
    ordered_json w;
    w["stage"] = stage;
    w["reason"] = reason;
    return w;
}

}  // namespace detail

// Quasi-flat lattice check over an explicit family. Signatures are sampled
// at one staggered point per knot, the family is triangularized to a basis
// K'_i with sigma_{omega_j}(K'_i) = M_jj delta_ij, and every nonzero lattice
// point x with |x|_inf <= radius is certified to satisfy
//   |x|_1 / n  <=  lower(K_x)  <=  upper(K_x)  <=  n |x|_1
// for K_x the corresponding combination of the basis knots.
inline Certificate quasiflat_certificate_with(const std::vector<KnotValue>& knots,
                                              long long radius, unsigned jobs = 1) {
    const size_t n = knots.size();
    if (n == 0) throw std::domain_error("quasiflat check needs at least one knot");
    if (radius < 1) throw std::domain_error("lattice radius must be >= 1");
    Certificate cert;
    cert.kind = "quasiflat";
    cert.parameters["n"] = static_cast<long long>(n);
    cert.parameters["radius"] = radius;
    {
        ordered_json names = ordered_json::array();
        for (const auto& k : knots) names.push_back(k.label);
        cert.parameters["knots"] = std::move(names);
    }

    // one sample per knot, staggered between consecutive twist-family jump
    // locations (2j-1)/(2j); the first window starts at 0
    std::vector<CirclePoint> omegas;
    {
        ordered_json oj = ordered_json::array();
        for (size_t j = 0; j < n; ++j) {
            const long long jj = static_cast<long long>(j);
            Rational lo = (j == 0) ? Rational(0) : make_rational(2 * jj - 1, 2 * jj);
            Rational hi = make_rational(2 * jj + 1, 2 * jj + 2);
            CirclePoint w = pythagorean_point_in(lo, hi);
            oj.push_back(circle_point_to_json(w));
            omegas.push_back(std::move(w));
        }
        cert.parameters["omegas"] = std::move(oj);
    }

    // sample matrix M[j][i] = sigma_{omega_j}(K_i), by the matrix route
    // wherever a Seifert matrix is attached
    std::vector<std::vector<Int>> M(n, std::vector<Int>(n, Int(0)));
    try {
        ordered_json mj = ordered_json::array();
        for (size_t j = 0; j < n; ++j) {
            ordered_json row = ordered_json::array();
            for (size_t i = 0; i < n; ++i) {
                M[j][i] = knots[i].seifert ? Int(levine_tristram_at(*knots[i].seifert, omegas[j]))
                                           : evaluate(knots[i].sigfn, omegas[j].c);
                row.push_back(to_int64_checked(M[j][i]));
            }
            mj.push_back(std::move(row));
        }
        cert.parameters["matrix"] = std::move(mj);
    } catch (const std::domain_error& e) {
        cert.witnesses.push_back(detail::stage_failure("signature_matrix", e.what()));
        return cert;
    }

    // triangularize: C = M^{-1} diag(M_jj) must be an integral unimodular
    // change of basis, and each diagonal sample must be a single jump +-2
    for (size_t j = 0; j < n; ++j) {
        if (int_abs(M[j][j]) != 2) {
            cert.witnesses.push_back(
                detail::stage_failure("triangularization", "diagonal sample is not +-2"));
            return cert;
        }
    }
    std::vector<std::vector<Int>> C(n, std::vector<Int>(n, Int(0)));
    {
        std::vector<std::vector<Rational>> mr(n, std::vector<Rational>(n));
        for (size_t j = 0; j < n; ++j)
            for (size_t i = 0; i < n; ++i) mr[j][i] = Rational(M[j][i]);
        auto inv = detail::rat_inverse(std::move(mr));
        if (inv.empty()) {
            cert.witnesses.push_back(
                detail::stage_failure("triangularization", "sample matrix is singular"));
            return cert;
        }
        for (size_t l = 0; l < n; ++l) {
            for (size_t i = 0; i < n; ++i) {
                Rational c = inv[l][i] * Rational(M[i][i]);
                if (rat_den(c) != 1) {
                    cert.witnesses.push_back(detail::stage_failure(
                        "triangularization", "change of basis is not integral"));
                    return cert;
                }
                C[l][i] = rat_num(c);
            }
        }
        if (int_abs(int_det(C)) != 1) {
            cert.witnesses.push_back(
                detail::stage_failure("triangularization", "change of basis is not unimodular"));
            return cert;
        }
        ordered_json bj = ordered_json::array();
        for (size_t l = 0; l < n; ++l) {
            ordered_json row = ordered_json::array();
            for (size_t i = 0; i < n; ++i) row.push_back(to_int64_checked(C[l][i]));
            bj.push_back(std::move(row));
        }
        cert.parameters["basis"] = std::move(bj);
    }

    // every nonzero lattice point in the cube, in lexicographic order
    std::vector<std::vector<long long>> points;
    {
        std::vector<long long> x(n, -radius);
        while (true) {
            bool zero = std::all_of(x.begin(), x.end(), [](long long v) { return v == 0; });
            if (!zero) points.push_back(x);
            size_t pos = n;
            while (pos > 0 && x[pos - 1] == radius) --pos;
            if (pos == 0) break;
            ++x[pos - 1];
            std::fill(x.begin() + static_cast<std::ptrdiff_t>(pos), x.end(), -radius);
        }
    }

    auto compute_row = [&](const std::vector<long long>& x) {
        ordered_json row;
        {
            ordered_json xs = ordered_json::array();
            for (long long v : x) xs.push_back(v);
            row["x"] = std::move(xs);
        }
        try {
            // K_x = sum_i x_i K'_i = sum_l y_l K_l with y = C x
            std::vector<Int> y(n, Int(0));
            for (size_t l = 0; l < n; ++l)
                for (size_t i = 0; i < n; ++i) y[l] += C[l][i] * Int(x[i]);
            std::vector<std::pair<Int, SignatureFunction>> terms;
            for (size_t l = 0; l < n; ++l)
                if (y[l] != 0) terms.push_back({y[l], knots[l].sigfn});
            SignatureFunction F = combine(terms);
            bool samples_ok = true;
            for (size_t j = 0; j < n; ++j)
                if (evaluate(F, omegas[j].c) != M[j][j] * Int(x[j])) samples_ok = false;
            Int s1 = 0;
            for (long long v : x) s1 += Int(v < 0 ? -v : v);
            Rational lower = Rational(sup_abs(F)) / 2;
            Rational upper = 0;
            for (size_t l = 0; l < n; ++l) upper += Rational(int_abs(y[l])) * knots[l].slice_ub;
            Rational lb = Rational(s1) / Rational(Int(n));
            Rational ub = Rational(Int(n)) * Rational(s1);
            bool ok = samples_ok && lb <= lower && lower <= upper && upper <= ub;
            row["lower_bound"] = rat_to_string(lb);
            row["lower"] = rat_to_string(lower);
            row["upper"] = rat_to_string(upper);
            row["upper_bound"] = rat_to_string(ub);
            row["ok"] = ok;
        } catch (const std::domain_error& e) {
            row["error"] = e.what();
            row["ok"] = false;
        }
        return row;
    };

    std::vector<ordered_json> rows(points.size());
    unsigned workers = jobs < 1 ? 1 : jobs;
    if (workers > points.size()) workers = static_cast<unsigned>(points.size());
    if (workers <= 1) {
        for (size_t i = 0; i < points.size(); ++i) rows[i] = compute_row(points[i]);
    } else {
        // rows land in preassigned slots, so the output does not depend on
        // how the work is interleaved
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < points.size(); i = next.fetch_add(1))
                    rows[i] = compute_row(points[i]);
            });
        }
        for (auto& th : pool) th.join();
    }

    bool all_ok = true;
    for (auto& r : rows) {
        all_ok = all_ok && r.at("ok").get<bool>();
        cert.witnesses.push_back(std::move(r));
    }
    cert.pass = all_ok;
    return cert;
}

inline Certificate quasiflat_certificate(long long n, long long radius, unsigned jobs = 1) {
    if (n < 1) throw std::domain_error("lattice rank must be >= 1");
    std::vector<KnotValue> knots;
    knots.reserve(static_cast<size_t>(n));
    for (long long i = 1; i <= n; ++i)
        knots.push_back(knot_from_matrix(twist_matrix(i), "twist(" + std::to_string(i) + ")"));
    return quasiflat_certificate_with(knots, radius, jobs);
}

// Separation of cabling operators: exhibits a companion J and a point omega
// where the m-cable and n-cable signatures differ by more than 2E. The
// companion is a stack of left trefoils tall enough to force the gap; the
// witness piece is the admissible one nearest omega = 1. Stacks taller than
// cap are refused with a failed certificate rather than built.
inline Certificate operator_separation(long long m, long long n, const Rational& E,
                                       long long cap = 64) {
    if (m == n || m == -n) throw std::domain_error("separation requires m != +-n");
    if (E < 0) throw std::domain_error("separation margin must be >= 0");
    if (cap < 1) throw std::domain_error("search cap must be >= 1");
    Certificate cert;
    cert.kind = "separation";
    cert.parameters["m"] = m;
    cert.parameters["n"] = n;
    cert.parameters["E"] = rat_to_string(E);
    const Int need = 2 * rat_ceil(E) + 1;
    if (need > cap) {
        ordered_json wit = detail::stage_failure(
            "search", "companion stack of height " + need.str() +
                          " exceeds the search cap " + std::to_string(cap));
        cert.witnesses.push_back(std::move(wit));
        return cert;
    }
    const long long copies = to_int64_checked(need);
    KnotValue J = knot_multiple(copies, knot_from_matrix(left_trefoil_matrix(), "ltrefoil"));
    cert.parameters["companion"] = J.label;
    const Rational threshold = 2 * E;
    SignatureFunction pm = pullback_power(J.sigfn, m);
    SignatureFunction pn = pullback_power(J.sigfn, n);
    std::vector<AlgebraicNumber> cuts = merge_jump_sets({&pm, &pn});
    for (size_t piece = cuts.size() + 1; piece-- > 0;) {
        Rational lo = (piece == 0) ? Rational(-1) : cuts[piece - 1].iv.hi;
        Rational hi = (piece == cuts.size()) ? Rational(1) : cuts[piece].iv.lo;
        Rational mid = (lo + hi) / 2;
        Int vm = evaluate(pm, mid);
        Int vn = evaluate(pn, mid);
        if (rat_abs(Rational(vm - vn)) > threshold) {
            CirclePoint w = pythagorean_point_between(piece == 0 ? nullptr : &cuts[piece - 1],
                                                      piece == cuts.size() ? nullptr : &cuts[piece]);
            ordered_json wit;
            wit["omega"] = circle_point_to_json(w);
            wit["sigma_m"] = to_int64_checked(evaluate(pm, w.c));
            wit["sigma_n"] = to_int64_checked(evaluate(pn, w.c));
            wit["difference"] = to_int64_checked(vm - vn);
            wit["threshold"] = rat_to_string(threshold);
            cert.witnesses.push_back(std::move(wit));
            cert.pass = true;
            return cert;
        }
    }
    cert.witnesses.push_back(
        detail::stage_failure("search", "no piece exceeds the separation threshold"));
    return cert;
}

// Obstruction to the n-cable acting as multiplication by m: exhibits a
// companion and a point where |sigma of the cable - m sigma| > 2E. Windings
// with m in {0, 1} genuinely multiply only in the excluded cases below; for
// any other m a fixed-height stack evaluated at omega = -1 already works,
// while the m in {0, 1} cases search stacks of increasing height. No stack
// taller than cap is ever built.
inline Certificate not_multiplication(long long m, long long n, const Rational& E,
                                      long long cap = 64) {
    if (m == 0 && n == 0)
        throw std::domain_error("the 0-cable is multiplication by 0");
    if (m == 1 && (n == 1 || n == -1))
        throw std::domain_error("the (+-1)-cable is multiplication by 1");
    if (E < 0) throw std::domain_error("margin must be >= 0");
    if (cap < 1) throw std::domain_error("search cap must be >= 1");
    Certificate cert;
    cert.kind = "not_multiplication";
    cert.parameters["m"] = m;
    cert.parameters["n"] = n;
    cert.parameters["E"] = rat_to_string(E);
    cert.parameters["cap"] = cap;
    const Rational threshold = 2 * E;
    KnotValue base = knot_from_matrix(left_trefoil_matrix(), "ltrefoil");

    auto emit = [&](long long k, const KnotValue& J, const SignatureFunction& pulled,
                    const CirclePoint& w) {
        Int vb = evaluate(J.sigfn, w.c);
        Int vp = evaluate(pulled, w.c);
        Int defect = -Int(m) * vb + vp;
        ordered_json wit;
        wit["k"] = k;
        wit["companion"] = J.label;
        wit["omega"] = circle_point_to_json(w);
        wit["sigma"] = to_int64_checked(vb);
        wit["sigma_pullback"] = to_int64_checked(vp);
        wit["defect"] = to_int64_checked(defect);
        wit["threshold"] = rat_to_string(threshold);
        cert.witnesses.push_back(std::move(wit));
        cert.pass = rat_abs(Rational(defect)) > threshold;
    };

    if (m != 0 && m != 1) {
        const Int need = 2 * rat_ceil(E) + 1;
        if (need > cap) {
            ordered_json wit = detail::stage_failure(
                "search", "companion stack of height " + need.str() +
                              " exceeds the search cap " + std::to_string(cap));
            cert.witnesses.push_back(std::move(wit));
            return cert;
        }
        const long long k = to_int64_checked(need);
        KnotValue J = knot_multiple(k, base);
        emit(k, J, pullback_power(J.sigfn, n), CirclePoint(Rational(-1), Rational(0)));
        return cert;
    }
    for (long long k = 1; k <= cap; ++k) {
        KnotValue J = knot_multiple(k, base);
        SignatureFunction pulled = pullback_power(J.sigfn, n);
        std::vector<const SignatureFunction*> parts;
        if (m != 0) parts.push_back(&J.sigfn);
        parts.push_back(&pulled);
        std::vector<AlgebraicNumber> cuts = merge_jump_sets(parts);
        for (size_t piece = cuts.size() + 1; piece-- > 0;) {
            Rational lo = (piece == 0) ? Rational(-1) : cuts[piece - 1].iv.hi;
            Rational hi = (piece == cuts.size()) ? Rational(1) : cuts[piece].iv.lo;
            Rational mid = (lo + hi) / 2;
            Int h = (m == 0 ? Int(0) : -Int(m) * evaluate(J.sigfn, mid)) + evaluate(pulled, mid);
            if (rat_abs(Rational(h)) > threshold) {
                CirclePoint w =
                    pythagorean_point_between(piece == 0 ? nullptr : &cuts[piece - 1],
                                              piece == cuts.size() ? nullptr : &cuts[piece]);
                emit(k, J, pulled, w);
                return cert;
            }
        }
    }
    ordered_json wit = detail::stage_failure("search", "no defect above the threshold");
    wit["searched_up_to"] = cap;
    cert.witnesses.push_back(std::move(wit));
    return cert;
}

// Winding-zero collapse: the operator's image has one signature function
// regardless of the companion, and pairwise image distances stay within
// twice the operator's distance bound.
inline Certificate winding_zero_bounded(const SatelliteOperator& op,
                                        const std::vector<KnotValue>& sample) {
    if (op.w != 0) throw std::domain_error("winding-zero check needs w = 0");
    if (sample.size() < 2)
        throw std::domain_error("winding-zero check needs at least two companions");
    Certificate cert;
    cert.kind = "winding_zero";
    cert.parameters["op"] = operator_record(op);
    const Rational bound = 2 * cable_distance_bound(op);
    cert.parameters["bound"] = rat_to_string(bound);
    {
        ordered_json names = ordered_json::array();
        for (const auto& k : sample) names.push_back(k.label);
        cert.parameters["knots"] = std::move(names);
    }
    std::vector<KnotValue> images;
    std::vector<std::string> dumps;
    for (const auto& k : sample) {
        KnotValue img = apply(op, k);
        ordered_json f = sigfn_to_json(img.sigfn);
        dumps.push_back(f.dump());
        ordered_json w;
        w["type"] = "image";
        w["knot"] = k.label;
        w["sigfn"] = std::move(f);
        cert.witnesses.push_back(std::move(w));
        images.push_back(std::move(img));
    }
    bool identical = true;
    for (const auto& d : dumps) identical = identical && (d == dumps.front());
    bool pairs_ok = true;
    for (size_t i = 0; i < images.size(); ++i) {
        for (size_t j = i + 1; j < images.size(); ++j) {
            Rational dl = distance_estimate(images[i], images[j], NormKind::slice).lower;
            bool ok = (dl == 0) && (dl <= bound);
            pairs_ok = pairs_ok && ok;
            ordered_json w;
            w["type"] = "pair";
            w["k"] = images[i].label;
            w["j"] = images[j].label;
            w["distance_lower"] = rat_to_string(dl);
            w["bound"] = rat_to_string(bound);
            w["ok"] = ok;
            cert.witnesses.push_back(std::move(w));
        }
    }
    {
        ordered_json w;
        w["type"] = "identical";
        w["ok"] = identical;
        cert.witnesses.push_back(std::move(w));
    }
    cert.pass = identical && pairs_ok;
    return cert;
}

// Consistency of the satellite with its winding: the image of K stays within
// the operator's distance bound of the plain w-cable of K.
inline Certificate bounded_distance_consistency(const SatelliteOperator& op,
                                                const std::vector<KnotValue>& sample) {
    if (sample.empty())
        throw std::domain_error("consistency check needs at least one companion");
    Certificate cert;
    cert.kind = "bounded_distance";
    cert.parameters["op"] = operator_record(op);
    const Rational bound = cable_distance_bound(op);
    cert.parameters["bound"] = rat_to_string(bound);
    if (op.w == 1 || op.w == -1) {
        QuasiConstants qc = quasi_constants(op);
        ordered_json rc;
        rc["A"] = rat_to_string(qc.A);
        rc["B"] = rat_to_string(qc.B + 2 * bound);
        rc["C"] = rat_to_string(qc.C + bound);
        cert.parameters["reported_constants"] = std::move(rc);
    }
    {
        ordered_json names = ordered_json::array();
        for (const auto& k : sample) names.push_back(k.label);
        cert.parameters["knots"] = std::move(names);
    }
    SatelliteOperator cab = make_cable_operator(op.w);
    bool all_ok = true;
    for (const auto& k : sample) {
        Rational dl = distance_estimate(apply(op, k), apply(cab, k), NormKind::slice).lower;
        bool ok = dl <= bound;
        all_ok = all_ok && ok;
        ordered_json w;
        w["knot"] = k.label;
        w["distance_lower"] = rat_to_string(dl);
        w["bound"] = rat_to_string(bound);
        w["ok"] = ok;
        cert.witnesses.push_back(std::move(w));
    }
    cert.pass = all_ok;
    return cert;
}

namespace detail {

inline std::vector<KnotValue> eval_labels(const ordered_json& names) {
    std::vector<KnotValue> out;
    for (const auto& s : names) out.push_back(knotdsl::eval_string(s.get<std::string>()));
    return out;
}

inline bool matches_regenerated(const Certificate& fresh, const ordered_json& cert) {
    return fresh.pass && certificate_to_json(fresh).dump() == cert.dump();
}

inline bool reverify_quasiflat(const ordered_json& cert) {
    const auto& p = cert.at("parameters");
    Certificate fresh = quasiflat_certificate_with(eval_labels(p.at("knots")),
                                                   p.at("radius").get<long long>());
    return matches_regenerated(fresh, cert);
}

inline bool reverify_separation(const ordered_json& cert) {
    const auto& p = cert.at("parameters");
    const long long m = p.at("m").get<long long>();
    const long long n = p.at("n").get<long long>();
    const Rational E = rat_from_string(p.at("E").get<std::string>());
    KnotValue J = knotdsl::eval_string(p.at("companion").get<std::string>());
    const auto& wit = cert.at("witnesses").at(0);
    CirclePoint w = circle_point_from_json(wit.at("omega"));
    Int vm = evaluate(pullback_power(J.sigfn, m), w.c);
    Int vn = evaluate(pullback_power(J.sigfn, n), w.c);
    if (vm != Int(wit.at("sigma_m").get<long long>())) return false;
    if (vn != Int(wit.at("sigma_n").get<long long>())) return false;
    if (vm - vn != Int(wit.at("difference").get<long long>())) return false;
    return rat_abs(Rational(vm - vn)) > 2 * E;
}

inline bool reverify_not_multiplication(const ordered_json& cert) {
    const auto& p = cert.at("parameters");
    const long long m = p.at("m").get<long long>();
    const long long n = p.at("n").get<long long>();
    const Rational E = rat_from_string(p.at("E").get<std::string>());
    const auto& wit = cert.at("witnesses").at(0);
    KnotValue J = knotdsl::eval_string(wit.at("companion").get<std::string>());
    CirclePoint w = circle_point_from_json(wit.at("omega"));
    Int vb = evaluate(J.sigfn, w.c);
    Int vp = evaluate(pullback_power(J.sigfn, n), w.c);
    if (vb != Int(wit.at("sigma").get<long long>())) return false;
    if (vp != Int(wit.at("sigma_pullback").get<long long>())) return false;
    Int defect = -Int(m) * vb + vp;
    if (defect != Int(wit.at("defect").get<long long>())) return false;
    return rat_abs(Rational(defect)) > 2 * E;
}

inline bool reverify_winding_zero(const ordered_json& cert) {
    const auto& p = cert.at("parameters");
    Certificate fresh =
        winding_zero_bounded(operator_from_record(p.at("op")), eval_labels(p.at("knots")));
    return matches_regenerated(fresh, cert);
}

inline bool reverify_bounded_distance(const ordered_json& cert) {
    const auto& p = cert.at("parameters");
    Certificate fresh = bounded_distance_consistency(operator_from_record(p.at("op")),
                                                     eval_labels(p.at("knots")));
    return matches_regenerated(fresh, cert);
}

}  // namespace detail

// Recomputes a certificate's evidence from its recorded inputs. Only pass
// certificates make a claim, so anything else is rejected, as is any
// certificate whose recorded values fail to reproduce.
inline bool reverify(const ordered_json& cert) {
    try {
        if (cert.at("schema").get<std::string>() != certificate_schema) return false;
        if (cert.at("verdict").get<std::string>() != "pass") return false;
        const std::string kind = cert.at("kind").get<std::string>();
        if (kind == "quasiflat") return detail::reverify_quasiflat(cert);
        if (kind == "separation") return detail::reverify_separation(cert);
        if (kind == "not_multiplication") return detail::reverify_not_multiplication(cert);
        if (kind == "winding_zero") return detail::reverify_winding_zero(cert);
        if (kind == "bounded_distance") return detail::reverify_bounded_distance(cert);
        return false;
    } catch (const std::exception&) {
        return false;
    }
}

// lattice rows of a quasiflat certificate as CSV
inline std::string quasiflat_csv(const ordered_json& cert) {
    if (cert.at("kind").get<std::string>() != "quasiflat")
        throw std::domain_error("csv export covers only quasiflat certificates");
    const long long n = cert.at("parameters").at("n").get<long long>();
    std::ostringstream out;
    for (long long i = 1; i <= n; ++i) out << "x" << i << ",";
    out << "lower_bound,lower,upper,upper_bound,ok\n";
    for (const auto& w : cert.at("witnesses")) {
        if (!w.contains("x")) continue;
        for (const auto& v : w.at("x")) out << v.get<long long>() << ",";
        out << w.at("lower_bound").get<std::string>() << "," << w.at("lower").get<std::string>()
            << "," << w.at("upper").get<std::string>() << ","
            << w.at("upper_bound").get<std::string>() << ","
            << (w.at("ok").get<bool>() ? "true" : "false") << "\n";
    }
    return out.str();
}

}  // namespace concordia
