#pragma once

// Satellite-type operators on knot values. An operator carries its algebraic
// winding w, geometric winding gw (gw >= |w|, gw = w mod 2), and the pattern
// viewed as a knot. Applying it composes the pattern's signature function
// with the w-fold Chebyshev pullback of the companion's.

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "seifert.hpp"

namespace concordia {

enum class SatelliteKind { generic, cable, consum, reverse_op, zero };

struct SatelliteOperator {
    long long w = 1;
    long long gw = 1;
    KnotValue pattern;
    std::string label;
    SatelliteKind kind = SatelliteKind::generic;
};

inline SatelliteOperator make_satellite_operator(long long w, long long gw, KnotValue pattern,
                                                 std::string label,
                                                 SatelliteKind kind = SatelliteKind::generic) {
    if (gw < 0) throw std::domain_error("geometric winding must be >= 0");
    if (gw < std::llabs(w)) throw std::domain_error("geometric winding must be >= |w|");
    if ((gw - w) % 2 != 0) throw std::domain_error("geometric winding must equal w mod 2");
    SatelliteOperator op;
    op.w = w;
    op.gw = gw;
    op.pattern = std::move(pattern);
    op.label = std::move(label);
    op.kind = kind;
    return op;
}

inline KnotValue unknot_value() { return knot_from_matrix(unknot_matrix(), "unknot"); }

inline SatelliteOperator make_cable_operator(long long n) {
    return make_satellite_operator(n, std::llabs(n), unknot_value(),
                                   "cable(" + std::to_string(n) + ")", SatelliteKind::cable);
}

inline SatelliteOperator make_connected_sum_operator(KnotValue j) {
    std::string label = "consum(" + j.label + ")";
    return make_satellite_operator(1, 1, std::move(j), std::move(label), SatelliteKind::consum);
}

inline SatelliteOperator make_reverse_operator() {
    return make_satellite_operator(-1, 1, unknot_value(), "rev_op", SatelliteKind::reverse_op);
}

inline SatelliteOperator make_zero_operator() {
    return make_satellite_operator(0, 0, unknot_value(), "zero_op", SatelliteKind::zero);
}

// certified bound on how far the operator can move a knot in the slice
// metric; for winding zero it bounds the distance to the unknot instead
inline Rational cable_distance_bound(const SatelliteOperator& op) {
    const long long aw = std::llabs(op.w);
    if (op.w == 0) return op.pattern.slice_ub + Rational(Int(op.gw)) / 2;
    return op.pattern.slice_ub + Rational(Int(op.gw - aw)) / 2 + Rational(Int(aw - 1));
}

inline KnotValue apply(const SatelliteOperator& op, const KnotValue& k) {
    SignatureFunction f =
        combine({{Int(1), op.pattern.sigfn}, {Int(1), pullback_power(k.sigfn, op.w)}});
    const long long aw = std::llabs(op.w);
    Rational ub = (op.w == 0)
                      ? cable_distance_bound(op)
                      : Rational(Int(aw)) * k.slice_ub + Rational(Int(aw - 1)) +
                            cable_distance_bound(op);
    // Satellites carry no Seifert matrix in general; the two exceptions are
    // honest identities: a connected-sum operator, and a cable whose
    // companion is already the unknot.
    std::optional<SeifertMatrix> s;
    if (op.kind == SatelliteKind::consum && k.seifert && op.pattern.seifert) {
        s = block_sum(*k.seifert, *op.pattern.seifert);
    } else if (op.kind == SatelliteKind::cable && k.seifert && k.seifert->n == 0) {
        s = unknot_matrix();
    }
    return make_knot_value(std::move(s), std::move(f), std::move(ub),
                           op.label + "(" + k.label + ")");
}

struct QuasiConstants {
    Rational A;
    Rational B;
    Rational C;
};

// multiplicative/additive constants certified for operators of winding +-1
inline QuasiConstants quasi_constants(const SatelliteOperator& op) {
    if (op.w != 1 && op.w != -1)
        throw std::domain_error("quasi constants require winding +-1");
    Rational half_excess = Rational(Int(op.gw - 1)) / 2;
    return QuasiConstants{Rational(1), half_excess, half_excess};
}

// drift of the operator at one evaluation point, read off the pattern
inline Int signature_defect(const SatelliteOperator& op, const CirclePoint& w) {
    return -evaluate(op.pattern.sigfn, w.c);
}

// Companion transform: same windings, pattern replaced by the inverse of the
// satellite followed by the satellite itself. That pattern bounds a ribbon,
// so its slice bound is zero and its signature function vanishes.
inline SatelliteOperator r_transform(const SatelliteOperator& op, const KnotValue& k) {
    KnotValue pk = apply(op, k);
    std::optional<SeifertMatrix> s;
    if (pk.seifert) s = block_sum(seifert_inverse(*pk.seifert), *pk.seifert);
    KnotValue pattern = make_knot_value(std::move(s), sigfn_zero(), Rational(0),
                                        "-" + pk.label + " # " + pk.label);
    return make_satellite_operator(op.w, op.gw, std::move(pattern),
                                   "r(" + op.label + "; " + k.label + ")");
}

}  // namespace concordia
