#pragma once

// Dense rational matrices, just enough for exact symmetric signatures and
// integer determinants.

#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace concordia {

struct RatMatrix {
    size_t n = 0;
    std::vector<Rational> a;  // row-major, n*n

    RatMatrix() = default;
    explicit RatMatrix(size_t size) : n(size), a(size * size, Rational(0)) {}

    Rational& at(size_t i, size_t j) { return a[i * n + j]; }
    const Rational& at(size_t i, size_t j) const { return a[i * n + j]; }
};

// Signature of a symmetric rational matrix by congruence reduction: each step
// either consumes one diagonal pivot (one eigenvalue sign) or a hyperbolic
// pair (net contribution zero). The matrix stays symmetric throughout.
inline long long signature_of_symmetric(RatMatrix m) {
    const size_t n = m.n;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (m.at(i, j) != m.at(j, i))
                throw std::domain_error("signature_of_symmetric: matrix not symmetric");

    std::vector<size_t> active;
    for (size_t i = 0; i < n; ++i) active.push_back(i);
    long long sig = 0;

    while (!active.empty()) {
        // prefer a nonzero diagonal pivot
        size_t pick = active.size();
        for (size_t k = 0; k < active.size(); ++k) {
            if (m.at(active[k], active[k]) != 0) { pick = k; break; }
        }
        if (pick < active.size()) {
            size_t i = active[pick];
            const Rational d = m.at(i, i);
            sig += (d > 0) ? 1 : -1;
            for (size_t k = 0; k < active.size(); ++k) {
                size_t l = active[k];
                if (l == i) continue;
                const Rational f = m.at(l, i) / d;
                if (f == 0) continue;
                // row_l -= f * row_i, then the mirror column update
                for (size_t t = 0; t < active.size(); ++t) {
                    size_t cidx = active[t];
                    m.at(l, cidx) -= f * m.at(i, cidx);
                }
                for (size_t t = 0; t < active.size(); ++t) {
                    size_t ridx = active[t];
                    m.at(ridx, l) -= f * m.at(ridx, i);
                }
            }
            active.erase(active.begin() + pick);
            continue;
        }

        // all active diagonal entries are zero; find an off-diagonal coupling
        size_t pi = 0, pj = 0;
        bool found = false;
        for (size_t x = 0; x < active.size() && !found; ++x)
            for (size_t y = x + 1; y < active.size() && !found; ++y)
                if (m.at(active[x], active[y]) != 0) {
                    pi = active[x];
                    pj = active[y];
                    found = true;
                }
        if (!found) break;  // remaining block is zero, contributes nothing

        // hyperbolic pair: contributes +1 and -1
        const Rational h = m.at(pi, pj);
        for (size_t k = 0; k < active.size(); ++k) {
            size_t l = active[k];
            if (l == pi || l == pj) continue;
            const Rational p = m.at(l, pi);
            const Rational q = m.at(l, pj);
            if (p == 0 && q == 0) continue;
            const Rational fp = q / h;  // multiple of row pi removed from l
            const Rational fq = p / h;  // multiple of row pj removed from l
            for (size_t t = 0; t < active.size(); ++t) {
                size_t cidx = active[t];
                m.at(l, cidx) -= fp * m.at(pi, cidx) + fq * m.at(pj, cidx);
            }
            for (size_t t = 0; t < active.size(); ++t) {
                size_t ridx = active[t];
                m.at(ridx, l) -= fp * m.at(ridx, pi) + fq * m.at(ridx, pj);
            }
        }
        std::erase(active, pi);
        std::erase(active, pj);
    }
    return sig;
}

// determinant of an integer matrix, Bareiss fraction-free elimination
inline Int int_det(std::vector<std::vector<Int>> m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::domain_error("int_det: matrix not square");
    if (n == 0) return 1;

    Int sign = 1;
    Int prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = n;
            for (size_t r = k + 1; r < n; ++r)
                if (m[r][k] != 0) { swap_row = r; break; }
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace concordia
