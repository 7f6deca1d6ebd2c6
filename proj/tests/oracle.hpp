#pragma once

// Brute-force multiplicity oracle: searches over candidate bases of bounded
// height, independent of the production formulas. A column destined for a
// trivial summand must be a fixed vector, one for a sign summand a negated
// vector, and a regular pair contributes columns (p, S p); any assembled
// basis with |det| = 1 certifies the multiplicity pattern.

#include "z2mod/involution.hpp"

#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <vector>

namespace oracle {

using Vec = std::vector<long>;

inline std::vector<Vec> all_vectors(std::size_t n, long h) {
    std::vector<Vec> out;
    Vec v(n, -h);
    for (;;) {
        bool nonzero = false;
        for (long x : v)
            if (x != 0)
                nonzero = true;
        if (nonzero)
            out.push_back(v);
        std::size_t i = 0;
        while (i < n && v[i] == h)
            v[i++] = -h;
        if (i == n)
            break;
        ++v[i];
    }
    return out;
}

inline Vec apply(const std::vector<Vec> &s, const Vec &v) {
    std::size_t n = v.size();
    Vec out(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[i] += s[i][j] * v[j];
    return out;
}

inline long det(std::vector<Vec> cols) {
    std::size_t n = cols.size();
    // cols holds column vectors; Gaussian elimination with exact longs via
    // Bareiss would need care, but n <= 4 so cofactor expansion suffices.
    std::vector<std::vector<long>> m(n, std::vector<long>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            m[i][j] = cols[j][i];
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i)
        idx[i] = i;
    std::function<long(std::vector<std::size_t>, std::size_t)> go =
        [&](std::vector<std::size_t> rows, std::size_t col) -> long {
        if (rows.size() == 1)
            return m[rows[0]][col];
        long acc = 0;
        long sign = 1;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            long pivot = m[rows[k]][col];
            if (pivot != 0) {
                std::vector<std::size_t> rest;
                for (std::size_t l = 0; l < rows.size(); ++l)
                    if (l != k)
                        rest.push_back(rows[l]);
                acc += sign * pivot * go(rest, col + 1);
            }
            sign = -sign;
        }
        return acc;
    };
    return go(idx, 0);
}

// Searches heights 1..max_height for a certified basis.
inline std::optional<z2mod::Multiplicities>
multiplicities(const exactla::IntMatrix &s_mat, long max_height) {
    std::size_t n = s_mat.rows();
    if (n == 0)
        return z2mod::Multiplicities{};
    std::vector<Vec> s(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            s[i][j] = s_mat(i, j).get_si();

    for (long h = 1; h <= max_height; ++h) {
        std::vector<Vec> pool = all_vectors(n, h);
        std::vector<Vec> fixed, negated;
        for (const Vec &v : pool) {
            Vec sv = apply(s, v);
            bool fix = true, neg = true;
            for (std::size_t i = 0; i < n; ++i) {
                if (sv[i] != v[i])
                    fix = false;
                if (sv[i] != -v[i])
                    neg = false;
            }
            if (fix)
                fixed.push_back(v);
            if (neg)
                negated.push_back(v);
        }
        for (std::size_t n3 = 0; 2 * n3 <= n; ++n3)
            for (std::size_t n1 = 0; n1 + 2 * n3 <= n; ++n1) {
                std::size_t n2 = n - n1 - 2 * n3;
                std::vector<Vec> cols(n);
                std::function<bool(std::size_t)> place =
                    [&](std::size_t slot) -> bool {
                    if (slot == n)
                        return std::labs(det(cols)) == 1;
                    if (slot < n1) {
                        for (const Vec &v : fixed) {
                            cols[slot] = v;
                            if (place(slot + 1))
                                return true;
                        }
                        return false;
                    }
                    if (slot < n1 + n2) {
                        for (const Vec &v : negated) {
                            cols[slot] = v;
                            if (place(slot + 1))
                                return true;
                        }
                        return false;
                    }
                    for (const Vec &v : pool) {
                        cols[slot] = v;
                        cols[slot + 1] = apply(s, v);
                        if (place(slot + 2))
                            return true;
                    }
                    return false;
                };
                if (place(0))
                    return z2mod::Multiplicities{n1, n2, n3};
            }
    }
    return std::nullopt;
}

} // namespace oracle
