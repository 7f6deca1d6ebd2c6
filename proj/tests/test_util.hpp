#pragma once

#include "exactla/intmatrix.hpp"

#include <random>

namespace testutil {

using exactla::Int;
using exactla::IntMatrix;

inline IntMatrix random_matrix(std::mt19937_64 &rng, std::size_t rows,
                               std::size_t cols, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = d(rng);
    return m;
}

// Product of at most `steps` elementary matrices (transvections, swaps,
// sign flips), with the running product discarded-and-stopped once any
// entry would exceed `entry_bound`.
inline IntMatrix random_unimodular(std::mt19937_64 &rng, std::size_t n,
                                   int steps, long entry_bound) {
    IntMatrix q = IntMatrix::identity(n);
    if (n == 0)
        return q;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> coeff(1, 2);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int s = 0; s < steps; ++s) {
        IntMatrix e = IntMatrix::identity(n);
        std::size_t i = pick(rng), j = pick(rng);
        switch (kind(rng)) {
        case 0: { // transvection
            if (i == j)
                continue;
            e(i, j) = sign(rng) ? coeff(rng) : -coeff(rng);
            break;
        }
        case 1: { // swap
            if (i == j)
                continue;
            e(i, i) = 0;
            e(j, j) = 0;
            e(i, j) = 1;
            e(j, i) = 1;
            break;
        }
        default: // sign flip
            e(i, i) = -1;
            break;
        }
        IntMatrix cand = q * e;
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            for (std::size_t b = 0; b < n && ok; ++b)
                if (abs(cand(a, b)) > entry_bound)
                    ok = false;
        if (ok)
            q = cand;
    }
    return q;
}

} // namespace testutil
