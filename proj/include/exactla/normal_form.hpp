#pragma once

#include "exactla/intmatrix.hpp"

#include <optional>

namespace exactla {

struct HnfResult {
    IntMatrix h; // row-style Hermite normal form
    IntMatrix u; // unimodular, u * a = h
};

// Row-style HNF via gcd-driven elimination. Pivots are positive and entries
// above each pivot are reduced into [0, pivot).
HnfResult hnf(const IntMatrix &a);

struct SnfResult {
    IntMatrix d; // diagonal, non-negative, d1 | d2 | ...
    IntMatrix u; // unimodular row transform
    IntMatrix v; // unimodular column transform, u * a * v = d
};

SnfResult snf(const IntMatrix &a);

// Diagonal of the SNF as a vector of length min(rows, cols).
std::vector<Int> snf_divisors(const IntMatrix &a);

// Columns form a Z-basis of {x : a x = 0}. The kernel of an integer matrix
// is saturated, and the basis is returned in column-HNF form, so the output
// is canonical.
IntMatrix kernel_basis(const IntMatrix &a);

// Particular integer solution of a x = b, or nullopt when none exists.
// Free coordinates of the SNF parametrization are set to zero, so the
// returned solution is deterministic.
std::optional<std::vector<Int>> solve(const IntMatrix &a,
                                      const std::vector<Int> &b);

// Solve a X = B columnwise; nullopt if any column fails.
std::optional<IntMatrix> solve_columns(const IntMatrix &a, const IntMatrix &b);

// Completes the columns of w (required primitive) to a unimodular matrix
// whose first w.cols() columns equal w. Throws NotPrimitive otherwise.
IntMatrix complete_to_basis(const IntMatrix &w);

bool is_unimodular(const IntMatrix &u);

// Inverse of a unimodular matrix (integral). Throws if u is not unimodular.
IntMatrix inverse_unimodular(const IntMatrix &u);

// Exact rank over Q.
std::size_t rank(const IntMatrix &a);

} // namespace exactla
