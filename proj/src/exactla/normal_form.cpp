#include "exactla/normal_form.hpp"
#include "exactla/errors.hpp"

#include <algorithm>

namespace exactla {

namespace {

// Replace rows r and i by unimodular combinations so that (r, c) holds
// gcd(a, b) and (i, c) becomes zero. Mirrors the operation on u.
void gcd_rows(IntMatrix &m, IntMatrix &u, std::size_t r, std::size_t i,
              std::size_t c) {
    Int a = m(r, c), b = m(i, c), g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    Int ag = a / g, bg = b / g;
    // [[s, t], [-bg, ag]] has determinant (s a + t b)/g = 1.
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Int mr = m(r, j), mi = m(i, j);
        m(r, j) = s * mr + t * mi;
        m(i, j) = ag * mi - bg * mr;
    }
    for (std::size_t j = 0; j < u.cols(); ++j) {
        Int ur = u(r, j), ui = u(i, j);
        u(r, j) = s * ur + t * ui;
        u(i, j) = ag * ui - bg * ur;
    }
}

void negate_row(IntMatrix &m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(i, j) = -m(i, j);
}

void swap_rows(IntMatrix &m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        mpz_swap(m(a, j).get_mpz_t(), m(b, j).get_mpz_t());
}

void swap_cols(IntMatrix &m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        mpz_swap(m(i, a).get_mpz_t(), m(i, b).get_mpz_t());
}

} // namespace

HnfResult hnf(const IntMatrix &a) {
    IntMatrix h = a;
    IntMatrix u = IntMatrix::identity(a.rows());
    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
        std::size_t p = r;
        while (p < h.rows() && h(p, c) == 0)
            ++p;
        if (p == h.rows())
            continue;
        if (p != r) {
            swap_rows(h, r, p);
            swap_rows(u, r, p);
        }
        for (std::size_t i = r + 1; i < h.rows(); ++i)
            if (h(i, c) != 0)
                gcd_rows(h, u, r, i, c);
        if (h(r, c) < 0) {
            negate_row(h, r);
            negate_row(u, r);
        }
        // Reduce entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < r; ++i) {
            if (h(i, c) == 0)
                continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(),
                       h(r, c).get_mpz_t());
            if (q == 0)
                continue;
            for (std::size_t j = 0; j < h.cols(); ++j)
                h(i, j) -= q * h(r, j);
            for (std::size_t j = 0; j < u.cols(); ++j)
                u(i, j) -= q * u(r, j);
        }
        ++r;
    }
    return {std::move(h), std::move(u)};
}

SnfResult snf(const IntMatrix &a) {
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(a.rows());
    IntMatrix v = IntMatrix::identity(a.cols());
    std::size_t mn = std::min(d.rows(), d.cols());
    for (std::size_t t = 0; t < mn; ++t) {
        for (;;) {
            // Move the absolutely smallest nonzero entry of the trailing
            // submatrix to the pivot position.
            std::size_t pi = t, pj = t;
            bool found = false;
            Int best;
            for (std::size_t i = t; i < d.rows(); ++i)
                for (std::size_t j = t; j < d.cols(); ++j) {
                    if (d(i, j) == 0)
                        continue;
                    Int mag = abs(d(i, j));
                    if (!found || mag < best) {
                        found = true;
                        best = mag;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) {
                t = mn; // trailing block is zero
                break;
            }
            if (pi != t) {
                swap_rows(d, t, pi);
                swap_rows(u, t, pi);
            }
            if (pj != t) {
                swap_cols(d, t, pj);
                swap_cols(v, t, pj);
            }
            // Reduce column and row t by remainders only; the pivot row and
            // column themselves are never recombined, so any divisibility
            // violation survives until its own reduction step and every
            // nonzero remainder strictly shrinks the trailing minimum.
            bool dirty = false;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d(i, t) == 0)
                    continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(),
                           d(t, t).get_mpz_t());
                if (q != 0) {
                    for (std::size_t j = 0; j < d.cols(); ++j)
                        d(i, j) -= q * d(t, j);
                    for (std::size_t j = 0; j < u.cols(); ++j)
                        u(i, j) -= q * u(t, j);
                }
                if (d(i, t) != 0)
                    dirty = true;
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d(t, j) == 0)
                    continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(),
                           d(t, t).get_mpz_t());
                if (q != 0) {
                    for (std::size_t i = 0; i < d.rows(); ++i)
                        d(i, j) -= q * d(i, t);
                    for (std::size_t i = 0; i < v.rows(); ++i)
                        v(i, j) -= q * v(i, t);
                }
                if (d(t, j) != 0)
                    dirty = true;
            }
            if (dirty)
                continue;
            // Pivot divides its row and column; enforce divisibility of the
            // whole trailing block.
            bool divisible = true;
            for (std::size_t i = t + 1; i < d.rows() && divisible; ++i)
                for (std::size_t j = t + 1; j < d.cols() && divisible; ++j)
                    if (!mpz_divisible_p(d(i, j).get_mpz_t(),
                                         d(t, t).get_mpz_t())) {
                        for (std::size_t jj = 0; jj < d.cols(); ++jj)
                            d(t, jj) += d(i, jj);
                        for (std::size_t jj = 0; jj < u.cols(); ++jj)
                            u(t, jj) += u(i, jj);
                        divisible = false;
                    }
            if (divisible)
                break;
        }
    }
    for (std::size_t t = 0; t < mn; ++t)
        if (d(t, t) < 0) {
            negate_row(d, t);
            negate_row(u, t);
        }
    return {std::move(d), std::move(u), std::move(v)};
}

std::vector<Int> snf_divisors(const IntMatrix &a) {
    SnfResult s = snf(a);
    std::size_t mn = std::min(a.rows(), a.cols());
    std::vector<Int> out(mn);
    for (std::size_t i = 0; i < mn; ++i)
        out[i] = s.d(i, i);
    return out;
}

namespace {

// Canonical basis of the lattice spanned by the columns of gens: row-HNF of
// the transpose with zero rows dropped, transposed back.
IntMatrix column_hnf_basis(const IntMatrix &gens) {
    HnfResult r = hnf(gens.transpose());
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < r.h.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < r.h.cols(); ++j)
            if (r.h(i, j) != 0) {
                zero = false;
                break;
            }
        if (!zero)
            keep.push_back(i);
    }
    IntMatrix basis(gens.rows(), keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c)
        for (std::size_t i = 0; i < gens.rows(); ++i)
            basis(i, c) = r.h(keep[c], i);
    return basis;
}

} // namespace

IntMatrix kernel_basis(const IntMatrix &a) {
    if (a.cols() == 0)
        return IntMatrix(0, 0);
    if (a.rows() == 0)
        return IntMatrix::identity(a.cols());
    HnfResult r = hnf(a.transpose()); // u * a^T = h, u is cols x cols
    std::vector<std::size_t> zero_rows;
    for (std::size_t i = 0; i < r.h.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < r.h.cols(); ++j)
            if (r.h(i, j) != 0) {
                zero = false;
                break;
            }
        if (zero)
            zero_rows.push_back(i);
    }
    IntMatrix k(a.cols(), zero_rows.size());
    for (std::size_t c = 0; c < zero_rows.size(); ++c)
        for (std::size_t j = 0; j < a.cols(); ++j)
            k(j, c) = r.u(zero_rows[c], j);
    return column_hnf_basis(k);
}

std::optional<std::vector<Int>> solve(const IntMatrix &a,
                                      const std::vector<Int> &b) {
    if (b.size() != a.rows())
        throw std::invalid_argument("solve: rhs length mismatch");
    SnfResult s = snf(a);
    std::vector<Int> c = s.u.apply(b);
    std::size_t mn = std::min(a.rows(), a.cols());
    std::vector<Int> y(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < mn && s.d(i, i) != 0) {
            if (!mpz_divisible_p(c[i].get_mpz_t(), s.d(i, i).get_mpz_t()))
                return std::nullopt;
            y[i] = c[i] / s.d(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return s.v.apply(y);
}

std::optional<IntMatrix> solve_columns(const IntMatrix &a, const IntMatrix &b) {
    if (b.rows() != a.rows())
        throw std::invalid_argument("solve_columns: shape mismatch");
    SnfResult s = snf(a);
    std::size_t mn = std::min(a.rows(), a.cols());
    IntMatrix x(a.cols(), b.cols());
    for (std::size_t col = 0; col < b.cols(); ++col) {
        std::vector<Int> c = s.u.apply(b.col(col));
        std::vector<Int> y(a.cols());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i < mn && s.d(i, i) != 0) {
                if (!mpz_divisible_p(c[i].get_mpz_t(), s.d(i, i).get_mpz_t()))
                    return std::nullopt;
                y[i] = c[i] / s.d(i, i);
            } else if (c[i] != 0) {
                return std::nullopt;
            }
        }
        std::vector<Int> xi = s.v.apply(y);
        for (std::size_t i = 0; i < a.cols(); ++i)
            x(i, col) = xi[i];
    }
    return x;
}

IntMatrix complete_to_basis(const IntMatrix &w) {
    std::size_t n = w.rows(), k = w.cols();
    if (k == 0)
        return IntMatrix::identity(n);
    SnfResult s = snf(w);
    if (k > n)
        throw NotPrimitive("more columns than ambient rank");
    for (std::size_t i = 0; i < k; ++i)
        if (s.d(i, i) != 1)
            throw NotPrimitive("SNF divisor " + s.d(i, i).get_str() +
                               " at position " + std::to_string(i));
    // w = u^-1 [I;0] v^-1, so u^-1 * diag(v^-1, I) has first k columns w.
    IntMatrix b = inverse_unimodular(s.u);
    IntMatrix vi = inverse_unimodular(s.v);
    IntMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            Int acc = 0;
            for (std::size_t t = 0; t < k; ++t)
                acc += b(i, t) * vi(t, j);
            p(i, j) = acc;
        }
        for (std::size_t j = k; j < n; ++j)
            p(i, j) = b(i, j);
    }
    return p;
}

bool is_unimodular(const IntMatrix &u) {
    if (u.rows() != u.cols())
        return false;
    Int d = determinant(u);
    return d == 1 || d == -1;
}

IntMatrix inverse_unimodular(const IntMatrix &u) {
    if (u.rows() != u.cols())
        throw std::invalid_argument("inverse of non-square matrix");
    HnfResult r = hnf(u);
    if (r.h != IntMatrix::identity(u.rows()))
        throw std::invalid_argument("matrix is not unimodular");
    return r.u;
}

std::size_t rank(const IntMatrix &a) {
    HnfResult r = hnf(a);
    std::size_t count = 0;
    for (std::size_t i = 0; i < r.h.rows(); ++i)
        for (std::size_t j = 0; j < r.h.cols(); ++j)
            if (r.h(i, j) != 0) {
                ++count;
                break;
            }
    return count;
}

} // namespace exactla
