#include "z2mod/involution.hpp"

#include "exactla/errors.hpp"
#include "exactla/lattice.hpp"
#include "exactla/normal_form.hpp"

#include <optional>
#include <random>

namespace z2mod {

using exactla::F2Matrix;
using exactla::f2_rank;
using exactla::f2_reduce;
using exactla::hcat;
using exactla::kernel_basis;
using exactla::lattice_basis;
using exactla::snf_divisors;
using exactla::solve_columns;

namespace {

// Dimension over F2 of span(kerbasis) / span(img_gens). The quotient is an
// elementary 2-group whenever the action is an involution.
std::size_t quotient_f2_dim(const IntMatrix &kerbasis,
                            const IntMatrix &img_gens) {
    if (kerbasis.cols() == 0)
        return 0;
    auto coords = solve_columns(kerbasis, img_gens);
    if (!coords)
        throw std::logic_error("image does not lie in the kernel lattice");
    std::size_t count = 0;
    for (const Int &d : snf_divisors(*coords)) {
        if (d == 1)
            continue;
        if (d == 2)
            ++count;
        else
            throw std::logic_error("eigenlattice quotient has divisor " +
                                   d.get_str());
    }
    return count;
}

std::optional<Multiplicities> match_canonical(const IntMatrix &s) {
    std::size_t n = s.rows();
    auto col_is = [&](std::size_t j, std::size_t pos, long val) {
        for (std::size_t r = 0; r < n; ++r)
            if (s(r, j) != (r == pos ? Int(val) : Int(0)))
                return false;
        return true;
    };
    Multiplicities m;
    std::size_t i = 0;
    while (i < n && col_is(i, i, 1)) {
        ++m.n1;
        ++i;
    }
    while (i < n && col_is(i, i, -1)) {
        ++m.n2;
        ++i;
    }
    while (i + 1 < n && col_is(i, i + 1, 1) && col_is(i + 1, i, 1)) {
        ++m.n3;
        i += 2;
    }
    if (i == n)
        return m;
    return std::nullopt;
}

IntMatrix halved(const IntMatrix &a) {
    IntMatrix h(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!mpz_divisible_ui_p(a(i, j).get_mpz_t(), 2))
                throw std::logic_error("expected even entry");
            h(i, j) = a(i, j) / 2;
        }
    return h;
}

// RREF over Z/p with entries normalized into [0, p); returns the reduced
// matrix and the pivot column indices.
std::pair<IntMatrix, std::vector<std::size_t>> modp_rref(IntMatrix a,
                                                         const Int &p) {
    auto norm = [&](Int &x) { mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()); };
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            norm(a(i, j));
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c) == 0)
            ++piv;
        if (piv == a.rows())
            continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); ++j)
                mpz_swap(a(r, j).get_mpz_t(), a(piv, j).get_mpz_t());
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), a(r, c).get_mpz_t(), p.get_mpz_t()) ==
            0)
            throw std::logic_error("pivot not invertible mod p");
        for (std::size_t j = 0; j < a.cols(); ++j) {
            a(r, j) *= inv;
            norm(a(r, j));
        }
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0)
                continue;
            Int f = a(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j) {
                a(i, j) -= f * a(r, j);
                norm(a(i, j));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t modp_rank(const IntMatrix &a, const Int &p) {
    return modp_rref(a, p).second.size();
}

} // namespace

Multiplicities multiplicities(const Involution &inv) {
    std::size_t n = inv.n();
    if (n == 0)
        return {};
    const IntMatrix &s = inv.s();
    IntMatrix id = IntMatrix::identity(n);
    Multiplicities m;
    m.n1 = quotient_f2_dim(kernel_basis(s - id), id + s);
    m.n2 = quotient_f2_dim(kernel_basis(s + id), id - s);
    m.n3 = f2_rank(f2_reduce(id + s));
    return m;
}

IntMatrix canonical_form(const Multiplicities &mult) {
    std::size_t n = mult.rank();
    IntMatrix c(n, n);
    std::size_t i = 0;
    for (std::size_t k = 0; k < mult.n1; ++k, ++i)
        c(i, i) = 1;
    for (std::size_t k = 0; k < mult.n2; ++k, ++i)
        c(i, i) = -1;
    for (std::size_t k = 0; k < mult.n3; ++k, i += 2) {
        c(i, i + 1) = 1;
        c(i + 1, i) = 1;
    }
    return c;
}

bool verify_decomposition(const Involution &inv, const Decomposition &dec) {
    std::size_t n = inv.n();
    if (dec.mult.rank() != n || dec.p.rows() != n || dec.p.cols() != n)
        return false;
    if (!exactla::is_unimodular(dec.p))
        return false;
    IntMatrix pinv = exactla::inverse_unimodular(dec.p);
    return pinv * inv.s() * dec.p == canonical_form(dec.mult);
}

IntMatrix lift_subspace_to_summand(std::size_t n, const Int &p,
                                   const IntMatrix &v_gens) {
    if (v_gens.rows() != n)
        throw std::invalid_argument("subspace generators have wrong height");
    if (n == 0)
        return IntMatrix(0, 0);
    // A mod-p RREF basis of the span lifts with an identity minor at the
    // pivot coordinates, so the lifted columns are automatically primitive.
    auto [red, pivots] = modp_rref(v_gens.transpose(), p);
    std::size_t d = pivots.size();
    IntMatrix l(n, d);
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t i = 0; i < n; ++i)
            l(i, c) = red(c, i);
    for (const Int &div : snf_divisors(l))
        if (div != 1)
            throw std::logic_error("lifted summand basis is not primitive");
    if (modp_rank(hcat(l, v_gens), p) != d)
        throw std::logic_error("lifted summand has wrong mod-p span");
    return l;
}

IntMatrix lift_subspace_to_summand(std::size_t n, const exactla::F2Matrix &v) {
    IntMatrix gens(v.rows(), v.cols());
    for (std::size_t i = 0; i < v.rows(); ++i)
        for (std::size_t j = 0; j < v.cols(); ++j)
            gens(i, j) = v(i, j);
    return lift_subspace_to_summand(n, Int(2), gens);
}

std::pair<IntMatrix, IntMatrix> split_relative(std::size_t n, const Int &p,
                                               const IntMatrix &n_gens) {
    if (n_gens.rows() != n)
        throw std::invalid_argument("sublattice generators have wrong height");
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Int> pe(n);
        pe[i] = p;
        if (!exactla::solve(n_gens, pe))
            throw ChainViolation("p Z^n is not contained in the sublattice");
    }
    IntMatrix n1 = lift_subspace_to_summand(n, p, n_gens);
    IntMatrix full = exactla::complete_to_basis(n1);
    std::vector<std::size_t> rest;
    for (std::size_t j = n1.cols(); j < n; ++j)
        rest.push_back(j);
    IntMatrix n0 = full.columns(rest);
    if (!exactla::lattice_equal(hcat(n0.scaled(p), n1), n_gens))
        throw std::logic_error("relative splitting postcondition failed");
    return {std::move(n0), std::move(n1)};
}

namespace detail {

IntMatrix interleave_pairs(const IntMatrix &s, const IntMatrix &x) {
    IntMatrix sx = s * x;
    IntMatrix w(x.rows(), 2 * x.cols());
    for (std::size_t j = 0; j < x.cols(); ++j)
        for (std::size_t i = 0; i < x.rows(); ++i) {
            w(i, 2 * j) = x(i, j);
            w(i, 2 * j + 1) = sx(i, j);
        }
    return w;
}

namespace {

// Decompose an invertible F2 matrix into row additions reducing it to the
// identity. Returns the operations in application order.
std::vector<std::pair<std::size_t, std::size_t>>
transvection_ops(F2Matrix m) {
    std::size_t q = m.rows();
    std::vector<std::pair<std::size_t, std::size_t>> ops;
    auto addrow = [&](std::size_t dst, std::size_t src) {
        for (std::size_t j = 0; j < q; ++j)
            m(dst, j) ^= m(src, j);
        ops.emplace_back(dst, src);
    };
    for (std::size_t c = 0; c < q; ++c) {
        if (m(c, c) == 0) {
            std::size_t r = c + 1;
            while (r < q && m(r, c) == 0)
                ++r;
            if (r == q)
                throw std::logic_error("matrix is singular mod 2");
            addrow(c, r);
        }
        for (std::size_t r = 0; r < q; ++r)
            if (r != c && m(r, c))
                addrow(r, c);
    }
    return ops;
}

// Determinant-one integer lift of an invertible F2 matrix.
IntMatrix sl_lift(const F2Matrix &dbar) {
    std::size_t q = dbar.rows();
    IntMatrix z = IntMatrix::identity(q);
    // dbar = E_1^-1 ... E_m^-1 over F2; multiply the integer inverses in
    // the same order. Right-multiplying by (I - e_{t,s}) subtracts column
    // t from column s.
    for (auto [t, s] : transvection_ops(dbar))
        for (std::size_t i = 0; i < q; ++i)
            z(i, s) -= z(i, t);
    return z;
}

} // namespace

IntMatrix free_module_basis(const IntMatrix &s, std::uint64_t seed) {
    std::size_t m = s.rows();
    if (m == 0)
        return IntMatrix(0, 0);
    if (m % 2 != 0)
        throw std::logic_error("free part has odd rank");
    IntMatrix id = IntMatrix::identity(m);
    if (s * s != id)
        throw std::logic_error("restricted action is not an involution");
    IntMatrix kplus = kernel_basis(s - id);
    IntMatrix kminus = kernel_basis(s + id);
    if (kplus.cols() * 2 != m || kminus.cols() * 2 != m)
        throw std::logic_error("free part has unbalanced eigenlattices");
    auto x0 = solve_columns(id + s, kplus);
    if (!x0)
        throw std::logic_error("(1+s) is not onto the fixed lattice");
    IntMatrix x = *x0;
    // Coordinates of (1-s)x in the (-1)-eigenlattice; correcting x by
    // kminus * e changes those coordinates by 2e while (1+s)x is unchanged,
    // so steering them to a determinant-one lift produces a basis.
    IntMatrix z = (id - s) * x;
    auto d0 = solve_columns(kminus, z);
    if (!d0)
        throw std::logic_error("(1-s)x escapes the (-1)-eigenlattice");
    IntMatrix target = sl_lift(f2_reduce(*d0));
    IntMatrix corr = halved(target - *d0);
    IntMatrix x_fixed = x + kminus * corr;
    if (exactla::is_unimodular(interleave_pairs(s, x_fixed)))
        return x_fixed;
    return randomized_repair(s, x, kminus, seed);
}

IntMatrix randomized_repair(const IntMatrix &s, const IntMatrix &x,
                            const IntMatrix &k_minus, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::size_t q = x.cols();
    for (int attempt = 0; attempt < 200000; ++attempt) {
        IntMatrix r(q, q);
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = 0; j < q; ++j)
                r(i, j) = coeff(rng);
        IntMatrix cand = x + k_minus * r;
        if (exactla::is_unimodular(interleave_pairs(s, cand)))
            return cand;
    }
    throw std::logic_error("free-basis repair search exhausted");
}

} // namespace detail

Decomposition decompose(const Involution &inv, const DecomposeOptions &opts) {
    std::size_t n = inv.n();
    if (n == 0)
        return {Multiplicities{}, IntMatrix(0, 0)};
    if (auto m = match_canonical(inv.s()))
        return {*m, IntMatrix::identity(n)};

    const IntMatrix &s = inv.s();
    IntMatrix id = IntMatrix::identity(n);
    Multiplicities mult = multiplicities(inv);

    // Plus side: the doubled fixed sublattice 2 ker(s-1) sits between
    // 2 (1+s) Z^n and (1+s) Z^n; split it off relative to (1+s) Z^n.
    IntMatrix e_basis = lattice_basis(id + s);
    IntMatrix k_plus2 = kernel_basis(s - id).scaled(2);
    auto ke = solve_columns(e_basis, k_plus2);
    if (!ke)
        throw std::logic_error("doubled fixed lattice escapes (1+s) Z^n");
    auto [a0e, a1e] = split_relative(e_basis.cols(), 2, *ke);
    IntMatrix a0 = e_basis * a0e;
    IntMatrix t1_cols = halved(e_basis * a1e);
    if (t1_cols.cols() != mult.n1)
        throw std::logic_error("T1 block has wrong rank");

    // Minus side, symmetric.
    IntMatrix f_basis = lattice_basis(id - s);
    IntMatrix k_minus2 = kernel_basis(s + id).scaled(2);
    auto kf = solve_columns(f_basis, k_minus2);
    if (!kf)
        throw std::logic_error("doubled negated lattice escapes (1-s) Z^n");
    auto [b0f, b1f] = split_relative(f_basis.cols(), 2, *kf);
    IntMatrix b0 = f_basis * b0f;
    IntMatrix t2_cols = halved(f_basis * b1f);
    if (t2_cols.cols() != mult.n2)
        throw std::logic_error("T2 block has wrong rank");

    // Free part: N = Z^n intersected with (A0 + B0)/2, carried in its own
    // basis so the paired-generator extraction works at full rank.
    IntMatrix half_gens = hcat(a0, b0);
    IntMatrix inter = exactla::lattice_intersect(lattice_basis(half_gens),
                                                 id.scaled(2));
    IntMatrix n_basis = halved(inter);
    if (n_basis.cols() != 2 * mult.n3)
        throw std::logic_error("free part has wrong rank");
    IntMatrix pairs_amb(n, 0);
    if (mult.n3 > 0) {
        auto s_hat = solve_columns(n_basis, s * n_basis);
        if (!s_hat)
            throw std::logic_error("free part is not invariant");
        IntMatrix x = detail::free_module_basis(*s_hat, opts.seed);
        pairs_amb = n_basis * detail::interleave_pairs(*s_hat, x);
    }

    Decomposition dec{mult, hcat(hcat(t1_cols, t2_cols), pairs_amb)};
    if (!verify_decomposition(inv, dec))
        throw std::logic_error("decomposition postcondition failed");
    return dec;
}

} // namespace z2mod
