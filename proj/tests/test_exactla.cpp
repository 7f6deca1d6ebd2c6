#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exactla/errors.hpp"
#include "exactla/f2matrix.hpp"
#include "exactla/intmatrix.hpp"
#include "exactla/lattice.hpp"
#include "exactla/matrix_json.hpp"
#include "exactla/normal_form.hpp"
#include "test_util.hpp"

#include <random>

using namespace exactla;
using testutil::random_matrix;

namespace {

bool is_row_hnf(const IntMatrix &h) {
    std::size_t last_pivot = 0;
    bool seen_zero_row = false;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::size_t c = 0;
        while (c < h.cols() && h(i, c) == 0)
            ++c;
        if (c == h.cols()) {
            seen_zero_row = true;
            continue;
        }
        if (seen_zero_row)
            return false; // nonzero row after a zero row
        if (i > 0 && c <= last_pivot)
            return false; // pivots must move right
        if (h(i, c) <= 0)
            return false;
        for (std::size_t r = 0; r < i; ++r)
            if (h(r, c) < 0 || h(r, c) >= h(i, c))
                return false;
        last_pivot = c;
    }
    return true;
}

bool is_saturated(const IntMatrix &basis) {
    for (const Int &d : snf_divisors(basis))
        if (d != 1)
            return false;
    return true;
}

} // namespace

TEST_CASE("hnf permutation input") {
    IntMatrix a = IntMatrix::from_rows({{0, 1}, {1, 0}});
    auto [h, u] = hnf(a);
    CHECK(h == IntMatrix::identity(2));
    CHECK(u == a);
}

TEST_CASE("hnf fixed point") {
    IntMatrix a = IntMatrix::from_rows({{2, 0}, {0, 3}});
    auto [h, u] = hnf(a);
    CHECK(h == a);
    CHECK(u == IntMatrix::identity(2));
}

TEST_CASE("hnf gcd pivot") {
    IntMatrix a = IntMatrix::from_rows({{2, 4}, {1, 3}});
    auto [h, u] = hnf(a);
    CHECK(h(0, 0) == 1);
    CHECK(u * a == h);
    CHECK(is_unimodular(u));
    CHECK(is_row_hnf(h));
}

TEST_CASE("hnf randomized properties") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        std::size_t m = 1 + t % 5, n = 1 + (t / 2) % 5;
        IntMatrix a = random_matrix(rng, m, n, -9, 9);
        auto [h, u] = hnf(a);
        CHECK(u * a == h);
        CHECK(is_unimodular(u));
        CHECK(is_row_hnf(h));
    }
}

TEST_CASE("snf identity") {
    IntMatrix a = IntMatrix::identity(4);
    auto [d, u, v] = snf(a);
    CHECK(d == a);
}

TEST_CASE("snf divisibility chain forced") {
    IntMatrix a = IntMatrix::from_rows({{2, 0}, {0, 3}});
    auto [d, u, v] = snf(a);
    CHECK(d == IntMatrix::from_rows({{1, 0}, {0, 6}}));
    CHECK(u * a * v == d);
    CHECK(is_unimodular(u));
    CHECK(is_unimodular(v));
}

TEST_CASE("snf of a cyclic presentation") {
    IntMatrix a = IntMatrix::from_rows({{3, 0}, {1, 1}});
    auto [d, u, v] = snf(a);
    CHECK(d == IntMatrix::from_rows({{1, 0}, {0, 3}}));
    CHECK(u * a * v == d);
}

TEST_CASE("snf randomized round trip") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 150; ++t) {
        std::size_t m = 1 + t % 6, n = 1 + (t / 3) % 6;
        IntMatrix a = random_matrix(rng, m, n, -9, 9);
        auto [d, u, v] = snf(a);
        CHECK(u * a * v == d);
        CHECK(is_unimodular(u));
        CHECK(is_unimodular(v));
        std::size_t mn = std::min(m, n);
        for (std::size_t i = 0; i < mn; ++i) {
            CHECK(d(i, i) >= 0);
            if (i + 1 < mn && d(i, i) != 0)
                CHECK(mpz_divisible_p(d(i + 1, i + 1).get_mpz_t(),
                                      d(i, i).get_mpz_t()));
            if (d(i, i) == 0 && i + 1 < mn)
                CHECK(d(i + 1, i + 1) == 0);
        }
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j)
                    CHECK(d(i, j) == 0);
        // reconstruct a from (d, u, v)
        CHECK(inverse_unimodular(u) * d * inverse_unimodular(v) == a);
    }
}

TEST_CASE("kernel of difference functional") {
    IntMatrix a = IntMatrix::from_rows({{1, -1}});
    IntMatrix k = kernel_basis(a);
    CHECK(k == IntMatrix::from_rows({{1}, {1}}));
}

TEST_CASE("kernel of zero map") {
    IntMatrix a(3, 4);
    CHECK(kernel_basis(a) == IntMatrix::identity(4));
}

TEST_CASE("kernel of rank one matrix") {
    IntMatrix a = IntMatrix::from_rows({{1, 1}, {1, 1}});
    IntMatrix k = kernel_basis(a);
    CHECK(k == IntMatrix::from_rows({{1}, {-1}}));
    // oracle: every small integer solution is a multiple of (1, -1)
    for (int x = -3; x <= 3; ++x)
        for (int y = -3; y <= 3; ++y)
            if (x + y == 0) {
                std::vector<Int> v{x, y};
                CHECK(lattice_contains(k, v));
            }
}

TEST_CASE("kernel randomized saturation") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 120; ++t) {
        std::size_t m = 1 + t % 4, n = 1 + (t / 2) % 5;
        IntMatrix a = random_matrix(rng, m, n, -9, 9);
        IntMatrix k = kernel_basis(a);
        CHECK((a * k).is_zero());
        CHECK(k.cols() == n - rank(a));
        if (k.cols() > 0)
            CHECK(is_saturated(k));
    }
}

TEST_CASE("solve identity and parity") {
    std::vector<Int> b{5, -3};
    auto x = solve(IntMatrix::identity(2), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);
    CHECK_FALSE(solve(IntMatrix::from_rows({{2}}), {Int(3)}).has_value());
}

TEST_CASE("solve underdetermined") {
    IntMatrix a = IntMatrix::from_rows({{2, 3}});
    auto x = solve(a, {Int(1)});
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == std::vector<Int>{1});
}

TEST_CASE("solve randomized consistency") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
        std::size_t m = 1 + t % 4, n = 1 + (t / 2) % 4;
        IntMatrix a = random_matrix(rng, m, n, -6, 6);
        if (t % 2 == 0) {
            // solvable instance by construction
            IntMatrix xs = random_matrix(rng, n, 1, -5, 5);
            std::vector<Int> b = a.apply(xs.col(0));
            auto x = solve(a, b);
            REQUIRE(x.has_value());
            CHECK(a.apply(*x) == b);
        } else {
            std::vector<Int> b = random_matrix(rng, m, 1, -9, 9).col(0);
            auto x = solve(a, b);
            if (x)
                CHECK(a.apply(*x) == b);
        }
    }
}

TEST_CASE("complete_to_basis identity prefix") {
    IntMatrix w(3, 2);
    w(0, 0) = 1;
    w(1, 1) = 1;
    CHECK(complete_to_basis(w) == IntMatrix::identity(3));
}

TEST_CASE("complete_to_basis primitive column") {
    IntMatrix w = IntMatrix::from_rows({{1}, {1}});
    IntMatrix p = complete_to_basis(w);
    CHECK(is_unimodular(p));
    CHECK(p(0, 0) == 1);
    CHECK(p(1, 0) == 1);
}

TEST_CASE("complete_to_basis rejects imprimitive input") {
    IntMatrix w = IntMatrix::from_rows({{2}, {0}});
    CHECK_THROWS_AS(complete_to_basis(w), NotPrimitive);
}

TEST_CASE("complete_to_basis randomized") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 2 + t % 4;
        std::size_t k = 1 + t % n;
        IntMatrix q = testutil::random_unimodular(rng, n, 20, 30);
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < k; ++j)
            idx.push_back(j);
        IntMatrix w = q.columns(idx);
        IntMatrix p = complete_to_basis(w);
        CHECK(is_unimodular(p));
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < n; ++i)
                CHECK(p(i, j) == w(i, j));
    }
}

TEST_CASE("f2 rank of all-ones") {
    IntMatrix s = IntMatrix::from_rows({{0, 1}, {1, 0}});
    F2Matrix m = f2_reduce(IntMatrix::identity(2) + s);
    CHECK(f2_rank(m) == 1);
}

TEST_CASE("f2 complement of zero subspace") {
    F2Matrix v(3, 0);
    CHECK(f2_complement(v) == F2Matrix::identity(3));
}

TEST_CASE("f2 complement of a line") {
    F2Matrix v(2, 1);
    v(0, 0) = 1;
    v(1, 0) = 1;
    F2Matrix w = f2_complement(v);
    REQUIRE(w.cols() == 1);
    // complement of span{(1,1)} by a standard vector
    CHECK(((w(0, 0) == 0 && w(1, 0) == 1) || (w(0, 0) == 1 && w(1, 0) == 0)));
}

TEST_CASE("f2 complement rejects dependent generators") {
    F2Matrix v(2, 2);
    v(0, 0) = 1;
    v(0, 1) = 1;
    CHECK_THROWS_AS(f2_complement(v), DependentGenerators);
}

TEST_CASE("f2 complement randomized direct sum") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 1 + t % 6;
        F2Matrix v(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                v(i, j) = static_cast<std::uint8_t>(bit(rng));
        // keep an independent subset of the random columns
        F2Matrix red = f2_row_reduce(v);
        std::vector<std::size_t> pivots;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (red(i, j)) {
                    pivots.push_back(j);
                    break;
                }
        F2Matrix ind(n, pivots.size());
        for (std::size_t c = 0; c < pivots.size(); ++c)
            for (std::size_t i = 0; i < n; ++i)
                ind(i, c) = v(i, pivots[c]);
        F2Matrix w = f2_complement(ind);
        CHECK(ind.cols() + w.cols() == n);
        F2Matrix joint(n, n);
        for (std::size_t c = 0; c < ind.cols(); ++c)
            for (std::size_t i = 0; i < n; ++i)
                joint(i, c) = ind(i, c);
        for (std::size_t c = 0; c < w.cols(); ++c)
            for (std::size_t i = 0; i < n; ++i)
                joint(i, ind.cols() + c) = w(i, c);
        CHECK(f2_rank(joint) == n);
    }
}

TEST_CASE("lattice intersect basics") {
    IntMatrix a = IntMatrix::from_rows({{2, 0}, {0, 1}});
    IntMatrix b = IntMatrix::from_rows({{1, 0}, {0, 3}});
    IntMatrix c = lattice_intersect(a, b);
    CHECK(lattice_equal(c, IntMatrix::from_rows({{2, 0}, {0, 3}})));
}

TEST_CASE("matrix json round trip") {
    IntMatrix a = IntMatrix::from_rows({{1, -2}, {0, 7}});
    a(1, 1) = Int("123456789012345678901234567890");
    auto j = matrix_to_json(a);
    CHECK(j["entries"][1][1] == "123456789012345678901234567890");
    CHECK(matrix_from_json(j) == a);
    // plain integers accepted on input
    nlohmann::json plain = {
        {"rows", 1}, {"cols", 2}, {"entries", {{1, -4}}}};
    CHECK(matrix_from_json(plain) == IntMatrix::from_rows({{1, -4}}));
}
