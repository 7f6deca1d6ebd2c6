#include "resolve/presentation.hpp"

#include "exactla/lattice.hpp"
#include "exactla/normal_form.hpp"

namespace resolve {

using exactla::solve;
using exactla::solve_columns;

namespace {

// Membership of every column of m in the relation lattice.
bool columns_in_relations(const IntMatrix &relations, const IntMatrix &m) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::vector<Int> v = m.col(j);
        bool zero = true;
        for (const Int &e : v)
            if (e != 0) {
                zero = false;
                break;
            }
        if (zero)
            continue;
        if (relations.cols() == 0 || !solve(relations, v))
            return false;
    }
    return true;
}

} // namespace

bool validate_presentation(const Presentation &p) {
    std::size_t g = p.generators;
    if (p.gamma.rows() != g || p.gamma.cols() != g)
        return false;
    if (p.relations.rows() != g && p.relations.cols() != 0)
        return false;
    if (!columns_in_relations(p.relations, p.gamma * p.relations))
        return false;
    IntMatrix sq = p.gamma * p.gamma - IntMatrix::identity(g);
    return columns_in_relations(p.relations, sq);
}

FreeCover free_cover(const Presentation &p) {
    if (!validate_presentation(p))
        throw InvalidPresentation("gamma is not an order-two automorphism "
                                  "of the presented group");
    std::size_t g = p.generators;
    IntMatrix tau(g, 2 * g);
    for (std::size_t i = 0; i < g; ++i) {
        tau(i, 2 * i) = 1;
        for (std::size_t r = 0; r < g; ++r)
            tau(r, 2 * i + 1) = p.gamma(r, i);
    }
    return {g, std::move(tau)};
}

IntMatrix cover_swap_action(std::size_t rank) {
    IntMatrix s(2 * rank, 2 * rank);
    for (std::size_t i = 0; i < rank; ++i) {
        s(2 * i, 2 * i + 1) = 1;
        s(2 * i + 1, 2 * i) = 1;
    }
    return s;
}

KernelModule kernel_module(const Presentation &p, const FreeCover &c) {
    // x lies in the kernel iff tau x is a relation combination.
    IntMatrix stacked = exactla::hcat(c.tau, -p.relations);
    IntMatrix k = exactla::kernel_basis(stacked);
    IntMatrix top(2 * c.rank, k.cols());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j)
            top(i, j) = k(i, j);
    IntMatrix embedding = exactla::lattice_basis(top);
    IntMatrix s_n = cover_swap_action(c.rank);
    auto s_m = solve_columns(embedding, s_n * embedding);
    if (!s_m)
        throw std::logic_error("kernel is not swap-invariant");
    return {z2mod::Involution(*s_m), std::move(embedding)};
}

} // namespace resolve
