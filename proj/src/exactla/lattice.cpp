#include "exactla/lattice.hpp"
#include "exactla/normal_form.hpp"

namespace exactla {

IntMatrix lattice_basis(const IntMatrix &gens) {
    HnfResult r = hnf(gens.transpose());
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < r.h.rows(); ++i)
        for (std::size_t j = 0; j < r.h.cols(); ++j)
            if (r.h(i, j) != 0) {
                keep.push_back(i);
                break;
            }
    IntMatrix basis(gens.rows(), keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c)
        for (std::size_t i = 0; i < gens.rows(); ++i)
            basis(i, c) = r.h(keep[c], i);
    return basis;
}

IntMatrix lattice_intersect(const IntMatrix &a, const IntMatrix &b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("lattice_intersect: ambient mismatch");
    if (a.cols() == 0 || b.cols() == 0)
        return IntMatrix(a.rows(), 0);
    // x in both lattices iff a y = b z for some y, z; project kernel pairs.
    IntMatrix stacked = hcat(a, -b);
    IntMatrix k = kernel_basis(stacked);
    IntMatrix top(a.cols(), k.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j)
            top(i, j) = k(i, j);
    return lattice_basis(a * top);
}

bool lattice_contains(const IntMatrix &basis, const std::vector<Int> &v) {
    return solve(basis, v).has_value();
}

bool lattice_equal(const IntMatrix &a, const IntMatrix &b) {
    return lattice_basis(a) == lattice_basis(b);
}

} // namespace exactla
