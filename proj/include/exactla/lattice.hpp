#pragma once

#include "exactla/intmatrix.hpp"

namespace exactla {

// Canonical basis (column-HNF, zero columns dropped) of the lattice spanned
// by the columns of gens.
IntMatrix lattice_basis(const IntMatrix &gens);

// Basis of the intersection of the lattices spanned by the columns of a
// and b inside the same ambient Z^n.
IntMatrix lattice_intersect(const IntMatrix &a, const IntMatrix &b);

bool lattice_contains(const IntMatrix &basis, const std::vector<Int> &v);

// Same span test via canonical bases.
bool lattice_equal(const IntMatrix &a, const IntMatrix &b);

} // namespace exactla
