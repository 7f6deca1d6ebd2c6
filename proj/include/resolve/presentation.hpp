#pragma once

#include "exactla/intmatrix.hpp"
#include "z2mod/involution.hpp"

#include <stdexcept>

namespace resolve {

using exactla::Int;
using exactla::IntMatrix;

struct InvalidPresentation : std::runtime_error {
    explicit InvalidPresentation(const std::string &what)
        : std::runtime_error(what) {}
};

// Finitely presented abelian group G = Z^g / col(relations) together with
// an order-two automorphism given on generators.
struct Presentation {
    std::size_t generators = 0;
    IntMatrix relations; // g x r, columns are relators
    IntMatrix gamma;     // g x g
};

// True iff gamma preserves the relation lattice and squares to the
// identity modulo relations.
bool validate_presentation(const Presentation &p);

// Surjection from a free cover N = (Z[Z/2])^rank onto G. The Z-basis of N
// is ordered b1, s b1, b2, s b2, ...; tau records the image in G of each
// basis vector.
struct FreeCover {
    std::size_t rank = 0;
    IntMatrix tau; // g x (2 rank)
};

// Default cover with one module generator per group generator:
// b_i maps to the i-th generator, s b_i to gamma of it.
FreeCover free_cover(const Presentation &p);

// Action of the group-ring involution on the Z-basis of N.
IntMatrix cover_swap_action(std::size_t rank);

// Kernel of the composite N -> G with the induced involution expressed in
// the kernel's own basis; embedding records that basis in N-coordinates
// (column-HNF form, so the result is deterministic).
struct KernelModule {
    z2mod::Involution action;
    IntMatrix embedding; // 2 rank x dim(kernel)
};

KernelModule kernel_module(const Presentation &p, const FreeCover &c);

} // namespace resolve
