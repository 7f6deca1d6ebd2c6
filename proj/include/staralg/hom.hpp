#pragma once

#include "staralg/starpoly.hpp"
#include "support/check_report.hpp"

#include <json.hpp>
#include <vector>

namespace staralg {

// Homomorphism of M_r (x) O_n given on the generating table: images of
// e[j,j]x1 for all j, e[1,j]x1 for j >= 2, and e[1,1]xs[m] for all m.
// Every other generator image is derived by adjoints and products.
struct GeneratorMap {
    int r = 1;
    int n = 1;
    std::vector<StarPoly> diag;    // diag[j-1] = image of e[j,j]x1
    std::vector<StarPoly> offdiag; // offdiag[j-2] = image of e[1,j]x1
    std::vector<StarPoly> iso;     // iso[m-1] = image of e[1,1]xs[m]

    static GeneratorMap identity(int r, int n);
};

// Names of the defining generators, in report order.
std::vector<std::string> generator_names(int r, int n);
StarPoly generator_element(int r, int n, std::size_t index);

// Linear multiplicative extension over basis words:
// phi(e_{j,k} (x) s_mu s_nu^*) =
//   phi(e_{j,1}) prod_t phi(e_{1,1} s_{mu_t})
//   (prod_t phi(e_{1,1} s_{nu_t}))^* phi(e_{1,k}),
// with phi(e_{j,1}) = adjoint(phi(e_{1,j})).
StarPoly apply_hom(const GeneratorMap &map, const StarPoly &p,
                   std::size_t term_cap = kDefaultTermCap);

// The homomorphism checklist: the diagonal images are orthogonal
// projections summing to 1, the row images are partial isometries with the
// right supports, the isometry images share the initial projection and
// their ranges sum to it, plus matrix-unit compatibility relations.
support::CheckReport verify_relations(const GeneratorMap &map,
                                      std::size_t term_cap = kDefaultTermCap);

// phi(phi(g)) = g for every defining generator.
support::CheckReport verify_involutive(const GeneratorMap &map,
                                       std::size_t term_cap = kDefaultTermCap);

// Built-in order-two homomorphism table of M_3 (x) O_4.
GeneratorMap example5();

// Named single-table mutations used as verification test hooks.
std::vector<std::string> mutation_names();
void apply_mutation(GeneratorMap &map, const std::string &name);

// JSON object mapping generator names ("e[1,2]x1", "e[1,1]xs[3]") to
// expression strings; r and n are inferred from the key set.
GeneratorMap generator_map_from_json(const nlohmann::json &j);
nlohmann::ordered_json generator_map_to_json(const GeneratorMap &map);

} // namespace staralg
