#pragma once

#include "resolve/presentation.hpp"
#include "support/check_report.hpp"

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

namespace resolve {

// Exponent data of one canonical summand of the kernel module, read off
// from the generator's N-coordinates as k_j + l_j s per module coordinate.
struct SummandTuple {
    z2mod::SummandType type = z2mod::SummandType::T1;
    std::vector<Int> k;
    std::vector<Int> l; // populated for T3 only
};

struct ResolutionCertificate {
    FreeCover cover;
    KernelModule kernel;
    z2mod::Decomposition dec;
    std::vector<SummandTuple> tuples;
};

ResolutionCertificate certificate(const Presentation &p,
                                  std::uint64_t seed = 0);

// Checks, exactly: the embedding is an injection with the expected rank,
// tau induces an isomorphism N / M -> G intertwining the involutions, the
// decomposition is valid, and the stored tuples match the decomposition.
support::CheckReport verify_certificate(const Presentation &p,
                                        const ResolutionCertificate &cert);

// Torsion data of coker(M -> N): nontrivial SNF divisors of the embedding.
std::vector<Int> cokernel_divisors(const ResolutionCertificate &cert);

// Human-readable summand descriptions (one line per summand).
std::vector<std::string> render_summands(const ResolutionCertificate &cert);

nlohmann::ordered_json presentation_to_json(const Presentation &p);
Presentation presentation_from_json(const nlohmann::json &j);
nlohmann::ordered_json certificate_to_json(const ResolutionCertificate &cert);

} // namespace resolve
