#include "resolve/certificate.hpp"

#include "exactla/lattice.hpp"
#include "exactla/matrix_json.hpp"
#include "exactla/normal_form.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace resolve {

using exactla::hcat;
using exactla::IntMatrix;
using exactla::lattice_equal;
using exactla::matrix_from_json;
using exactla::matrix_to_json;
using exactla::snf_divisors;

namespace {

bool in_relations(const IntMatrix &relations, const std::vector<Int> &v) {
    bool zero = true;
    for (const Int &e : v)
        if (e != 0) {
            zero = false;
            break;
        }
    if (zero)
        return true;
    return relations.cols() > 0 && exactla::solve(relations, v).has_value();
}

std::string type_name(z2mod::SummandType t) {
    switch (t) {
    case z2mod::SummandType::T1:
        return "T1";
    case z2mod::SummandType::T2:
        return "T2";
    default:
        return "T3";
    }
}

} // namespace

ResolutionCertificate certificate(const Presentation &p, std::uint64_t seed) {
    FreeCover cover = free_cover(p);
    KernelModule kernel = kernel_module(p, cover);
    z2mod::Decomposition dec =
        z2mod::decompose(kernel.action, {.seed = seed});
    IntMatrix gens = kernel.embedding * dec.p; // summand generators in N

    std::vector<SummandTuple> tuples;
    std::size_t col = 0;
    auto read_pair = [&](std::size_t c, std::size_t coord) {
        return std::make_pair(gens(2 * coord, c), gens(2 * coord + 1, c));
    };
    for (std::size_t i = 0; i < dec.mult.n1; ++i, ++col) {
        SummandTuple t{z2mod::SummandType::T1, {}, {}};
        for (std::size_t j = 0; j < cover.rank; ++j)
            t.k.push_back(read_pair(col, j).first);
        tuples.push_back(std::move(t));
    }
    for (std::size_t i = 0; i < dec.mult.n2; ++i, ++col) {
        SummandTuple t{z2mod::SummandType::T2, {}, {}};
        for (std::size_t j = 0; j < cover.rank; ++j)
            t.k.push_back(read_pair(col, j).first);
        tuples.push_back(std::move(t));
    }
    for (std::size_t i = 0; i < dec.mult.n3; ++i, col += 2) {
        SummandTuple t{z2mod::SummandType::T3, {}, {}};
        for (std::size_t j = 0; j < cover.rank; ++j) {
            auto [k, l] = read_pair(col, j);
            t.k.push_back(k);
            t.l.push_back(l);
        }
        tuples.push_back(std::move(t));
    }
    return {std::move(cover), std::move(kernel), std::move(dec),
            std::move(tuples)};
}

support::CheckReport verify_certificate(const Presentation &p,
                                        const ResolutionCertificate &cert) {
    support::CheckReport report;
    auto run = [&](const std::string &name, std::function<bool()> fn,
                   const std::string &detail = "") {
        try {
            report.add(name, fn(), detail);
        } catch (const std::exception &e) {
            report.add(name, false, e.what());
        }
    };

    const IntMatrix &emb = cert.kernel.embedding;
    const IntMatrix &tau = cert.cover.tau;
    IntMatrix s_n = cover_swap_action(cert.cover.rank);

    run("embedding-injective", [&] {
        return exactla::rank(emb) == emb.cols() &&
               emb.rows() == 2 * cert.cover.rank;
    });
    run("tau-kills-kernel", [&] {
        IntMatrix image = tau * emb;
        for (std::size_t j = 0; j < image.cols(); ++j)
            if (!in_relations(p.relations, image.col(j)))
                return false;
        return true;
    });
    run("tau-surjective", [&] {
        for (const Int &d : snf_divisors(hcat(tau, p.relations)))
            if (d != 1)
                return false;
        return true;
    });
    run("kernel-exact", [&] {
        KernelModule direct = kernel_module(p, cert.cover);
        return lattice_equal(direct.embedding, emb);
    });
    run("tau-equivariant", [&] {
        IntMatrix diff = tau * s_n - p.gamma * tau;
        for (std::size_t j = 0; j < diff.cols(); ++j)
            if (!in_relations(p.relations, diff.col(j)))
                return false;
        return true;
    });
    run("cokernel-matches-presentation", [&] {
        // Torsion divisors and free ranks of Z^2g / M and Z^g / col(R).
        std::vector<Int> lhs, rhs;
        std::size_t lhs_nonzero = 0, rhs_nonzero = 0;
        for (const Int &d : snf_divisors(emb)) {
            if (d != 0)
                ++lhs_nonzero;
            if (d != 0 && d != 1)
                lhs.push_back(d);
        }
        for (const Int &d : snf_divisors(p.relations)) {
            if (d != 0)
                ++rhs_nonzero;
            if (d != 0 && d != 1)
                rhs.push_back(d);
        }
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        std::size_t lhs_free = 2 * cert.cover.rank - lhs_nonzero;
        std::size_t rhs_free = p.generators - rhs_nonzero;
        return lhs == rhs && lhs_free == rhs_free;
    });
    run("decomposition-valid", [&] {
        return z2mod::verify_decomposition(cert.kernel.action, cert.dec);
    });
    run("summand-actions", [&] {
        IntMatrix gens = emb * cert.dec.p;
        std::size_t col = 0;
        for (std::size_t i = 0; i < cert.dec.mult.n1; ++i, ++col)
            if (s_n.apply(gens.col(col)) != gens.col(col))
                return false;
        for (std::size_t i = 0; i < cert.dec.mult.n2; ++i, ++col) {
            std::vector<Int> m = gens.col(col);
            std::vector<Int> sm = s_n.apply(m);
            for (std::size_t r = 0; r < m.size(); ++r)
                if (sm[r] != -m[r])
                    return false;
        }
        for (std::size_t i = 0; i < cert.dec.mult.n3; ++i, col += 2) {
            IntMatrix pair = hcat(exactla::column_matrix(gens.col(col)),
                                  exactla::column_matrix(
                                      s_n.apply(gens.col(col))));
            if (exactla::rank(pair) != 2)
                return false;
        }
        return true;
    });
    run("tuples-match-generators", [&] {
        IntMatrix gens = emb * cert.dec.p;
        std::size_t g = cert.cover.rank;
        std::size_t col = 0;
        std::size_t idx = 0;
        auto coord = [&](std::size_t c, std::size_t j) {
            return std::make_pair(gens(2 * j, c), gens(2 * j + 1, c));
        };
        if (cert.tuples.size() !=
            cert.dec.mult.n1 + cert.dec.mult.n2 + cert.dec.mult.n3)
            return false;
        for (std::size_t i = 0; i < cert.dec.mult.n1; ++i, ++col, ++idx) {
            const SummandTuple &t = cert.tuples[idx];
            if (t.type != z2mod::SummandType::T1 || t.k.size() != g)
                return false;
            for (std::size_t j = 0; j < g; ++j) {
                auto [k, l] = coord(col, j);
                if (t.k[j] != k || l != k)
                    return false;
            }
        }
        for (std::size_t i = 0; i < cert.dec.mult.n2; ++i, ++col, ++idx) {
            const SummandTuple &t = cert.tuples[idx];
            if (t.type != z2mod::SummandType::T2 || t.k.size() != g)
                return false;
            for (std::size_t j = 0; j < g; ++j) {
                auto [k, l] = coord(col, j);
                if (t.k[j] != k || l != -k)
                    return false;
            }
        }
        for (std::size_t i = 0; i < cert.dec.mult.n3; ++i, col += 2, ++idx) {
            const SummandTuple &t = cert.tuples[idx];
            if (t.type != z2mod::SummandType::T3 || t.k.size() != g ||
                t.l.size() != g)
                return false;
            for (std::size_t j = 0; j < g; ++j) {
                auto [k, l] = coord(col, j);
                if (t.k[j] != k || t.l[j] != l)
                    return false;
            }
        }
        return true;
    });
    return report;
}

std::vector<Int> cokernel_divisors(const ResolutionCertificate &cert) {
    return snf_divisors(cert.kernel.embedding);
}

namespace {

std::string unitary(const Int &e) { return "u^" + e.get_str(); }

} // namespace

std::vector<std::string> render_summands(const ResolutionCertificate &cert) {
    std::vector<std::string> out;
    std::size_t t1 = 0, t2 = 0, t3 = 0;
    for (const SummandTuple &t : cert.tuples) {
        std::ostringstream os;
        std::ostringstream gen, uni;
        bool first = true;
        for (std::size_t j = 0; j < t.k.size(); ++j) {
            Int k = t.k[j];
            Int l = t.type == z2mod::SummandType::T1   ? k
                    : t.type == z2mod::SummandType::T2 ? Int(-k)
                                                       : t.l[j];
            if (k == 0 && l == 0)
                continue;
            if (!first) {
                gen << " + ";
                uni << ", ";
            }
            first = false;
            gen << "(" << k.get_str() << (l >= 0 ? " + " : " - ")
                << Int(abs(l)).get_str() << " s) b" << j + 1;
            uni << "coord " << j + 1 << ": (" << unitary(k) << ", "
                << unitary(l) << ")";
        }
        if (first) {
            gen << "0";
            uni << "none";
        }
        switch (t.type) {
        case z2mod::SummandType::T1:
            os << "T1 summand " << ++t1;
            break;
        case z2mod::SummandType::T2:
            os << "T2 summand " << ++t2;
            break;
        default:
            os << "T3 summand " << ++t3;
            break;
        }
        os << ": generator " << gen.str() << " | unitaries " << uni.str();
        if (t.type == z2mod::SummandType::T3)
            os << " and the swapped pair";
        out.push_back(os.str());
    }
    return out;
}

nlohmann::ordered_json presentation_to_json(const Presentation &p) {
    nlohmann::ordered_json j;
    j["generators"] = p.generators;
    j["relations"] = matrix_to_json(p.relations);
    j["gamma"] = matrix_to_json(p.gamma);
    return j;
}

Presentation presentation_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("generators") ||
        !j.contains("relations") || !j.contains("gamma"))
        throw std::invalid_argument(
            "presentation json must have generators, relations, gamma");
    Presentation p;
    p.generators = j.at("generators").get<std::size_t>();
    p.relations = matrix_from_json(j.at("relations"));
    p.gamma = matrix_from_json(j.at("gamma"));
    if (p.relations.rows() != p.generators && p.relations.cols() != 0)
        throw std::invalid_argument("relation matrix height mismatch");
    if (p.relations.cols() == 0)
        p.relations = IntMatrix(p.generators, 0);
    return p;
}

nlohmann::ordered_json certificate_to_json(const ResolutionCertificate &c) {
    nlohmann::ordered_json j;
    j["rank"] = c.cover.rank;
    j["tau"] = matrix_to_json(c.cover.tau);
    j["embedding"] = matrix_to_json(c.kernel.embedding);
    j["kernel_action"] = matrix_to_json(c.kernel.action.s());
    nlohmann::ordered_json dec;
    dec["n1"] = c.dec.mult.n1;
    dec["n2"] = c.dec.mult.n2;
    dec["n3"] = c.dec.mult.n3;
    dec["P"] = matrix_to_json(c.dec.p);
    j["decomposition"] = std::move(dec);
    nlohmann::ordered_json tuples = nlohmann::ordered_json::array();
    for (const SummandTuple &t : c.tuples) {
        nlohmann::ordered_json tj;
        tj["type"] = type_name(t.type);
        nlohmann::ordered_json k = nlohmann::ordered_json::array();
        for (const Int &e : t.k)
            k.push_back(e.get_str());
        tj["k"] = std::move(k);
        if (t.type == z2mod::SummandType::T3) {
            nlohmann::ordered_json l = nlohmann::ordered_json::array();
            for (const Int &e : t.l)
                l.push_back(e.get_str());
            tj["l"] = std::move(l);
        }
        tuples.push_back(std::move(tj));
    }
    j["tuples"] = std::move(tuples);
    nlohmann::ordered_json div = nlohmann::ordered_json::array();
    for (const Int &d : cokernel_divisors(c))
        div.push_back(d.get_str());
    j["cokernel_divisors"] = std::move(div);
    j["render"] = render_summands(c);
    return j;
}

} // namespace resolve
