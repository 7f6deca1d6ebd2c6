#include <CLI11.hpp>
#include <json.hpp>

#include "exactla/matrix_json.hpp"
#include "exactla/normal_form.hpp"
#include "resolve/certificate.hpp"
#include "staralg/hom.hpp"
#include "staralg/parse.hpp"
#include "z2mod/involution.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitVerificationFailed = 3;

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoFailure("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

nlohmann::json read_json(const std::string &path) {
    try {
        return nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error &e) {
        throw IoFailure("json parse error in " + path + ": " + e.what());
    }
}

void emit(const nlohmann::ordered_json &doc, const std::string &format,
          const std::string &text) {
    if (format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

nlohmann::ordered_json report_json(const support::CheckReport &report) {
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const auto &item : report.items) {
        nlohmann::ordered_json entry;
        entry["name"] = item.name;
        entry["pass"] = item.pass;
        if (!item.detail.empty())
            entry["detail"] = item.detail;
        items.push_back(std::move(entry));
    }
    return items;
}

std::string report_text(const support::CheckReport &report) {
    std::ostringstream os;
    for (const auto &item : report.items) {
        os << (item.pass ? "pass" : "FAIL") << "  " << item.name;
        if (!item.detail.empty())
            os << "  (" << item.detail << ")";
        os << "\n";
    }
    return os.str();
}

int cmd_multiplicities(const std::string &path, const std::string &format) {
    z2mod::Involution inv(exactla::matrix_from_json(read_json(path)));
    z2mod::Multiplicities m = z2mod::multiplicities(inv);
    exactla::Int trace = 0;
    for (std::size_t i = 0; i < inv.n(); ++i)
        trace += inv.s()(i, i);
    nlohmann::ordered_json doc;
    doc["n1"] = m.n1;
    doc["n2"] = m.n2;
    doc["n3"] = m.n3;
    doc["rank"] = inv.n();
    doc["trace"] = trace.get_str();
    std::ostringstream os;
    os << "n1=" << m.n1 << " n2=" << m.n2 << " n3=" << m.n3 << "\n";
    os << "rank: " << m.n1 << " + " << m.n2 << " + 2*" << m.n3 << " = "
       << inv.n() << "\n";
    os << "trace: " << m.n1 << " - " << m.n2 << " = " << trace.get_str()
       << "\n";
    emit(doc, format, os.str());
    return kExitOk;
}

int cmd_decompose(const std::string &path, std::uint64_t seed,
                  const std::string &format) {
    z2mod::Involution inv(exactla::matrix_from_json(read_json(path)));
    z2mod::Decomposition dec = z2mod::decompose(inv, {.seed = seed});
    bool ok = z2mod::verify_decomposition(inv, dec);
    nlohmann::ordered_json doc;
    doc["n1"] = dec.mult.n1;
    doc["n2"] = dec.mult.n2;
    doc["n3"] = dec.mult.n3;
    doc["P"] = exactla::matrix_to_json(dec.p);
    doc["verified"] = ok;
    std::ostringstream os;
    os << "n1=" << dec.mult.n1 << " n2=" << dec.mult.n2
       << " n3=" << dec.mult.n3 << "\n";
    os << "P = " << dec.p.to_string() << "\n";
    os << "verified: " << (ok ? "true" : "false") << "\n";
    emit(doc, format, os.str());
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_resolve(const std::string &path, std::uint64_t seed,
                const std::string &format) {
    resolve::Presentation p =
        resolve::presentation_from_json(read_json(path));
    resolve::ResolutionCertificate cert = resolve::certificate(p, seed);
    support::CheckReport report = resolve::verify_certificate(p, cert);
    nlohmann::ordered_json doc = resolve::certificate_to_json(cert);
    doc["checks"] = report_json(report);
    doc["all_pass"] = report.all_pass();
    std::ostringstream os;
    os << "free cover rank: " << cert.cover.rank << "\n";
    os << "kernel rank: " << cert.kernel.embedding.cols() << "\n";
    os << "multiplicities: n1=" << cert.dec.mult.n1
       << " n2=" << cert.dec.mult.n2 << " n3=" << cert.dec.mult.n3 << "\n";
    for (const std::string &line : resolve::render_summands(cert))
        os << line << "\n";
    os << report_text(report);
    emit(doc, format, os.str());
    return report.all_pass() ? kExitOk : kExitVerificationFailed;
}

int cmd_star_eval(const std::string &path, int r, int n, std::size_t term_cap,
                  const std::string &format) {
    std::string contents = read_file(path);
    nlohmann::ordered_json lines = nlohmann::ordered_json::array();
    std::ostringstream os;
    std::istringstream in(contents);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = line.substr(0, line.find('#'));
        if (stripped.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        staralg::StarPoly value = staralg::parse(stripped, r, n);
        staralg::StarPoly normal = staralg::normalize(value, term_cap);
        nlohmann::ordered_json entry;
        entry["line"] = lineno;
        entry["input"] = stripped;
        entry["normal_form"] = normal.to_string();
        lines.push_back(std::move(entry));
        os << lineno << ": " << normal.to_string() << "\n";
    }
    nlohmann::ordered_json doc;
    doc["r"] = r;
    doc["n"] = n;
    doc["lines"] = std::move(lines);
    emit(doc, format, os.str());
    return kExitOk;
}

int cmd_verify_hom(const std::string &source, const std::string &mutate,
                   std::size_t term_cap, const std::string &format) {
    staralg::GeneratorMap map;
    if (source == "example5")
        map = staralg::example5();
    else
        map = staralg::generator_map_from_json(read_json(source));
    if (!mutate.empty())
        staralg::apply_mutation(map, mutate);
    support::CheckReport relations = staralg::verify_relations(map, term_cap);
    support::CheckReport involutive =
        staralg::verify_involutive(map, term_cap);
    bool ok = relations.all_pass() && involutive.all_pass();
    nlohmann::ordered_json doc;
    doc["r"] = map.r;
    doc["n"] = map.n;
    doc["relations"] = report_json(relations);
    doc["involutive"] = report_json(involutive);
    doc["all_pass"] = ok;
    std::ostringstream os;
    os << "relations:\n" << report_text(relations);
    os << "involutivity:\n" << report_text(involutive);
    os << (ok ? "all checks passed" : "verification failed") << "\n";
    emit(doc, format, os.str());
    return ok ? kExitOk : kExitVerificationFailed;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact toolkit for integer involutions, group-ring "
                 "resolutions, and symbolic Cuntz-algebra verification"};
    app.require_subcommand(1);

    std::string format = "text";
    std::uint64_t seed = 0;
    std::size_t term_cap = staralg::kDefaultTermCap;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized repair search")
        ->capture_default_str();
    app.add_option("--term-cap", term_cap,
                   "maximum term count during normalization")
        ->capture_default_str();

    std::string mult_path;
    auto *mult = app.add_subcommand("multiplicities",
                                    "summand multiplicities of an integer "
                                    "involution");
    mult->add_option("matrix", mult_path, "matrix json file")->required();

    std::string dec_path;
    auto *dec = app.add_subcommand("decompose",
                                   "canonical decomposition of an integer "
                                   "involution");
    dec->add_option("matrix", dec_path, "matrix json file")->required();

    std::string res_path;
    auto *res = app.add_subcommand("resolve",
                                   "free-cover resolution certificate of a "
                                   "presented group with involution");
    res->add_option("presentation", res_path, "presentation json file")
        ->required();

    std::string eval_path;
    int eval_r = 3, eval_n = 4;
    auto *eval = app.add_subcommand("star-eval",
                                    "normal forms of expressions, one per "
                                    "line");
    eval->add_option("file", eval_path, "expression file")->required();
    eval->add_option("--matrix-size", eval_r, "matrix factor size r")
        ->capture_default_str();
    eval->add_option("--cuntz-index", eval_n, "Cuntz factor index n")
        ->capture_default_str();

    std::string hom_source, mutate;
    auto *hom = app.add_subcommand("verify-hom",
                                   "relation and involutivity checks for a "
                                   "generator map");
    hom->add_option("map", hom_source,
                    "generator map json file, or the builtin name example5")
        ->required();
    hom->add_option("--mutate", mutate, "apply a named table mutation first");

    CLI11_PARSE(app, argc, argv);

    try {
        if (mult->parsed())
            return cmd_multiplicities(mult_path, format);
        if (dec->parsed())
            return cmd_decompose(dec_path, seed, format);
        if (res->parsed())
            return cmd_resolve(res_path, seed, format);
        if (eval->parsed())
            return cmd_star_eval(eval_path, eval_r, eval_n, term_cap, format);
        if (hom->parsed())
            return cmd_verify_hom(hom_source, mutate, term_cap, format);
    } catch (const IoFailure &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const z2mod::NotInvolution &e) {
        std::cerr << "error: not an involution: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const resolve::InvalidPresentation &e) {
        std::cerr << "error: invalid presentation: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const staralg::SyntaxError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const staralg::IndexError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const staralg::DimensionMismatch &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const staralg::TermLimitExceeded &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitOk;
}
