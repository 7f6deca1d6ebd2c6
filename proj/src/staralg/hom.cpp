#include "staralg/hom.hpp"
#include "staralg/parse.hpp"

#include <algorithm>
#include <set>

namespace staralg {

GeneratorMap GeneratorMap::identity(int r, int n) {
    GeneratorMap m;
    m.r = r;
    m.n = n;
    for (int j = 1; j <= r; ++j)
        m.diag.push_back(StarPoly::matrix_unit(r, n, j, j));
    for (int j = 2; j <= r; ++j)
        m.offdiag.push_back(StarPoly::matrix_unit(r, n, 1, j));
    for (int i = 1; i <= n; ++i)
        m.iso.push_back(StarPoly::word(r, n, {1, 1, {i}, {}}));
    return m;
}

std::vector<std::string> generator_names(int r, int n) {
    std::vector<std::string> names;
    for (int j = 1; j <= r; ++j)
        names.push_back("e[" + std::to_string(j) + "," + std::to_string(j) +
                        "]x1");
    for (int j = 2; j <= r; ++j)
        names.push_back("e[1," + std::to_string(j) + "]x1");
    for (int m = 1; m <= n; ++m)
        names.push_back("e[1,1]xs[" + std::to_string(m) + "]");
    return names;
}

StarPoly generator_element(int r, int n, std::size_t index) {
    std::size_t ru = static_cast<std::size_t>(r);
    if (index < ru) {
        int j = static_cast<int>(index) + 1;
        return StarPoly::matrix_unit(r, n, j, j);
    }
    index -= ru;
    if (index + 2 <= ru) {
        int j = static_cast<int>(index) + 2;
        return StarPoly::matrix_unit(r, n, 1, j);
    }
    index -= ru - 1;
    return StarPoly::word(r, n, {1, 1, {static_cast<int>(index) + 1}, {}});
}

namespace {

const StarPoly &table_image(const GeneratorMap &map, std::size_t index) {
    std::size_t ru = static_cast<std::size_t>(map.r);
    if (index < ru)
        return map.diag[index];
    index -= ru;
    if (index < ru - 1)
        return map.offdiag[index];
    return map.iso[index - (ru - 1)];
}

StarPoly row_image(const GeneratorMap &map, int j) {
    // image of e[j,1]x1
    if (j == 1)
        return map.diag[0];
    return adjoint(map.offdiag[j - 2]);
}

StarPoly col_image(const GeneratorMap &map, int k) {
    // image of e[1,k]x1
    if (k == 1)
        return map.diag[0];
    return map.offdiag[k - 2];
}

} // namespace

StarPoly apply_hom(const GeneratorMap &map, const StarPoly &p,
                   std::size_t term_cap) {
    if (map.r != p.r() || map.n != p.n())
        throw DimensionMismatch("map and element live in different algebras");
    StarPoly out(p.r(), p.n());
    for (const auto &[w, c] : p.terms()) {
        StarPoly image = row_image(map, w.j);
        for (int m : w.mu)
            image = normalize(image * map.iso[m - 1], term_cap);
        StarPoly right = StarPoly::unit(p.r(), p.n());
        for (int m : w.nu)
            right = normalize(right * map.iso[m - 1], term_cap);
        image = normalize(image * adjoint(right), term_cap);
        image = normalize(image * col_image(map, w.k), term_cap);
        out = out + image.scaled(c);
        if (out.term_count() > term_cap)
            throw TermLimitExceeded("homomorphism image exceeded term cap");
    }
    return normalize(out, term_cap);
}

support::CheckReport verify_relations(const GeneratorMap &map,
                                      std::size_t term_cap) {
    support::CheckReport report;
    int r = map.r, n = map.n;
    auto name_f = [](int j, int k) {
        return "f[" + std::to_string(j) + "," + std::to_string(k) + "]";
    };
    const StarPoly &f11 = map.diag[0];
    for (int j = 1; j <= r; ++j) {
        const StarPoly &f = map.diag[j - 1];
        report.add(name_f(j, j) + "-idempotent", equal(f * f, f, term_cap));
        report.add(name_f(j, j) + "-selfadjoint",
                   equal(adjoint(f), f, term_cap));
    }
    for (int a = 1; a <= r; ++a)
        for (int b = a + 1; b <= r; ++b)
            report.add(name_f(a, a) + "*" + name_f(b, b) + "-orthogonal",
                       equal(map.diag[a - 1] * map.diag[b - 1],
                             StarPoly::zero(r, n), term_cap));
    {
        StarPoly sum = StarPoly::zero(r, n);
        for (const StarPoly &f : map.diag)
            sum = sum + f;
        report.add("projections-sum-to-1",
                   equal(sum, StarPoly::unit(r, n), term_cap));
    }
    for (int j = 2; j <= r; ++j) {
        const StarPoly &f1j = map.offdiag[j - 2];
        report.add(name_f(1, j) + "-range",
                   equal(f1j * adjoint(f1j), f11, term_cap));
        report.add(name_f(1, j) + "-support",
                   equal(adjoint(f1j) * f1j, map.diag[j - 1], term_cap));
        report.add(name_f(1, 1) + "*" + name_f(1, j) + "-compatible",
                   equal(f11 * f1j, f1j, term_cap));
        report.add(name_f(1, j) + "*" + name_f(j, j) + "-compatible",
                   equal(f1j * map.diag[j - 1], f1j, term_cap));
    }
    for (int m = 1; m <= n; ++m) {
        const StarPoly &v = map.iso[m - 1];
        std::string vn = "v[" + std::to_string(m) + "]";
        report.add(vn + "-isometry-on-" + name_f(1, 1),
                   equal(adjoint(v) * v, f11, term_cap));
        report.add(name_f(1, 1) + "*" + vn + "-compatible",
                   equal(f11 * v, v, term_cap));
        report.add(vn + "*" + name_f(1, 1) + "-compatible",
                   equal(v * f11, v, term_cap));
    }
    {
        StarPoly sum = StarPoly::zero(r, n);
        for (const StarPoly &v : map.iso)
            sum = sum + v * adjoint(v);
        report.add("ranges-sum-to-" + name_f(1, 1),
                   equal(sum, f11, term_cap));
    }
    return report;
}

support::CheckReport verify_involutive(const GeneratorMap &map,
                                       std::size_t term_cap) {
    support::CheckReport report;
    std::vector<std::string> names = generator_names(map.r, map.n);
    for (std::size_t i = 0; i < names.size(); ++i) {
        StarPoly g = generator_element(map.r, map.n, i);
        StarPoly twice = apply_hom(map, apply_hom(map, g, term_cap), term_cap);
        report.add("phi^2-fixes-" + names[i], equal(twice, g, term_cap));
    }
    return report;
}

GeneratorMap example5() {
    GeneratorMap m;
    m.r = 3;
    m.n = 4;
    auto e = [&](const char *text) { return parse(text, 3, 4); };
    m.diag.push_back(e("e[2,2] + e[3,3]"));
    m.diag.push_back(e("e[1,1] (s[1] s[1]* + s[2] s[2]*)"));
    m.diag.push_back(e("e[1,1] (s[3] s[3]* + s[4] s[4]*)"));
    m.offdiag.push_back(e("e[2,1] s[1]* + e[3,1] s[2]*"));
    m.offdiag.push_back(e("e[2,1] s[3]* + e[3,1] s[4]*"));
    m.iso.push_back(e("e[2,2] s[1] + e[2,3] s[2]"));
    m.iso.push_back(e("e[2,2] s[3] + e[2,3] s[4]"));
    m.iso.push_back(e("e[3,2] s[1] + e[3,3] s[2]"));
    m.iso.push_back(e("e[3,2] s[3] + e[3,3] s[4]"));
    return m;
}

std::vector<std::string> mutation_names() {
    return {"swap-v2-v3",   "negate-v1",    "adjoint-f12",
            "drop-f11-term", "swap-f22-f33", "retarget-v4"};
}

void apply_mutation(GeneratorMap &map, const std::string &name) {
    if (name == "swap-v2-v3") {
        std::swap(map.iso[1], map.iso[2]);
    } else if (name == "negate-v1") {
        map.iso[0] = -map.iso[0];
    } else if (name == "adjoint-f12") {
        map.offdiag[0] = adjoint(map.offdiag[0]);
    } else if (name == "drop-f11-term") {
        map.diag[0] = StarPoly::matrix_unit(map.r, map.n, 2, 2);
    } else if (name == "swap-f22-f33") {
        std::swap(map.diag[1], map.diag[2]);
    } else if (name == "retarget-v4") {
        map.iso[3] = parse("e[3,2] s[3] + e[3,3] s[3]", map.r, map.n);
    } else {
        throw std::invalid_argument("unknown mutation: " + name);
    }
}

GeneratorMap generator_map_from_json(const nlohmann::json &j) {
    if (!j.is_object())
        throw std::invalid_argument("generator map must be a json object");
    int r = 0, n = 0;
    for (const auto &[key, value] : j.items()) {
        (void)value;
        int a, b;
        if (std::sscanf(key.c_str(), "e[%d,%d]x1", &a, &b) == 2 &&
            key == "e[" + std::to_string(a) + "," + std::to_string(b) +
                       "]x1") {
            r = std::max({r, a, b});
        } else if (std::sscanf(key.c_str(), "e[1,1]xs[%d]", &a) == 1 &&
                   key == "e[1,1]xs[" + std::to_string(a) + "]") {
            n = std::max(n, a);
            r = std::max(r, 1);
        } else {
            throw std::invalid_argument("unrecognized generator name: " + key);
        }
    }
    if (r < 1 || n < 1)
        throw std::invalid_argument(
            "generator map must define matrix units and isometries");
    std::vector<std::string> names = generator_names(r, n);
    std::set<std::string> expected(names.begin(), names.end());
    std::set<std::string> given;
    for (const auto &[key, value] : j.items()) {
        (void)value;
        given.insert(key);
    }
    if (given != expected) {
        std::string msg = "generator set mismatch; expected exactly:";
        for (const std::string &s : names)
            msg += " " + s;
        throw std::invalid_argument(msg);
    }
    GeneratorMap map;
    map.r = r;
    map.n = n;
    for (int jj = 1; jj <= r; ++jj)
        map.diag.push_back(parse(
            j.at("e[" + std::to_string(jj) + "," + std::to_string(jj) + "]x1")
                .get<std::string>(),
            r, n));
    for (int jj = 2; jj <= r; ++jj)
        map.offdiag.push_back(
            parse(j.at("e[1," + std::to_string(jj) + "]x1").get<std::string>(),
                  r, n));
    for (int m = 1; m <= n; ++m)
        map.iso.push_back(
            parse(j.at("e[1,1]xs[" + std::to_string(m) + "]")
                      .get<std::string>(),
                  r, n));
    return map;
}

nlohmann::ordered_json generator_map_to_json(const GeneratorMap &map) {
    nlohmann::ordered_json j;
    std::vector<std::string> names = generator_names(map.r, map.n);
    for (std::size_t i = 0; i < names.size(); ++i)
        j[names[i]] = table_image(map, i).to_string();
    return j;
}

} // namespace staralg
