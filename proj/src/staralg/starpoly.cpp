#include "staralg/starpoly.hpp"

#include <algorithm>
#include <sstream>

namespace staralg {

namespace {

bool is_prefix(const std::vector<int> &p, const std::vector<int> &w) {
    if (p.size() > w.size())
        return false;
    return std::equal(p.begin(), p.end(), w.begin());
}

} // namespace

bool Word::mul(const Word &a, const Word &b, Word &out) {
    if (a.k != b.j)
        return false;
    // contract s_nu^* s_mu' along the shorter of the two
    if (is_prefix(a.nu, b.mu)) {
        out.j = a.j;
        out.k = b.k;
        out.mu = a.mu;
        out.mu.insert(out.mu.end(), b.mu.begin() + a.nu.size(), b.mu.end());
        out.nu = b.nu;
        return true;
    }
    if (is_prefix(b.mu, a.nu)) {
        out.j = a.j;
        out.k = b.k;
        out.mu = a.mu;
        out.nu = b.nu;
        out.nu.insert(out.nu.end(), a.nu.begin() + b.mu.size(), a.nu.end());
        return true;
    }
    return false;
}

StarPoly StarPoly::unit(int r, int n) {
    StarPoly p(r, n);
    for (int j = 1; j <= r; ++j)
        p.add_term({j, j, {}, {}}, 1);
    return p;
}

StarPoly StarPoly::matrix_unit(int r, int n, int j, int k) {
    StarPoly p(r, n);
    if (j < 1 || j > r || k < 1 || k > r)
        throw IndexError("matrix unit index out of range");
    p.add_term({j, k, {}, {}}, 1);
    return p;
}

StarPoly StarPoly::isometry(int r, int n, int m) {
    if (m < 1 || m > n)
        throw IndexError("isometry index out of range");
    StarPoly p(r, n);
    for (int j = 1; j <= r; ++j)
        p.add_term({j, j, {m}, {}}, 1);
    return p;
}

StarPoly StarPoly::word(int r, int n, const Word &w, Int coeff) {
    StarPoly p(r, n);
    if (w.j < 1 || w.j > r || w.k < 1 || w.k > r)
        throw IndexError("matrix unit index out of range");
    for (int m : w.mu)
        if (m < 1 || m > n)
            throw IndexError("isometry index out of range");
    for (int m : w.nu)
        if (m < 1 || m > n)
            throw IndexError("isometry index out of range");
    p.add_term(w, coeff);
    return p;
}

void StarPoly::add_term(const Word &w, const Int &coeff) {
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

StarPoly StarPoly::operator+(const StarPoly &o) const {
    require_same_algebra(o);
    StarPoly out = *this;
    for (const auto &[w, c] : o.terms_)
        out.add_term(w, c);
    return out;
}

StarPoly StarPoly::operator-(const StarPoly &o) const {
    require_same_algebra(o);
    StarPoly out = *this;
    for (const auto &[w, c] : o.terms_)
        out.add_term(w, -c);
    return out;
}

StarPoly StarPoly::operator-() const {
    StarPoly out(r_, n_);
    for (const auto &[w, c] : terms_)
        out.terms_.emplace(w, -c);
    return out;
}

StarPoly StarPoly::scaled(const Int &c) const {
    StarPoly out(r_, n_);
    if (c == 0)
        return out;
    for (const auto &[w, coeff] : terms_)
        out.terms_.emplace(w, c * coeff);
    return out;
}

StarPoly StarPoly::operator*(const StarPoly &o) const {
    require_same_algebra(o);
    StarPoly out(r_, n_);
    Word prod;
    for (const auto &[a, ca] : terms_)
        for (const auto &[b, cb] : o.terms_)
            if (Word::mul(a, b, prod))
                out.add_term(prod, ca * cb);
    return out;
}

StarPoly adjoint(const StarPoly &p) {
    StarPoly out(p.r(), p.n());
    for (const auto &[w, c] : p.terms())
        out.add_term(w.adjoint(), c);
    return out;
}

StarPoly mul(const StarPoly &p, const StarPoly &q) { return p * q; }
StarPoly add(const StarPoly &p, const StarPoly &q) { return p + q; }

std::string StarPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[w, c] : terms_) {
        Int mag = abs(c);
        if (first) {
            if (c < 0)
                os << "- ";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool printed_factor = false;
        if (mag != 1) {
            os << mag.get_str();
            printed_factor = true;
        }
        if (!(r_ == 1 && w.j == 1 && w.k == 1)) {
            if (printed_factor)
                os << " ";
            os << "e[" << w.j << "," << w.k << "]";
            printed_factor = true;
        }
        for (int m : w.mu) {
            if (printed_factor)
                os << " ";
            os << "s[" << m << "]";
            printed_factor = true;
        }
        for (auto it = w.nu.rbegin(); it != w.nu.rend(); ++it) {
            if (printed_factor)
                os << " ";
            os << "s[" << *it << "]*";
            printed_factor = true;
        }
        if (!printed_factor)
            os << "1";
    }
    return os.str();
}

namespace {

struct ClassKey {
    int j;
    int k;
    int degree;
    auto operator<=>(const ClassKey &) const = default;
};

} // namespace

StarPoly normalize(const StarPoly &p, std::size_t term_cap) {
    std::map<ClassKey, std::map<Word, Int>> classes;
    for (const auto &[w, c] : p.terms())
        classes[{w.j, w.k, w.degree()}][w] = c;

    StarPoly out(p.r(), p.n());
    int n = p.n();
    for (auto &[key, terms] : classes) {
        std::size_t level = 0;
        for (const auto &[w, c] : terms)
            level = std::max(level, w.mu.size());
        // Expand every word up to the class level; the unit relation
        // s_mu s_nu^* = sum_i s_mu.i s_nu.i^* preserves the degree.
        std::map<Word, Int> expanded;
        for (const auto &[w, c] : terms) {
            std::vector<Word> frontier{w};
            for (std::size_t l = w.mu.size(); l < level; ++l) {
                std::vector<Word> next;
                next.reserve(frontier.size() * n);
                for (const Word &f : frontier)
                    for (int i = 1; i <= n; ++i) {
                        Word e = f;
                        e.mu.push_back(i);
                        e.nu.push_back(i);
                        next.push_back(std::move(e));
                    }
                frontier = std::move(next);
                if (frontier.size() > term_cap)
                    throw TermLimitExceeded(
                        "normalization exceeded the term cap");
            }
            for (Word &f : frontier) {
                auto [it, inserted] = expanded.try_emplace(std::move(f), c);
                if (!inserted) {
                    it->second += c;
                    if (it->second == 0)
                        expanded.erase(it);
                }
            }
            if (expanded.size() > term_cap)
                throw TermLimitExceeded("normalization exceeded the term cap");
        }
        // Recombine complete blocks bottom-up: if all n same-tail children
        // of a shorter word appear with one coefficient, replace them.
        for (std::size_t l = level; l >= 1; --l) {
            std::map<Word, std::vector<std::map<Word, Int>::iterator>>
                families;
            for (auto it = expanded.begin(); it != expanded.end(); ++it) {
                const Word &w = it->first;
                if (w.mu.size() != l || w.nu.empty() ||
                    w.mu.back() != w.nu.back())
                    continue;
                Word parent = w;
                parent.mu.pop_back();
                parent.nu.pop_back();
                families[std::move(parent)].push_back(it);
            }
            for (auto &[parent, members] : families) {
                if (members.size() != static_cast<std::size_t>(n))
                    continue;
                const Int &c = members.front()->second;
                bool uniform = true;
                for (const auto &it : members)
                    if (it->second != c) {
                        uniform = false;
                        break;
                    }
                if (!uniform)
                    continue;
                Int coeff = c;
                for (const auto &it : members)
                    expanded.erase(it);
                auto [pit, inserted] = expanded.try_emplace(parent, coeff);
                if (!inserted) {
                    pit->second += coeff;
                    if (pit->second == 0)
                        expanded.erase(pit);
                }
            }
        }
        for (const auto &[w, c] : expanded)
            out.add_term(w, c);
        if (out.term_count() > term_cap)
            throw TermLimitExceeded("normalization exceeded the term cap");
    }
    return out;
}

bool equal(const StarPoly &p, const StarPoly &q, std::size_t term_cap) {
    if (p.r() != q.r() || p.n() != q.n())
        throw DimensionMismatch("operands live in different algebras");
    return normalize(p - q, term_cap).is_zero();
}

} // namespace staralg
