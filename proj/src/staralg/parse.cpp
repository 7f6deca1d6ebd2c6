#include "staralg/parse.hpp"

#include <cctype>

namespace staralg {

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    int r;
    int n;

    void skip_space() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '#') { // comment to end of line
                while (pos < text.size() && text[pos] != '\n')
                    ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
            } else {
                break;
            }
        }
    }

    bool at_end() {
        skip_space();
        return pos >= text.size();
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool consume(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    // UTF-8 middle dot as an explicit product sign.
    bool consume_dot() {
        skip_space();
        if (pos + 1 < text.size() &&
            static_cast<unsigned char>(text[pos]) == 0xC2 &&
            static_cast<unsigned char>(text[pos + 1]) == 0xB7) {
            pos += 2;
            return true;
        }
        return false;
    }

    void expect(char c, const char *what) {
        if (!consume(c))
            throw SyntaxError(std::string("expected ") + what, pos);
    }

    long integer() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw SyntaxError("expected integer", pos);
        return std::stol(std::string(text.substr(start, pos - start)));
    }

    bool starts_factor() {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'e' ||
               c == 's' || c == '(';
    }

    StarPoly atom() {
        skip_space();
        if (pos >= text.size())
            throw SyntaxError("unexpected end of expression", pos);
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = integer();
            return StarPoly::unit(r, n).scaled(v);
        }
        if (c == 'e') {
            ++pos;
            expect('[', "'[' after e");
            long j = integer();
            expect(',', "',' in e[j,k]");
            long k = integer();
            expect(']', "']' closing e[j,k]");
            if (j < 1 || j > r || k < 1 || k > r)
                throw IndexError("matrix unit index out of range: e[" +
                                 std::to_string(j) + "," + std::to_string(k) +
                                 "]");
            return StarPoly::matrix_unit(r, n, static_cast<int>(j),
                                         static_cast<int>(k));
        }
        if (c == 's') {
            ++pos;
            expect('[', "'[' after s");
            long m = integer();
            expect(']', "']' closing s[m]");
            if (m < 1 || m > n)
                throw IndexError("isometry index out of range: s[" +
                                 std::to_string(m) + "]");
            return StarPoly::isometry(r, n, static_cast<int>(m));
        }
        if (c == '(') {
            ++pos;
            StarPoly inner = expression();
            expect(')', "')'");
            return inner;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'",
                          pos);
    }

    StarPoly factor() {
        StarPoly f = atom();
        while (consume('*'))
            f = adjoint(f);
        return f;
    }

    StarPoly term() {
        StarPoly t = factor();
        for (;;) {
            if (consume_dot()) {
                t = t * factor();
                continue;
            }
            if (starts_factor()) {
                t = t * factor();
                continue;
            }
            break;
        }
        return t;
    }

    StarPoly expression() {
        bool negative = false;
        if (consume('-'))
            negative = true;
        else
            consume('+');
        StarPoly acc = term();
        if (negative)
            acc = -acc;
        for (;;) {
            if (consume('+')) {
                acc = acc + term();
            } else if (consume('-')) {
                acc = acc - term();
            } else {
                break;
            }
        }
        return acc;
    }
};

} // namespace

StarPoly parse(std::string_view text, int r, int n) {
    Parser p{text, 0, r, n};
    if (p.at_end())
        throw SyntaxError("empty expression", 0);
    StarPoly result = p.expression();
    if (!p.at_end())
        throw SyntaxError("trailing input", p.pos);
    return normalize(result);
}

} // namespace staralg
