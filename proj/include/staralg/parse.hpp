#pragma once

#include "staralg/starpoly.hpp"

#include <string_view>

namespace staralg {

struct SyntaxError : std::runtime_error {
    SyntaxError(const std::string &what, std::size_t position)
        : std::runtime_error(what + " at position " +
                             std::to_string(position)),
          pos(position) {}
    std::size_t pos;
};

// Expression grammar: atoms `1`, `0`, integer literals, `e[j,k]`, `s[m]`;
// postfix `*` is the adjoint; juxtaposition or `·` multiplies; `+`/`-` add;
// parentheses group. A bare `s[m]` means 1 (x) s_m and a bare `e[j,k]`
// means e_{j,k} (x) 1. `#` starts a comment.
StarPoly parse(std::string_view text, int r, int n);

} // namespace staralg
