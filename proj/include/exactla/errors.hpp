#pragma once

#include <stdexcept>
#include <string>

namespace exactla {

// Input columns do not extend to a basis (an SNF divisor differs from 1).
struct NotPrimitive : std::runtime_error {
    explicit NotPrimitive(const std::string &what) : std::runtime_error(what) {}
};

// f2_complement called with dependent generator columns.
struct DependentGenerators : std::runtime_error {
    explicit DependentGenerators(const std::string &what)
        : std::runtime_error(what) {}
};

} // namespace exactla
