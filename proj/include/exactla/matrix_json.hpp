#pragma once

#include "exactla/intmatrix.hpp"

#include <json.hpp>

namespace exactla {

// Shared wire format: {"rows": n, "cols": m, "entries": [["..",".."],..]}
// with entries as decimal strings. Plain JSON integers are accepted on
// input for convenience; output always uses strings.
nlohmann::ordered_json matrix_to_json(const IntMatrix &m);
IntMatrix matrix_from_json(const nlohmann::json &j);

} // namespace exactla
