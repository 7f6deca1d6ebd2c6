#include "exactla/matrix_json.hpp"

namespace exactla {

nlohmann::ordered_json matrix_to_json(const IntMatrix &m) {
    nlohmann::ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(i, c).get_str());
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

IntMatrix matrix_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
        !j.contains("entries"))
        throw std::invalid_argument(
            "matrix json must have rows, cols, entries");
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const auto &entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows)
        throw std::invalid_argument("entries row count mismatch");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto &row = entries.at(i);
        if (!row.is_array() || row.size() != cols)
            throw std::invalid_argument("entries column count mismatch");
        for (std::size_t c = 0; c < cols; ++c) {
            const auto &cell = row.at(c);
            if (cell.is_string()) {
                const std::string s = cell.get<std::string>();
                if (mpz_set_str(m(i, c).get_mpz_t(), s.c_str(), 10) != 0)
                    throw std::invalid_argument("bad integer literal: " + s);
            } else if (cell.is_number_integer()) {
                m(i, c) = Int(static_cast<long>(cell.get<long long>()));
            } else {
                throw std::invalid_argument(
                    "matrix entries must be decimal strings or integers");
            }
        }
    }
    return m;
}

} // namespace exactla
