#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace fsqm::cli {

using Cell = std::variant<std::monostate, bool, long long, double, std::string>;

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

/// Shortest decimal string that parses back to the same double.
/// Non-finite values become "inf", "-inf" and "nan".
std::string format_number(double x);

/// Inverse of format_number (also accepts anything std::from_chars does).
double parse_number(const std::string& text);

std::string to_csv(const Table& table);

/// {"columns": [...], "rows": [[...], ...]}; non-finite doubles use the
/// same strings as the CSV so that both files carry identical values.
nlohmann::json to_json(const Table& table);
Table table_from_json(const std::string& name, const nlohmann::json& j);

/// Write through a sibling temporary file and rename it into place.
void atomic_write(const std::filesystem::path& path, const std::string& contents);

} // namespace fsqm::cli
