#include "fsqm/cli/table.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace fsqm::cli {

void Table::add_row(std::vector<Cell> row)
{
    if (row.size() != columns.size()) throw std::logic_error("table " + name + ": row width mismatch");
    rows.push_back(std::move(row));
}

std::string format_number(double x)
{
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc{}) throw std::runtime_error("format_number: to_chars failed");
    return {buf, end};
}

double parse_number(const std::string& text)
{
    if (text == "nan") return std::nan("");
    if (text == "inf") return HUGE_VAL;
    if (text == "-inf") return -HUGE_VAL;
    double x = 0.0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
    if (ec != std::errc{} || end != text.data() + text.size()) {
        throw std::invalid_argument("parse_number: not a number: '" + text + "'");
    }
    return x;
}

namespace {

std::string quote(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

struct CsvCell {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(const std::string& s) const { return quote(s); }
};

struct JsonCell {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(bool b) const { return b; }
    nlohmann::json operator()(long long v) const { return v; }
    nlohmann::json operator()(double v) const
    {
        if (std::isfinite(v)) return v;
        return format_number(v);
    }
    nlohmann::json operator()(const std::string& s) const { return s; }
};

} // namespace

std::string to_csv(const Table& table)
{
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += quote(table.columns[i]);
    }
    out += "\r\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += std::visit(CsvCell{}, row[i]);
        }
        out += "\r\n";
    }
    return out;
}

nlohmann::json to_json(const Table& table)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& c : row) r.push_back(std::visit(JsonCell{}, c));
        rows.push_back(std::move(r));
    }
    return {{"columns", table.columns}, {"rows", std::move(rows)}};
}

Table table_from_json(const std::string& name, const nlohmann::json& j)
{
    Table t;
    t.name = name;
    t.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& r : j.at("rows")) {
        std::vector<Cell> row;
        for (const auto& c : r) {
            if (c.is_null()) row.emplace_back(std::monostate{});
            else if (c.is_boolean()) row.emplace_back(c.get<bool>());
            else if (c.is_number_integer()) row.emplace_back(c.get<long long>());
            else if (c.is_number()) row.emplace_back(c.get<double>());
            else row.emplace_back(c.get<std::string>());
        }
        t.add_row(std::move(row));
    }
    return t;
}

void atomic_write(const std::filesystem::path& path, const std::string& contents)
{
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        os << contents;
        os.flush();
        if (!os) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot move " + tmp.string() + " into place: " + ec.message());
    }
}

} // namespace fsqm::cli
