#include "nbgauss/table.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace nbgauss {

std::string format_double(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, x);
    return std::string(buffer, result.ptr);
}

void Table::add_row(Row row) {
    if (row.size() != columns.size()) {
        throw std::invalid_argument("Table: row width does not match the header");
    }
    rows.push_back(std::move(row));
}

namespace {

std::string csv_field(const Cell& cell) {
    struct Visitor {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(double x) const { return format_double(x); }
        std::string operator()(std::int64_t x) const { return std::to_string(x); }
        std::string operator()(bool x) const { return x ? "true" : "false"; }
        std::string operator()(const std::string& s) const { return s; }
    };
    return std::visit(Visitor{}, cell);
}

void write_csv_line(std::ostream& out, const Row& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << csv_field(row[i]);
    }
    out << '\n';
}

nlohmann::ordered_json json_value(const Cell& cell) {
    struct Visitor {
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        nlohmann::ordered_json operator()(double x) const {
            return std::isfinite(x) ? nlohmann::ordered_json(x) : nlohmann::ordered_json(nullptr);
        }
        nlohmann::ordered_json operator()(std::int64_t x) const { return x; }
        nlohmann::ordered_json operator()(bool x) const { return x; }
        nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    };
    return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json json_row(const std::vector<std::string>& columns, const Row& row) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < columns.size(); ++i) {
        obj[columns[i]] = json_value(row[i]);
    }
    return obj;
}

}  // namespace

void Table::write(std::ostream& out, OutputFormat format) const {
    if (format == OutputFormat::csv) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            out << (i > 0 ? "," : "") << columns[i];
        }
        out << '\n';
        for (const auto& row : rows) {
            write_csv_line(out, row);
        }
        if (summary) {
            write_csv_line(out, *summary);
        }
        return;
    }
    nlohmann::ordered_json doc;
    doc["columns"] = columns;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        doc["rows"].push_back(json_row(columns, row));
    }
    if (summary) {
        doc["summary"] = json_row(columns, *summary);
    }
    out << doc.dump(2) << '\n';
}

}  // namespace nbgauss
