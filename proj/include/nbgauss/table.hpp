#ifndef NBGAUSS_TABLE_HPP
#define NBGAUSS_TABLE_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace nbgauss {

enum class OutputFormat { csv, json };

/// A table cell; monostate renders as an empty CSV field or JSON null.
using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;
using Row = std::vector<Cell>;

/// Column-major result table written as CSV or JSON.
///
/// CSV: header line, one line per row, then the summary row if present.
/// Doubles use the shortest representation that round-trips; non-finite
/// values are written as nan / inf / -inf.
///
/// JSON: {"columns": [...], "rows": [{column: value, ...}], "summary": {...}}
/// with "summary" present only when set. Non-finite doubles become null.
struct Table {
    std::vector<std::string> columns;
    std::vector<Row> rows;
    std::optional<Row> summary;

    /// Throws std::invalid_argument if the row width differs from columns.
    void add_row(Row row);

    void write(std::ostream& out, OutputFormat format) const;
};

/// Shortest round-trip decimal form of x.
std::string format_double(double x);

}  // namespace nbgauss

#endif  // NBGAUSS_TABLE_HPP
