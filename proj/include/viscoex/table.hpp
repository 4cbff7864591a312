#pragma once

#include <string>
#include <variant>
#include <vector>

namespace viscoex {

/// Blank (monostate), numeric, or text cell.
using Cell = std::variant<std::monostate, double, std::string>;

/// Column-named rows, rendered as CSV or as a JSON array of row objects.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

/// Shortest decimal string that parses back to exactly `value`.
std::string format_number(double value);

/// Throws NumericalError if any numeric cell is NaN or infinite.
void require_finite(const Table& table);

/// Header line plus one line per row, LF endings, blank cells left empty.
std::string to_csv(const Table& table);

/// JSON array of objects keyed by column name, blank cells as null.
std::string to_json(const Table& table);

}  // namespace viscoex
