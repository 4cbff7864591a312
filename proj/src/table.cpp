#include "viscoex/table.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include <json.hpp>

#include "viscoex/errors.hpp"

namespace viscoex {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("row width does not match the table header");
    }
    rows.push_back(std::move(row));
}

std::string format_number(double value) {
    std::array<char, 64> buffer{};
    const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    if (ec != std::errc{}) {
        throw NumericalError("number formatting failed");
    }
    return {buffer.data(), end};
}

void require_finite(const Table& table) {
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (const double* x = std::get_if<double>(&row[c]); x && !std::isfinite(*x)) {
                throw NumericalError("non-finite value in column " + table.columns[c]);
            }
        }
    }
}

std::string to_csv(const Table& table) {
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out += (c ? "," : "") + table.columns[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) {
                out += ',';
            }
            if (const double* x = std::get_if<double>(&row[c])) {
                out += format_number(*x);
            } else if (const std::string* s = std::get_if<std::string>(&row[c])) {
                out += *s;
            }
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& table) {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json object = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) {
            const std::string& key = table.columns[c];
            if (const double* x = std::get_if<double>(&row[c])) {
                object[key] = *x;
            } else if (const std::string* s = std::get_if<std::string>(&row[c])) {
                object[key] = *s;
            } else {
                object[key] = nullptr;
            }
        }
        array.push_back(std::move(object));
    }
    return array.dump(2) + "\n";
}

}  // namespace viscoex
