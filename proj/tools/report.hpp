#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace lamecn::cli {

/// One output cell: null, a real, an integer, or a boolean.
using Value = std::variant<std::monostate, double, long long, bool>;

struct Column {
    std::string name;
    Value value;
};

using Row = std::vector<Column>;

/// Fixed 12-significant-digit rendering, identical in CSV and JSON so the
/// two formats carry the same numbers.
std::string format_number(double v);

std::string format_value_csv(const Value& v);

/// Header from the first row's column names; booleans as true/false,
/// null as an empty field; '\n' line endings.
void write_csv(std::ostream& os, const std::vector<Row>& rows);

/// Array of objects with the same field names and number rendering.
void write_json(std::ostream& os, const std::vector<Row>& rows);

}  // namespace lamecn::cli
