#include "report.hpp"

#include <cstdio>

namespace lamecn::cli {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string format_value_csv(const Value& v) {
    if (std::holds_alternative<std::monostate>(v)) {
        return "";
    }
    if (const double* d = std::get_if<double>(&v)) {
        return format_number(*d);
    }
    if (const long long* i = std::get_if<long long>(&v)) {
        char buf[24];
        std::snprintf(buf, sizeof buf, "%lld", *i);
        return buf;
    }
    return std::get<bool>(v) ? "true" : "false";
}

void write_csv(std::ostream& os, const std::vector<Row>& rows) {
    if (rows.empty()) {
        return;
    }
    for (std::size_t c = 0; c < rows.front().size(); ++c) {
        if (c) os << ',';
        os << rows.front()[c].name;
    }
    os << '\n';
    for (const Row& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ',';
            os << format_value_csv(row[c].value);
        }
        os << '\n';
    }
}

void write_json(std::ostream& os, const std::vector<Row>& rows) {
    os << "[\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        os << "  {";
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c) os << ',';
            os << '"' << rows[r][c].name << "\":";
            const Value& v = rows[r][c].value;
            if (std::holds_alternative<std::monostate>(v)) {
                os << "null";
            } else {
                os << format_value_csv(v);
            }
        }
        os << '}';
        if (r + 1 < rows.size()) os << ',';
        os << '\n';
    }
    os << "]\n";
}

}  // namespace lamecn::cli
