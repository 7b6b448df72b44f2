#include "table_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tqgate::cli {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(std::ostream& out, const OutputTable& table) {
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) out << ',';
        out << table.header[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            switch (row[i].kind) {
                case Cell::Kind::number: out << format_number(row[i].number); break;
                case Cell::Kind::text: out << row[i].text; break;
                case Cell::Kind::empty: break;
            }
        }
        out << '\n';
    }
}

void write_json(std::ostream& out, const OutputTable& table) {
    nlohmann::json root;
    root["columns"] = table.header;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& cell : row) {
            switch (cell.kind) {
                case Cell::Kind::number: r.push_back(cell.number); break;
                case Cell::Kind::text: r.push_back(cell.text); break;
                case Cell::Kind::empty: r.push_back(nullptr); break;
            }
        }
        rows.push_back(std::move(r));
    }
    root["rows"] = std::move(rows);
    out << root.dump(2) << '\n';
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

OutputTable read_csv(std::istream& in) {
    OutputTable table;
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("csv: missing header");
    table.header = split_line(line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<Cell> row;
        for (const auto& field : split_line(line)) {
            if (field.empty()) {
                row.push_back(Cell::none());
                continue;
            }
            char* end = nullptr;
            const double v = std::strtod(field.c_str(), &end);
            if (end != field.c_str() && *end == '\0')
                row.push_back(Cell::num(v));
            else
                row.push_back(Cell::str(field));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace tqgate::cli
