#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tqgate::cli {

// Output row model shared by the CSV and JSON writers. Numbers are written
// with 17 significant digits so either format round-trips losslessly; the
// CSV is locale-independent ('.' decimal, '\n' newlines, header always
// present). Empty cells mark skipped schemes in comparison tables.

struct Cell {
    enum class Kind { number, text, empty };
    Kind kind = Kind::empty;
    double number = 0.0;
    std::string text;

    static Cell num(double v) { return Cell{Kind::number, v, {}}; }
    static Cell str(std::string s) { return Cell{Kind::text, 0.0, std::move(s)}; }
    static Cell none() { return Cell{}; }
};

struct OutputTable {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
};

std::string format_number(double v); // %.17g, C locale

void write_csv(std::ostream& out, const OutputTable& table);
void write_json(std::ostream& out, const OutputTable& table);

// Parses a CSV produced by write_csv (for round-trip checks and tooling).
OutputTable read_csv(std::istream& in);

} // namespace tqgate::cli
