#include "pipeclimb/csvio.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pipeclimb/types.hpp"

namespace pipeclimb {

std::string csv_num(double v) {
    if (!std::isfinite(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string to_csv(const CsvTable& table) {
    std::ostringstream out;
    auto emit_row = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << row[i];
        }
        out << '\n';
    };
    emit_row(table.header);
    for (const auto& row : table.rows) emit_row(row);
    return out.str();
}

CsvTable parse_csv(const std::string& text) {
    CsvTable t;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() && in.eof()) break;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.push_back("");
        if (first) {
            t.header = cells;
            first = false;
        } else {
            t.rows.push_back(cells);
        }
    }
    return t;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << text;
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace pipeclimb
