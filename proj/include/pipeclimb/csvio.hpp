#pragma once

#include <string>
#include <vector>

namespace pipeclimb {

/// In-memory CSV table. Cells are preformatted strings; numeric cells use
/// 6 significant digits so files are byte-reproducible across runs.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Format a double with 6 significant digits ("%.6g"); NaN becomes "".
std::string csv_num(double v);

std::string to_csv(const CsvTable& table);
CsvTable parse_csv(const std::string& text);

/// Write text to path; throws IoError on failure.
void write_file(const std::string& path, const std::string& text);

}  // namespace pipeclimb
