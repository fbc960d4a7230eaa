#include "collectivity_cli/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace collectivity::cli {

std::string format_sci(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.11e", value);
    return buf;
}

double parse_sci(const std::string& text) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str()) throw IoError("CSV: not a number: '" + text + "'");
    return v;
}

double quantize(double value) { return parse_sci(format_sci(value)); }

std::string format_compact(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", value);
    return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::string& comment,
                     const std::string& header)
    : path_(path) {
    buffer_ += "# " + comment + "\n";
    buffer_ += header + "\n";
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) buffer_ += ',';
        buffer_ += cells[i];
    }
    buffer_ += '\n';
}

void CsvWriter::close() {
    if (closed_) return;
    std::ofstream out(path_, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path_.string());
    out.write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
    out.flush();
    if (!out) throw IoError("write failed: " + path_.string());
    closed_ = true;
}

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open CSV file: " + path.string());
    CsvTable table;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            table.comment = line.size() > 2 ? line.substr(2) : "";
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!have_header) {
            table.columns = cells;
            have_header = true;
        } else {
            table.rows.push_back(cells);
        }
    }
    return table;
}

}  // namespace collectivity::cli
