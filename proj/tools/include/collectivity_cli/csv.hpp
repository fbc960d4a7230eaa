#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace collectivity::cli {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Formats a number with 12 significant digits in scientific notation,
/// locale-independent. This is the one formatting used in every CSV, so
/// identical runs produce byte-identical files.
std::string format_sci(double value);

/// Parsing a formatted value and re-formatting it reproduces the string.
double parse_sci(const std::string& text);

/// Rounds to the value that format_sci round-trips to.
double quantize(double value);

/// Compact decimal rendering used in file names (e.g. 1250, 0.5).
std::string format_compact(double value);

class CsvWriter {
  public:
    CsvWriter(const std::filesystem::path& path, const std::string& comment,
              const std::string& header);
    void row(const std::vector<std::string>& cells);
    void close();  // flushes and checks stream state

  private:
    std::filesystem::path path_;
    std::string buffer_;
    bool closed_ = false;
};

struct CsvTable {
    std::string comment;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;  // raw cell strings
};

CsvTable read_csv(const std::filesystem::path& path);

}  // namespace collectivity::cli
