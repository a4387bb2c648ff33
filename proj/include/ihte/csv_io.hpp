#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace ihte {

/// Numeric value rendered with 15 significant digits.
std::string format_g15(double v);

struct CsvTable {
  std::vector<std::string> header;  // empty when the file has no header row
  std::vector<std::vector<double>> columns;

  std::size_t rows() const { return columns.empty() ? 0 : columns[0].size(); }
};

/// Reads a comma-separated numeric table. A non-numeric first row is taken
/// as the header. Non-finite or unparsable entries raise an io error naming
/// the offending row.
CsvTable read_csv(const std::filesystem::path& path);

/// Writes columns of equal length under the given comma-separated header.
void write_csv(const std::filesystem::path& path, const std::string& header,
               const std::vector<const std::vector<double>*>& columns);

}  // namespace ihte
