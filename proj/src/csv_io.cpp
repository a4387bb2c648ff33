#include "ihte/csv_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ihte/types.hpp"

namespace ihte {

std::string format_g15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // strip surrounding whitespace
    const auto a = field.find_first_not_of(" \t\r");
    const auto b = field.find_last_not_of(" \t\r");
    out.push_back(a == std::string::npos ? std::string() : field.substr(a, b - a + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size();
}

}  // namespace

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io, "cannot open " + path.string());

  CsvTable table;
  std::string line;
  std::size_t row_number = 0;
  bool first_data_row = true;
  while (std::getline(in, line)) {
    ++row_number;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = split_fields(line);

    if (first_data_row && table.header.empty()) {
      double probe;
      if (!parse_double(fields[0], probe)) {
        table.header = fields;
        continue;
      }
    }
    if (first_data_row) {
      table.columns.assign(fields.size(), {});
      first_data_row = false;
    }
    if (fields.size() != table.columns.size())
      fail(errc::io, path.string() + ": row " + std::to_string(row_number) + " has " +
                         std::to_string(fields.size()) + " fields, expected " +
                         std::to_string(table.columns.size()));
    for (std::size_t c = 0; c < fields.size(); ++c) {
      double v;
      if (!parse_double(fields[c], v) || !std::isfinite(v))
        fail(errc::io, path.string() + ": row " + std::to_string(row_number) +
                           " contains a non-numeric or non-finite entry '" + fields[c] + "'");
      table.columns[c].push_back(v);
    }
  }
  return table;
}

void write_csv(const std::filesystem::path& path, const std::string& header,
               const std::vector<const std::vector<double>*>& columns) {
  if (columns.empty()) fail(errc::invalid_argument, "write_csv: no columns");
  const std::size_t n = columns[0]->size();
  for (const auto* col : columns)
    if (col->size() != n) fail(errc::invalid_argument, "write_csv: column lengths differ");

  std::ofstream out(path);
  if (!out) fail(errc::io, "cannot write " + path.string());
  out << header << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out << ',';
      out << format_g15((*columns[c])[i]);
    }
    out << '\n';
  }
  if (!out) fail(errc::io, "failed while writing " + path.string());
}

}  // namespace ihte
