#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace untrapped {

/// Numeric CSV table with a single header row.
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> data;  // data[c][row]

  const std::vector<double>& column(const std::string& name) const;
  std::size_t rows() const { return data.empty() ? 0 : data.front().size(); }
};

CsvTable read_csv(const std::filesystem::path& path);
CsvTable read_csv(std::istream& in, const std::string& origin = "<stream>");

void write_csv(std::ostream& out, const CsvTable& table);
void write_csv(const std::filesystem::path& path, const CsvTable& table);

}  // namespace untrapped
