#include "untrapped/csv.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "untrapped/errors.hpp"

namespace untrapped {

const std::vector<double>& CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return data[i];
  throw ParseError("/" + name, "missing CSV column");
}

static std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    // trim whitespace
    auto b = cell.find_first_not_of(" \t\r");
    auto e = cell.find_last_not_of(" \t\r");
    cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  return cells;
}

CsvTable read_csv(std::istream& in, const std::string& origin) {
  CsvTable table;
  std::string line;
  std::size_t lineno = 0;
  bool header_done = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto cells = split_row(line);
    if (cells.empty()) continue;
    if (!header_done) {
      // first row may be a header or data
      bool numeric = true;
      for (const auto& c : cells) {
        char* end = nullptr;
        std::strtod(c.c_str(), &end);
        if (end == c.c_str() || *end != '\0') numeric = false;
      }
      header_done = true;
      if (!numeric) {
        table.columns = cells;
        table.data.assign(cells.size(), {});
        continue;
      }
      table.columns.resize(cells.size());
      for (std::size_t i = 0; i < cells.size(); ++i) table.columns[i] = "c" + std::to_string(i);
      table.data.assign(cells.size(), {});
    }
    if (cells.size() != table.columns.size())
      throw ParseError(origin + ":" + std::to_string(lineno), "ragged CSV row");
    for (std::size_t i = 0; i < cells.size(); ++i) {
      char* end = nullptr;
      const double v = std::strtod(cells[i].c_str(), &end);
      if (end == cells[i].c_str() || *end != '\0')
        throw ParseError(origin + ":" + std::to_string(lineno), "non-numeric CSV cell '" + cells[i] + "'");
      table.data[i].push_back(v);
    }
  }
  if (table.rows() == 0) throw ParseError(origin, "empty CSV");
  return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), "cannot open file");
  return read_csv(in, path.string());
}

void write_csv(std::ostream& out, const CsvTable& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "," : "") << table.columns[i];
  out << "\n";
  char buf[64];
  for (std::size_t row = 0; row < table.rows(); ++row) {
    for (std::size_t i = 0; i < table.data.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", table.data[i][row]);
      out << (i ? "," : "") << buf;
    }
    out << "\n";
  }
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
  std::ofstream out(path);
  if (!out) throw ParseError(path.string(), "cannot open file for writing");
  write_csv(out, table);
}

}  // namespace untrapped
