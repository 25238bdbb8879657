#pragma once

// Minimal reader for the comma-separated inputs: header row required,
// columns addressed by name, no quoting.

#include <fstream>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "taf/error.hpp"
#include "taf/params.hpp"

namespace taf::csv {

struct Row {
  int line = 0;
  std::vector<std::string> cells;
};

class Table {
 public:
  Table(std::string source, std::vector<std::string> header,
        std::vector<Row> rows)
      : source_(std::move(source)),
        header_(std::move(header)),
        rows_(std::move(rows)) {}

  const std::string& source() const { return source_; }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<std::string>& header() const { return header_; }

  // Throws naming the column when it is absent from the header.
  std::size_t column(std::string_view name) const {
    for (std::size_t i = 0; i < header_.size(); ++i) {
      if (header_[i] == name) return i;
    }
    throw ModelError(ErrorKind::kParse, source_ + ": missing column '" +
                                            std::string(name) + "' in header");
  }

  double number(const Row& row, std::size_t col) const {
    double v = 0.0;
    if (!taf::detail::parse_double(row.cells[col], v)) {
      throw ModelError(ErrorKind::kParse,
                       where(row) + ": column '" + header_[col] +
                           "' is not a number: '" + row.cells[col] + "'");
    }
    return v;
  }

  std::string where(const Row& row) const {
    return source_ + ":" + std::to_string(row.line);
  }

 private:
  std::string source_;
  std::vector<std::string> header_;
  std::vector<Row> rows_;
};

inline bool is_blank(std::string_view line) {
  return taf::detail::trim(line).empty();
}

inline std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    const auto cell = line.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    cells.emplace_back(taf::detail::trim(cell));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

inline Table parse(std::istream& in, std::string source) {
  std::string line;
  int lineno = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++lineno;
    if (!is_blank(line)) {
      header = split(line);
      break;
    }
  }
  if (header.empty()) {
    throw ModelError(ErrorKind::kParse, source + ": missing header row");
  }
  // Strip a UTF-8 byte order mark.
  if (header[0].rfind("\xEF\xBB\xBF", 0) == 0) header[0].erase(0, 3);

  std::vector<Row> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    auto cells = split(line);
    if (cells.size() != header.size()) {
      throw ModelError(ErrorKind::kParse,
                       source + ":" + std::to_string(lineno) + ": expected " +
                           std::to_string(header.size()) + " fields, got " +
                           std::to_string(cells.size()));
    }
    rows.push_back({lineno, std::move(cells)});
  }
  return Table(std::move(source), std::move(header), std::move(rows));
}

inline Table read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ModelError(ErrorKind::kIo, "cannot open '" + path + "'");
  }
  return parse(in, path);
}

}  // namespace taf::csv
