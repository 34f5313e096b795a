#include "sgtail/cli/csv.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>

#include "sgtail/error.hpp"

namespace sgtail::cli {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  std::string out = s.substr(b, e - b);
  if (out.size() >= 2 && out.front() == '"' && out.back() == '"') out = out.substr(1, out.size() - 2);
  return out;
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') quoted = !quoted;
    if (c == ',' && !quoted) {
      cells.push_back(trim(cell));
      cell.clear();
    } else {
      cell += c;
    }
  }
  cells.push_back(trim(cell));
  return cells;
}

bool blank(const std::string& line) {
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<double> parse_number(const std::string& cell) {
  std::string text = trim(cell);
  if (!text.empty() && text.front() == '+') text.erase(0, 1);
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

CsvColumn read_csv_column(const std::string& path, const std::optional<std::string>& selector, bool strict) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");

  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank(line)) continue;
    rows.push_back(split_row(line));
    line_numbers.push_back(number);
  }
  if (rows.empty()) throw DataError("'" + path + "' has no rows");

  CsvColumn column;
  for (const auto& cell : rows.front()) {
    if (!parse_number(cell)) column.has_header = true;
  }
  const std::size_t first_data = column.has_header ? 1 : 0;

  if (selector) {
    bool found = false;
    if (column.has_header) {
      for (std::size_t c = 0; c < rows.front().size(); ++c) {
        if (rows.front()[c] == *selector) {
          column.index = c;
          found = true;
          break;
        }
      }
    }
    if (!found) {
      const auto idx = parse_number(*selector);
      if (!idx || *idx < 0 || *idx != static_cast<double>(static_cast<std::size_t>(*idx))) {
        throw DataError("no column named '" + *selector + "' in '" + path + "'");
      }
      column.index = static_cast<std::size_t>(*idx);
    }
  } else {
    if (first_data >= rows.size()) throw DataError("'" + path + "' has a header but no data rows");
    const auto& probe = rows[first_data];
    std::size_t c = 0;
    while (c < probe.size() && !parse_number(probe[c])) ++c;
    if (c == probe.size()) throw DataError("no numeric column in '" + path + "'");
    column.index = c;
  }

  if (column.has_header && column.index < rows.front().size()) {
    column.name = rows.front()[column.index];
  } else {
    column.name = "column " + std::to_string(column.index);
  }

  for (std::size_t r = first_data; r < rows.size(); ++r) {
    std::optional<double> value;
    if (column.index < rows[r].size()) value = parse_number(rows[r][column.index]);
    if (value && std::isfinite(*value)) {
      column.values.push_back(*value);
    } else if (strict) {
      throw DataError("'" + path + "' line " + std::to_string(line_numbers[r]) + ": column '" + column.name +
                      "' is not a finite number");
    } else {
      ++column.skipped_rows;
    }
  }
  if (column.values.empty()) throw DataError("column '" + column.name + "' in '" + path + "' has no numeric values");
  return column;
}

}  // namespace sgtail::cli
