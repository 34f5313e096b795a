#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sgtail::cli {

struct CsvColumn {
  std::string name;  ///< header text, or "column <index>" without a header
  std::size_t index = 0;
  std::vector<double> values;
  std::size_t skipped_rows = 0;  ///< rows whose cell did not parse
  bool has_header = false;
};

/// Reads one numeric column from a comma-separated file.
///
/// A header is assumed when any cell of the first non-empty row fails to parse
/// as a number. `selector` is a header name or a 0-based index; without one the
/// first column holding a number on the first data row is used. Unparseable
/// cells are counted and skipped, or throw DataError when `strict` is set.
/// Also throws DataError for a missing file, unknown column or empty result.
CsvColumn read_csv_column(const std::string& path, const std::optional<std::string>& selector = std::nullopt,
                          bool strict = false);

/// Parses a whole cell as a finite or infinite decimal number ("." only).
std::optional<double> parse_number(const std::string& cell);

}  // namespace sgtail::cli
