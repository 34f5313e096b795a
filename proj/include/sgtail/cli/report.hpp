#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sgtail::cli {

enum class OutputFormat { kTable, kCsv, kJson };

std::string to_string(OutputFormat format);
OutputFormat parse_output_format(const std::string& name);

/// Options shared by every subcommand.
struct RunConfig {
  std::uint64_t seed = 0x5EED;
  std::size_t replicates = 1;
  OutputFormat format = OutputFormat::kTable;
  std::optional<std::string> output_path;
  std::optional<std::string> svg_path;
  int workers = 1;

  /// Throws DomainError unless replicates >= 1 and workers >= 1.
  void validate() const;
};

using Cell = std::variant<std::monostate, double, std::int64_t, std::string, bool>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

struct ChartSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

struct Chart {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<ChartSeries> series;
};

struct ReportDocument {
  std::string command;
  RunConfig config;
  std::string produced_at;  ///< UTC, ISO 8601
  std::vector<Table> payload;
  std::vector<std::string> provenance;
  std::optional<Chart> chart;

  const Table& table(const std::string& name) const;
};

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

/// Numbers print with 12 significant digits in every format.
std::string format_number(double value);

/// Payload tables only. Identical for identical inputs and seed, whatever the
/// worker count or timestamp.
std::string render_payload(const ReportDocument& doc, OutputFormat format);

/// Complete document. JSON has top-level keys command, config, payload and
/// provenance; CSV is the payload alone; the table format adds a header block.
std::string render(const ReportDocument& doc, OutputFormat format);

/// Minimal SVG 1.1 line chart with axes, one polyline per series and a legend.
std::string render_svg(const Chart& chart);

}  // namespace sgtail::cli
