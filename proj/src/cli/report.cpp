#include "sgtail/cli/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>

#include <json.hpp>

#include "sgtail/error.hpp"

namespace sgtail::cli {

using Json = nlohmann::ordered_json;

std::string to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::kTable: return "table";
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kJson: return "json";
  }
  return "?";
}

OutputFormat parse_output_format(const std::string& name) {
  if (name == "table") return OutputFormat::kTable;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw DomainError("unknown output format '" + name + "'");
}

void RunConfig::validate() const {
  if (replicates < 1) throw DomainError("--reps must be >= 1");
  if (workers < 1) throw DomainError("--workers must be >= 1");
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw DomainError("table '" + name + "': row width does not match columns");
  rows.push_back(std::move(row));
}

const Table& ReportDocument::table(const std::string& name) const {
  for (const auto& t : payload) {
    if (t.name == name) return t;
  }
  throw DomainError("report has no table '" + name + "'");
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

std::string cell_text(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(const std::string& v) const { return v; }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, cell);
}

Json cell_json(const Cell& cell) {
  struct Visitor {
    Json operator()(std::monostate) const { return nullptr; }
    Json operator()(double v) const {
      if (!std::isfinite(v)) return nullptr;
      // Same digits as the text formats.
      return std::strtod(format_number(v).c_str(), nullptr);
    }
    Json operator()(std::int64_t v) const { return v; }
    Json operator()(const std::string& v) const { return v; }
    Json operator()(bool v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

std::string csv_escape(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json payload_json(const ReportDocument& doc) {
  Json payload = Json::object();
  for (const auto& table : doc.payload) {
    Json rows = Json::array();
    for (const auto& row : table.rows) {
      Json obj = Json::object();
      for (std::size_t c = 0; c < table.columns.size(); ++c) obj[table.columns[c]] = cell_json(row[c]);
      rows.push_back(std::move(obj));
    }
    payload[table.name] = std::move(rows);
  }
  return payload;
}

std::string payload_csv(const ReportDocument& doc) {
  std::ostringstream out;
  const bool many = doc.payload.size() > 1;
  for (std::size_t t = 0; t < doc.payload.size(); ++t) {
    const auto& table = doc.payload[t];
    if (t > 0) out << '\n';
    if (many) out << "# table: " << table.name << '\n';
    for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << csv_escape(table.columns[c]);
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_escape(cell_text(row[c]));
      out << '\n';
    }
  }
  return out.str();
}

std::string payload_table(const ReportDocument& doc) {
  std::ostringstream out;
  for (std::size_t t = 0; t < doc.payload.size(); ++t) {
    const auto& table = doc.payload[t];
    if (t > 0) out << '\n';
    out << "[" << table.name << "]\n";
    std::vector<std::size_t> width(table.columns.size());
    for (std::size_t c = 0; c < table.columns.size(); ++c) width[c] = table.columns[c].size();
    std::vector<std::vector<std::string>> text;
    for (const auto& row : table.rows) {
      std::vector<std::string> line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line.push_back(cell_text(row[c]));
        width[c] = std::max(width[c], line.back().size());
      }
      text.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c) out << "  ";
        out << cells[c] << std::string(width[c] - cells[c].size(), ' ');
      }
      out << '\n';
    };
    emit(table.columns);
    for (const auto& line : text) emit(line);
  }
  return out.str();
}

Json config_json(const RunConfig& config) {
  Json j = Json::object();
  j["seed"] = config.seed;
  j["replicates"] = config.replicates;
  j["format"] = to_string(config.format);
  j["output_path"] = config.output_path ? Json(*config.output_path) : Json(nullptr);
  j["svg_path"] = config.svg_path ? Json(*config.svg_path) : Json(nullptr);
  j["workers"] = config.workers;
  return j;
}

}  // namespace

std::string render_payload(const ReportDocument& doc, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: return payload_json(doc).dump(2);
    case OutputFormat::kCsv: return payload_csv(doc);
    case OutputFormat::kTable: return payload_table(doc);
  }
  return {};
}

std::string render(const ReportDocument& doc, OutputFormat format) {
  if (format == OutputFormat::kCsv) return payload_csv(doc);
  if (format == OutputFormat::kJson) {
    Json j = Json::object();
    j["command"] = doc.command;
    j["config"] = config_json(doc.config);
    j["payload"] = payload_json(doc);
    j["provenance"] = doc.provenance;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "command:     " << doc.command << '\n';
  out << "produced_at: " << doc.produced_at << '\n';
  out << "seed:        " << doc.config.seed << "  replicates: " << doc.config.replicates
      << "  workers: " << doc.config.workers << '\n';
  for (const auto& note : doc.provenance) out << "note: " << note << '\n';
  out << '\n' << payload_table(doc);
  return out.str();
}

namespace {

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Chart& chart) {
  constexpr double kWidth = 640, kHeight = 420;
  constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 55;
  double x_lo = INFINITY, x_hi = -INFINITY, y_lo = INFINITY, y_hi = -INFINITY;
  for (const auto& s : chart.series) {
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      x_lo = std::min(x_lo, s.x[i]);
      x_hi = std::max(x_hi, s.x[i]);
      y_lo = std::min(y_lo, s.y[i]);
      y_hi = std::max(y_hi, s.y[i]);
    }
  }
  if (!(x_hi > x_lo)) { x_lo -= 1; x_hi += 1; }
  if (!(y_hi > y_lo)) { y_lo -= 1; y_hi += 1; }
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto py = [&](double y) { return kTop + (1.0 - (y - y_lo) / (y_hi - y_lo)) * plot_h; };
  static const char* kColors[] = {"#1f4e9c", "#c0392b", "#27ae60", "#8e44ad"};

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
      << xml_escape(chart.title) << "</text>\n"
      << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w << "\" y2=\""
      << kTop + plot_h << "\"/>\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kTop + plot_h
      << "\"/>\n</g>\n";
  out << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = x_lo + (x_hi - x_lo) * i / 4.0;
    const double yv = y_lo + (y_hi - y_lo) * i / 4.0;
    out << "<text x=\"" << px(xv) << "\" y=\"" << kTop + plot_h + 16 << "\" text-anchor=\"middle\">"
        << format_number(std::round(xv * 1e4) / 1e4) << "</text>\n";
    out << "<text x=\"" << kLeft - 6 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">"
        << format_number(std::round(yv * 1e4) / 1e4) << "</text>\n";
  }
  out << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 12 << "\" text-anchor=\"middle\">"
      << xml_escape(chart.x_label) << "</text>\n"
      << "<text x=\"16\" y=\"" << kTop + plot_h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << kTop + plot_h / 2 << ")\">" << xml_escape(chart.y_label) << "</text>\n</g>\n";
  for (std::size_t s = 0; s < chart.series.size(); ++s) {
    const auto& series = chart.series[s];
    const char* color = kColors[s % 4];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < series.x.size() && i < series.y.size(); ++i) {
      if (!std::isfinite(series.x[i]) || !std::isfinite(series.y[i])) continue;
      out << format_number(std::round(px(series.x[i]) * 100) / 100) << ','
          << format_number(std::round(py(series.y[i]) * 100) / 100) << ' ';
    }
    out << "\"/>\n";
    const double ly = kTop + 14 + 16.0 * static_cast<double>(s);
    out << "<line x1=\"" << kLeft + 12 << "\" y1=\"" << ly - 4 << "\" x2=\"" << kLeft + 36 << "\" y2=\"" << ly - 4
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << kLeft + 42 << "\" y=\"" << ly << "\" font-family=\"sans-serif\" font-size=\"12\">"
        << xml_escape(series.name) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace sgtail::cli
