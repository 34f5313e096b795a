#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgtail/cffit.hpp"
#include "sgtail/cli/report.hpp"
#include "sgtail/diagnostics.hpp"
#include "sgtail/dist.hpp"

namespace sgtail::cli {

// Each command fills doc.config from the RunConfig it was given, with
// `replicates` replaced by the count it actually used.

struct Table1Options {
  std::vector<double> m_list = {10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
  double k_sigmas = 10.0;
  dist::DeviationUnit unit = dist::DeviationUnit::kTableUnit;
};
/// Columns: m, k_sigmas, threshold, probability, reference, error.
ReportDocument cmd_table1(const Table1Options& options, const RunConfig& config);

struct Table3Options {
  double m = 20.0;
  std::vector<int> n_list = {1, 10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
  cffit::FitWindow window{};
  /// Two entries emit both fits and a comparison against the reference rows.
  std::vector<cffit::FitMethod> methods = {cffit::FitMethod::kLeastSquaresCf};
};
/// Columns: n, m_over_n, alpha, lambda, residual, method, ref_alpha, ref_lambda.
ReportDocument cmd_table3(const Table3Options& options, const RunConfig& config);

struct Fig1Options {
  double m = 50.0;
  double x_min = 1.0;
  double x_max = 50.0;
  int points = 99;
  double factor = 1.5;
};
/// Columns: x, ratio, defined.
ReportDocument cmd_fig1(const Fig1Options& options, const RunConfig& config);

struct Fig2Options {
  double m = 100.0;
  std::size_t n = 10000;
  std::size_t replicates = 1000;
  double exponent = 1.83;
};
/// Tables "fit" (alpha, lambda, residual, ks) and "ecdf" (x, empirical, stable).
ReportDocument cmd_fig2(const Fig2Options& options, const RunConfig& config);

struct HillOptions {
  double m = 10.0;
  std::size_t n = 10000;
  std::size_t sims = 100;
  diagnostics::TailMode mode = diagnostics::TailMode::kUpper;
};
/// Columns: rule, k, mean_gamma, stddev_gamma, mean_tail_index, reference.
ReportDocument cmd_hill(const HillOptions& options, const RunConfig& config);

struct BoundsOptions {
  std::vector<double> d_sigmas = {10.0, 40.0};
  double sigma = 1.0;
  double n = 50000.0;
  /// Extremal-mixture draws per level; 0 skips the simulation.
  std::size_t mc_draws = 1000000;
};
/// Tables "bounds" (d_sigmas, kind, bound, expected_exceedances, error) and
/// "attainment" (d_sigmas, draws, observed_rate, bound, std_error, z).
ReportDocument cmd_bounds(const BoundsOptions& options, const RunConfig& config);

struct AuditOptions {
  std::string input_path;
  std::optional<std::string> column;
  bool strict = false;
  diagnostics::TailReportConfig report{};
};
/// Tables "summary", "exceedances", "hill" and "tail_ratio".
ReportDocument cmd_audit(const AuditOptions& options, const RunConfig& config);

struct RandsumOptions {
  int m = 2;
  std::vector<double> p_schedule = {0.1, 0.01, 0.001};
  std::string component = "uniform";  ///< uniform, normal or sg
  std::size_t replicates = 100000;
};
/// Columns: p, mean_count, ks, critical_1pct, below_critical.
ReportDocument cmd_randsum(const RandsumOptions& options, const RunConfig& config);

/// Writes `render(doc, format)` to config.output_path (or returns it) and the
/// chart to config.svg_path when both are present.
std::string emit(const ReportDocument& doc);

}  // namespace sgtail::cli
