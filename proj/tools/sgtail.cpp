#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sgtail/cli/commands.hpp"
#include "sgtail/error.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kData = 2, kNonConvergence = 3 };

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  const std::uint64_t value = std::stoull(text, &used, 0);
  if (used != text.size()) throw std::invalid_argument(text);
  return value;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace sgtail;
  using namespace sgtail::cli;

  CLI::App app{"Symmetrized gamma tail diagnostics"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string seed_text = "0x5EED";
  std::optional<std::size_t> reps;
  int workers = 1;
  std::string format = "table";
  std::optional<std::string> out_path, svg_path;
  app.add_option("--seed", seed_text, "Master seed (decimal or 0x hex)")->capture_default_str();
  app.add_option("--reps", reps, "Replicates / simulations / draws, per command");
  app.add_option("--workers", workers, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")->capture_default_str()->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--out", out_path, "Write the report to a file");
  app.add_option("--svg", svg_path, "Write a chart (fig1, fig2, audit)");

  Table1Options t1;
  std::string unit = "table";
  auto* table1 = app.add_subcommand("table1", "Two-sided deviation probabilities");
  table1->add_option("--m", t1.m_list, "m values")->delimiter(',');
  table1->add_option("--k", t1.k_sigmas, "Deviation level in units")->capture_default_str();
  table1->add_option("--unit", unit, "table: unit 2; stddev: unit sqrt(2)")
      ->capture_default_str()->check(CLI::IsMember({"table", "stddev"}));

  Table3Options t3;
  std::string method = "ls-cf";
  auto* table3 = app.add_subcommand("table3", "Stable fits to normalized-sum characteristic functions");
  table3->add_option("--m", t3.m, "m")->capture_default_str();
  table3->add_option("--n", t3.n_list, "n values")->delimiter(',');
  table3->add_option("--delta", t3.window.delta, "Window start")->capture_default_str();
  table3->add_option("--Delta", t3.window.Delta, "Window end")->capture_default_str();
  table3->add_option("--grid", t3.window.grid_size, "Grid points")->capture_default_str();
  table3->add_option("--method", method, "ls-cf, loglog or both")
      ->capture_default_str()->check(CLI::IsMember({"ls-cf", "loglog", "loglog-regression", "both"}));

  Fig1Options f1;
  auto* fig1 = app.add_subcommand("fig1", "Tail ratio curve of the symmetrized gamma law");
  fig1->add_option("--m", f1.m, "m")->capture_default_str();
  fig1->add_option("--x-min", f1.x_min, "Range start")->capture_default_str();
  fig1->add_option("--x-max", f1.x_max, "Range end")->capture_default_str();
  fig1->add_option("--points", f1.points, "Grid points")->capture_default_str();
  fig1->add_option("--factor", f1.factor, "Ratio factor")->capture_default_str();

  Fig2Options f2;
  auto* fig2 = app.add_subcommand("fig2", "Normalized sums against a fitted stable law (--reps: replicates, default 1000)");
  fig2->add_option("--m", f2.m, "m")->capture_default_str();
  fig2->add_option("--n", f2.n, "Summands per replicate")->capture_default_str();
  fig2->add_option("--exponent", f2.exponent, "Normalization exponent")->capture_default_str();

  HillOptions hl;
  std::string mode = "upper";
  auto* hill = app.add_subcommand("hill", "Hill estimator experiment (--reps: simulations, default 100)");
  hill->add_option("--m", hl.m, "m")->capture_default_str();
  hill->add_option("--n", hl.n, "Sample size")->capture_default_str();
  hill->add_option("--mode", mode, "upper or absolute")->capture_default_str()->check(CLI::IsMember({"upper", "absolute"}));

  BoundsOptions bd;
  auto* bnds = app.add_subcommand("bounds", "Gauss and Chebyshev tail bounds (--reps: draws, default 1e6)");
  bnds->add_option("--d", bd.d_sigmas, "Levels in sigma units")->delimiter(',');
  bnds->add_option("--sigma", bd.sigma, "Standard deviation")->capture_default_str();
  bnds->add_option("--n", bd.n, "Sample size for expected counts")->capture_default_str();

  AuditOptions au;
  auto* audit = app.add_subcommand("audit", "Tail diagnostics for a CSV return series");
  audit->add_option("input", au.input_path, "CSV file")->required();
  audit->add_option("--column", au.column, "Column name or 0-based index");
  audit->add_flag("--strict", au.strict, "Abort on unparseable rows");

  RandsumOptions rs;
  auto* randsum = app.add_subcommand("randsum", "Random-sum convergence (--reps: replicates, default 1e5)");
  randsum->add_option("--m", rs.m, "m")->capture_default_str();
  randsum->add_option("--p", rs.p_schedule, "Decreasing p schedule")->delimiter(',');
  randsum->add_option("--component", rs.component, "Summand law")
      ->capture_default_str()->check(CLI::IsMember({"uniform", "normal", "sg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    RunConfig config;
    try {
      config.seed = parse_seed(seed_text);
    } catch (const std::exception&) {
      std::cerr << "error: --seed expects an unsigned 64-bit integer\n";
      return kUsage;
    }
    config.workers = workers;
    config.format = parse_output_format(format);
    config.output_path = out_path;
    config.svg_path = svg_path;
    if (reps) config.replicates = *reps;

    ReportDocument doc;
    if (*table1) {
      t1.unit = unit == "table" ? dist::DeviationUnit::kTableUnit : dist::DeviationUnit::kStdDev;
      doc = cmd_table1(t1, config);
    } else if (*table3) {
      if (method == "both") {
        t3.methods = {cffit::FitMethod::kLeastSquaresCf, cffit::FitMethod::kLogLogRegression};
      } else {
        t3.methods = {cffit::parse_fit_method(method)};
      }
      doc = cmd_table3(t3, config);
    } else if (*fig1) {
      doc = cmd_fig1(f1, config);
    } else if (*fig2) {
      if (reps) f2.replicates = *reps;
      doc = cmd_fig2(f2, config);
    } else if (*hill) {
      if (reps) hl.sims = *reps;
      hl.mode = mode == "upper" ? diagnostics::TailMode::kUpper : diagnostics::TailMode::kAbsolute;
      doc = cmd_hill(hl, config);
    } else if (*bnds) {
      if (reps) bd.mc_draws = *reps;
      doc = cmd_bounds(bd, config);
    } else if (*audit) {
      doc = cmd_audit(au, config);
    } else if (*randsum) {
      if (reps) rs.replicates = *reps;
      doc = cmd_randsum(rs, config);
    }
    std::cout << emit(doc);
    return kOk;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kData;
  } catch (const NonConvergence& e) {
    std::cerr << "numeric non-convergence: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  }
}
