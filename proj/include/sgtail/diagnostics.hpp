#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sgtail::diagnostics {

/// A return series as ingested from a file or produced by simulation.
struct ReturnSeries {
  std::vector<double> values;
  std::string label;
  std::string source;  ///< file path, or "simulated"

  /// Throws DataError unless there are at least two values, all finite.
  void validate() const;
};

/// Which values feed the Hill estimator.
enum class TailMode {
  kAbsolute,  ///< |x| over the whole sample
  kUpper,     ///< the signed sample; only the upper tail is used
};

struct HillEstimate {
  std::size_t k = 0;
  double gamma = 0.0;  ///< mean log-spacing over the top k order statistics
  /// Tail index estimate 1/γ̂.
  double tail_index() const { return 1.0 / gamma; }
};

/// γ̂ = (1/k) Σ_{i=1}^{k} ln(X_(n-i+1) / X_(n-k)).
/// Requires 1 <= k < n and X_(n-k) > 0 after the mode transform.
double hill_estimate(std::span<const double> sample, std::size_t k, TailMode mode = TailMode::kAbsolute);

HillEstimate hill_point(std::span<const double> sample, std::size_t k, TailMode mode = TailMode::kAbsolute);

enum class KRule { kSqrt, kPow23, kPow45 };

std::string to_string(KRule rule);
/// floor(n^{1/2}), floor(n^{2/3}) or floor(n^{4/5}).
std::size_t k_for_rule(KRule rule, std::size_t n);

inline const std::vector<KRule> kAllRules = {KRule::kSqrt, KRule::kPow23, KRule::kPow45};

struct HillRuleMean {
  KRule rule;
  std::size_t k = 0;
  double mean_gamma = 0.0;
  double stddev_gamma = 0.0;
  double mean_tail_index = 0.0;  ///< mean of 1/γ̂ across simulations
};

/// Average Hill estimates over `sims` symmetrized gamma(m) samples of size n.
/// Simulation s draws from Rng::derive(seed, s); aggregation is in index order.
std::vector<HillRuleMean> hill_experiment(double m, std::size_t n, const std::vector<KRule>& rules, std::size_t sims,
                                          std::uint64_t seed, TailMode mode = TailMode::kUpper, int workers = 1);

/// m4 / m2² with central moments, no small-sample correction. Needs n >= 4.
double empirical_kurtosis(std::span<const double> sample);

struct ExceedanceRow {
  double k_sigmas = 0.0;
  std::size_t observed = 0;
  double expected_normal = 0.0;
  std::optional<double> gauss_bound_expected;  ///< only for k² >= 4/3
};

/// Counts #{|x - mean| > k σ̂}, σ̂ the population (1/n) standard deviation.
std::vector<ExceedanceRow> exceedance_counts(std::span<const double> sample, const std::vector<double>& k_sigmas);

struct TailRatioPoint {
  double x = 0.0;
  std::optional<double> ratio;  ///< empty when the denominator vanishes
};

/// S(x) / S(factor x) for an analytic survival function S. Points where
/// S(factor x) < 1e-300 are undefined.
std::vector<TailRatioPoint> tail_ratio_curve(const std::function<double(double)>& survival,
                                             const std::vector<double>& x_grid, double factor = 1.5);

/// Empirical version with S(x) = #{v > x} / n.
std::vector<TailRatioPoint> tail_ratio_curve(std::span<const double> sample, const std::vector<double>& x_grid,
                                             double factor = 1.5);

/// Value or the reason it could not be computed.
template <class T>
struct Field {
  std::optional<T> value;
  std::string error;

  bool ok() const { return value.has_value(); }
};

struct TailReportConfig {
  std::vector<double> k_sigmas = {3.0, 5.0, 10.0};
  std::vector<KRule> rules = kAllRules;
  TailMode hill_mode = TailMode::kUpper;
  double ratio_factor = 1.5;
  /// Quantile levels of the tail values defining the tail-ratio grid.
  std::vector<double> ratio_levels = {0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.975, 0.99};
};

struct TailReport {
  std::string label;
  std::string source;
  std::size_t n = 0;
  double mean = 0.0;
  double sigma = 0.0;
  Field<double> kurtosis;
  Field<std::vector<ExceedanceRow>> exceedances;
  std::vector<std::pair<KRule, Field<HillEstimate>>> hill;
  Field<std::vector<TailRatioPoint>> tail_ratio;
};

/// Runs every diagnostic; a failing one is recorded in its field rather than
/// aborting the report.
TailReport build_tail_report(const ReturnSeries& series, const TailReportConfig& config = {});

}  // namespace sgtail::diagnostics
