#include "sgtail/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sgtail/dist.hpp"
#include "sgtail/error.hpp"
#include "sgtail/parallel.hpp"
#include "sgtail/rng.hpp"

namespace sgtail::diagnostics {

void ReturnSeries::validate() const {
  if (values.size() < 2) throw DataError("ReturnSeries '" + label + "': need at least two values");
  for (double v : values) {
    if (!std::isfinite(v)) throw DataError("ReturnSeries '" + label + "': non-finite value");
  }
}

namespace {

std::vector<double> tail_values(std::span<const double> sample, TailMode mode) {
  std::vector<double> values(sample.begin(), sample.end());
  if (mode == TailMode::kAbsolute) {
    for (auto& v : values) v = std::abs(v);
  }
  return values;
}

double mean_of(std::span<const double> sample) {
  return std::accumulate(sample.begin(), sample.end(), 0.0) / static_cast<double>(sample.size());
}

double population_sd(std::span<const double> sample, double mean) {
  double ss = 0.0;
  for (double v : sample) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(sample.size()));
}

}  // namespace

HillEstimate hill_point(std::span<const double> sample, std::size_t k, TailMode mode) {
  const std::size_t n = sample.size();
  if (k < 1 || k >= n) throw DomainError("hill_estimate: k must satisfy 1 <= k < n");
  auto values = tail_values(sample, mode);
  // values[n - k - 1] becomes X_(n-k); everything after it is the top k.
  const auto pivot = values.begin() + static_cast<std::ptrdiff_t>(n - k - 1);
  std::nth_element(values.begin(), pivot, values.end());
  const double threshold = *pivot;
  if (!(threshold > 0.0)) throw DataError("hill_estimate: order statistic X_(n-k) is not positive");
  double sum = 0.0;
  for (auto it = pivot + 1; it != values.end(); ++it) sum += std::log(*it / threshold);
  return {k, sum / static_cast<double>(k)};
}

double hill_estimate(std::span<const double> sample, std::size_t k, TailMode mode) {
  return hill_point(sample, k, mode).gamma;
}

std::string to_string(KRule rule) {
  switch (rule) {
    case KRule::kSqrt: return "sqrt";
    case KRule::kPow23: return "pow-2/3";
    case KRule::kPow45: return "pow-4/5";
  }
  return "?";
}

std::size_t k_for_rule(KRule rule, std::size_t n) {
  const double dn = static_cast<double>(n);
  double k = 0.0;
  switch (rule) {
    case KRule::kSqrt: k = std::sqrt(dn); break;
    case KRule::kPow23: k = std::cbrt(dn * dn); break;
    case KRule::kPow45: k = std::pow(dn, 0.8); break;
  }
  // Guard exact powers such as 1000^{2/3} against rounding just below the integer.
  return static_cast<std::size_t>(std::floor(k * (1.0 + 1e-12)));
}

std::vector<HillRuleMean> hill_experiment(double m, std::size_t n, const std::vector<KRule>& rules, std::size_t sims,
                                          std::uint64_t seed, TailMode mode, int workers) {
  if (sims < 1) throw DomainError("hill_experiment: sims must be >= 1");
  if (rules.empty()) throw DomainError("hill_experiment: no k rules given");
  const dist::SymmetrizedGamma law(m);
  std::vector<std::size_t> ks;
  for (KRule rule : rules) ks.push_back(k_for_rule(rule, n));
  std::vector<std::vector<double>> gammas(sims, std::vector<double>(rules.size()));
  parallel_for_index(sims, workers, [&](std::size_t s) {
    Rng rng = Rng::derive(seed, s);
    const auto sample = dist::sg_sample(law, rng, n);
    for (std::size_t r = 0; r < rules.size(); ++r) gammas[s][r] = hill_estimate(sample, ks[r], mode);
  });
  std::vector<HillRuleMean> out;
  for (std::size_t r = 0; r < rules.size(); ++r) {
    double sum = 0.0;
    double sum_inv = 0.0;
    for (std::size_t s = 0; s < sims; ++s) {
      sum += gammas[s][r];
      sum_inv += 1.0 / gammas[s][r];
    }
    const double mean = sum / static_cast<double>(sims);
    double ss = 0.0;
    for (std::size_t s = 0; s < sims; ++s) ss += (gammas[s][r] - mean) * (gammas[s][r] - mean);
    const double sd = sims > 1 ? std::sqrt(ss / static_cast<double>(sims - 1)) : 0.0;
    out.push_back({rules[r], ks[r], mean, sd, sum_inv / static_cast<double>(sims)});
  }
  return out;
}

double empirical_kurtosis(std::span<const double> sample) {
  if (sample.size() < 4) throw DomainError("empirical_kurtosis: need at least four values");
  const double mean = mean_of(sample);
  double m2 = 0.0;
  double m4 = 0.0;
  for (double v : sample) {
    const double d2 = (v - mean) * (v - mean);
    m2 += d2;
    m4 += d2 * d2;
  }
  const double n = static_cast<double>(sample.size());
  m2 /= n;
  m4 /= n;
  if (!(m2 > 0.0)) throw DegenerateSample("empirical_kurtosis: sample variance is zero");
  return m4 / (m2 * m2);
}

std::vector<ExceedanceRow> exceedance_counts(std::span<const double> sample, const std::vector<double>& k_sigmas) {
  if (sample.empty()) throw DataError("exceedance_counts: empty sample");
  const double mean = mean_of(sample);
  const double sigma = population_sd(sample, mean);
  if (!(sigma > 0.0)) throw DegenerateSample("exceedance_counts: sample variance is zero");
  const double n = static_cast<double>(sample.size());
  std::vector<ExceedanceRow> rows;
  for (double k : k_sigmas) {
    if (!(k > 0.0)) throw DomainError("exceedance_counts: levels must be positive");
    ExceedanceRow row;
    row.k_sigmas = k;
    const double limit = k * sigma;
    row.observed = static_cast<std::size_t>(
        std::count_if(sample.begin(), sample.end(), [&](double v) { return std::abs(v - mean) > limit; }));
    row.expected_normal = n * dist::normal_two_sided_tail(k);
    if (k * k >= 4.0 / 3.0) row.gauss_bound_expected = n * 4.0 / (9.0 * k * k);
    rows.push_back(row);
  }
  return rows;
}

namespace {

void check_ratio_args(const std::vector<double>& x_grid, double factor) {
  if (!(factor >= 1.0)) throw DomainError("tail_ratio_curve: factor must be >= 1");
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    if (!(x_grid[i] > 0.0) || (i > 0 && !(x_grid[i] > x_grid[i - 1]))) {
      throw DomainError("tail_ratio_curve: grid must be positive and increasing");
    }
  }
}

}  // namespace

std::vector<TailRatioPoint> tail_ratio_curve(const std::function<double(double)>& survival,
                                             const std::vector<double>& x_grid, double factor) {
  check_ratio_args(x_grid, factor);
  std::vector<TailRatioPoint> out;
  out.reserve(x_grid.size());
  for (double x : x_grid) {
    const double denom = survival(factor * x);
    TailRatioPoint point{x, std::nullopt};
    if (denom >= 1e-300) point.ratio = survival(x) / denom;
    out.push_back(point);
  }
  return out;
}

std::vector<TailRatioPoint> tail_ratio_curve(std::span<const double> sample, const std::vector<double>& x_grid,
                                             double factor) {
  check_ratio_args(x_grid, factor);
  if (sample.empty()) throw DataError("tail_ratio_curve: empty sample");
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  auto count_above = [&](double x) {
    return static_cast<double>(sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), x));
  };
  std::vector<TailRatioPoint> out;
  out.reserve(x_grid.size());
  for (double x : x_grid) {
    const double denom = count_above(factor * x);
    TailRatioPoint point{x, std::nullopt};
    if (denom > 0.0) point.ratio = count_above(x) / denom;
    out.push_back(point);
  }
  return out;
}

TailReport build_tail_report(const ReturnSeries& series, const TailReportConfig& config) {
  series.validate();
  const std::span<const double> values(series.values);
  TailReport report;
  report.label = series.label;
  report.source = series.source;
  report.n = values.size();
  report.mean = mean_of(values);
  report.sigma = population_sd(values, report.mean);

  auto capture = [](auto& field, auto&& compute) {
    try {
      field.value = compute();
    } catch (const std::exception& e) {
      field.error = e.what();
    }
  };

  capture(report.kurtosis, [&] { return empirical_kurtosis(values); });
  capture(report.exceedances, [&] { return exceedance_counts(values, config.k_sigmas); });
  for (KRule rule : config.rules) {
    Field<HillEstimate> field;
    capture(field, [&] { return hill_point(values, k_for_rule(rule, values.size()), config.hill_mode); });
    report.hill.emplace_back(rule, field);
  }
  capture(report.tail_ratio, [&] {
    auto tail = tail_values(values, config.hill_mode);
    std::erase_if(tail, [](double v) { return !(v > 0.0); });
    if (tail.empty()) throw DataError("tail_ratio_curve: no positive values");
    std::sort(tail.begin(), tail.end());
    std::vector<double> grid;
    for (double level : config.ratio_levels) {
      const double x = tail[static_cast<std::size_t>(level * static_cast<double>(tail.size() - 1))];
      if (grid.empty() || x > grid.back()) grid.push_back(x);
    }
    return tail_ratio_curve(values, grid, config.ratio_factor);
  });
  return report;
}

}  // namespace sgtail::diagnostics
