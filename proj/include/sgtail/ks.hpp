#pragma once

#include <functional>
#include <span>
#include <vector>

namespace sgtail::stats {

/// Fraction of `sorted` that is <= x.
double empirical_cdf(std::span<const double> sorted, double x);

/// Kolmogorov–Smirnov distance sup |F_n - F| given the sample in ascending
/// order and the model CDF evaluated at each sample point.
double ks_statistic_from_cdf(std::span<const double> sorted, std::span<const double> model_cdf);

/// Same, evaluating `cdf` at each sample point.
double ks_statistic(std::span<const double> sorted, const std::function<double(double)>& cdf);

/// Asymptotic one-sample critical value sqrt(-ln(level/2) / 2) / sqrt(n).
double ks_critical_value(std::size_t n, double level = 0.01);

}  // namespace sgtail::stats
